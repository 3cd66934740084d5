//! Conway–Radin–Sadun basis angles ⟨p⟩_d of the space of pure geodetic
//! angles, and the two decompositions α = ⟨5⟩₁ and γ = π/2 − 2⟨3⟩₅.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::angles::{golden_angle_value, GoldenAngle};
use crate::error::{Error, Result};
use crate::exactnum::numeric::NumCtx;
use crate::exactnum::{GoldenNumber, Rational};

/// Largest exponent s tried when solving 4pˢ = a² + d·b².
pub const MAX_EXPONENT: u32 = 20;

/// Upper bound on the number of a-values tried per exponent.
const MAX_CANDIDATES: u128 = 50_000_000;

/// ⟨p⟩_d = (1/s)·arccos(a / (2p^{s/2})) with 4pˢ = a² + d·b².
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrsAngle {
    pub p: u64,
    pub d: u64,
    pub s: u32,
    pub a: u64,
    pub b: u64,
    #[serde(rename = "value_decimal_string")]
    pub value: String,
}

impl CrsAngle {
    /// High-precision value of the angle.
    pub fn value(&self, ctx: &mut NumCtx) -> BigFloat {
        crs_value(self.p, self.s, self.a, ctx)
    }

    /// 4pˢ = a² + d·b² in exact integers.
    pub fn equation_holds(&self) -> bool {
        let lhs = BigInt::from(4) * BigInt::from(self.p).pow(self.s);
        let rhs = BigInt::from(self.a).pow(2) + BigInt::from(self.d) * BigInt::from(self.b).pow(2);
        lhs == rhs
    }

    /// No admissible (a, b) exists for any smaller exponent.
    pub fn exponent_is_minimal(&self) -> bool {
        (1..self.s).all(|s| matches!(solve_exponent(self.p, self.d, s), Ok(None)))
    }

    /// cos(s·θ)·2p^{s/2} = a to within `tol`.
    pub fn cosine_identity_holds(&self, ctx: &mut NumCtx, tol: f64) -> bool {
        let theta = self.value(ctx);
        let st = ctx.mul(&ctx.int(self.s as i64), &theta);
        let c = ctx.cos(&st);
        let scale = half_power(self.p, self.s, ctx);
        let lhs = ctx.mul(&ctx.mul(&c, &ctx.int(2)), &scale);
        ctx.close(&lhs, &ctx.int(self.a as i64), tol)
    }
}

fn half_power(p: u64, s: u32, ctx: &mut NumCtx) -> BigFloat {
    let ps = ctx.rational(&Rational::from(BigInt::from(p).pow(s)));
    ctx.sqrt(&ps)
}

fn crs_value(p: u64, s: u32, a: u64, ctx: &mut NumCtx) -> BigFloat {
    let hp = half_power(p, s, ctx);
    let denom = ctx.mul(&ctx.int(2), &hp);
    let num = ctx.rational(&Rational::from(a as i64));
    let c = ctx.div(&num, &denom);
    let angle = ctx.acos(&c);
    ctx.div(&angle, &ctx.int(s as i64))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..=n.sqrt()).all(|k| n % k != 0)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && (2..=n.sqrt()).all(|k| n % (k * k) != 0)
}

fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Checks the conditions on (p, d) for ⟨p⟩_d to be defined.
pub fn validate_pair(p: u64, d: u64) -> Result<()> {
    let invalid = |reason: &str| {
        Err(Error::InvalidPair {
            p,
            d,
            reason: reason.into(),
        })
    };
    if !is_prime(p) {
        return invalid("p is not prime");
    }
    if !is_squarefree(d) {
        return invalid("d is not a positive squarefree integer");
    }
    if d % p == 0 {
        return invalid("p divides d");
    }
    if p == 2 {
        if d % 8 != 7 {
            return invalid("p = 2 requires d ≡ 7 (mod 8)");
        }
        return Ok(());
    }
    let minus_d = (p - d % p) % p;
    if mod_pow(minus_d, (p - 1) / 2, p) != 1 {
        return invalid("−d is not a square modulo p");
    }
    Ok(())
}

fn b_admissible(d: u64, b: u64) -> bool {
    b > 0
        && match d {
            1 => b % 4 == 0,
            3 => b % 2 == 0,
            _ => true,
        }
}

/// Smallest a ≥ 0 with an admissible b for the exponent s.
fn solve_exponent(p: u64, d: u64, s: u32) -> Result<Option<(u64, u64)>> {
    let too_large = || Error::InvalidPair {
        p,
        d,
        reason: format!("4p^{s} exceeds the search range"),
    };
    let four_ps = (p as u128)
        .checked_pow(s)
        .and_then(|x| x.checked_mul(4))
        .ok_or_else(too_large)?;
    let a_max = four_ps.sqrt();
    if a_max > MAX_CANDIDATES {
        return Err(too_large());
    }
    let d = d as u128;
    for a in 0..=a_max {
        let rest = four_ps - a * a;
        if rest % d != 0 {
            continue;
        }
        let b2 = rest / d;
        let b = b2.sqrt();
        if b * b == b2 && b_admissible(d as u64, b as u64) {
            return Ok(Some((a as u64, b as u64)));
        }
    }
    Ok(None)
}

pub fn crs_construct(p: u64, d: u64, ctx: &mut NumCtx) -> Result<CrsAngle> {
    validate_pair(p, d)?;
    for s in 1..=MAX_EXPONENT {
        if let Some((a, b)) = solve_exponent(p, d, s)? {
            let v = crs_value(p, s, a, ctx);
            return Ok(CrsAngle {
                p,
                d,
                s,
                a,
                b,
                value: ctx.decimal(&v),
            });
        }
    }
    Err(Error::InvalidPair {
        p,
        d,
        reason: format!("no solution with s ≤ {MAX_EXPONENT}"),
    })
}

/// sin²θ is rational, given the exact cos²θ.
pub fn is_pure_geodetic(cos2: &GoldenNumber) -> bool {
    (&GoldenNumber::from(1) - cos2).is_rational()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub alpha_basis: CrsAngle,
    pub gamma_basis: CrsAngle,
    /// |α − ⟨5⟩₁|.
    pub alpha_error: f64,
    /// |γ − (π/2 − 2⟨3⟩₅)|.
    pub gamma_error: f64,
    pub tolerance: f64,
    /// ⟨5⟩₁ and ⟨3⟩₅ are different basis elements, so ᾱ and γ̄ are
    /// independent over Q.
    pub distinct_basis_elements: bool,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.alpha_error < self.tolerance
            && self.gamma_error < self.tolerance
            && self.distinct_basis_elements
    }
}

pub const DECOMPOSITION_TOLERANCE: f64 = 1e-12;

pub fn verify_decompositions(ctx: &mut NumCtx) -> Result<DecompositionReport> {
    let five = crs_construct(5, 1, ctx)?;
    let three = crs_construct(3, 5, ctx)?;
    let alpha = golden_angle_value(GoldenAngle::Alpha, ctx);
    let gamma = golden_angle_value(GoldenAngle::Gamma, ctx);
    let five_value = five.value(ctx);
    let alpha_diff = ctx.sub(&alpha, &five_value);
    let half_pi = ctx.div(&ctx.pi(), &ctx.int(2));
    let three_value = three.value(ctx);
    let twice = ctx.mul(&ctx.int(2), &three_value);
    let gamma_diff = ctx.sub(&gamma, &ctx.sub(&half_pi, &twice));
    let alpha_error = ctx.to_f64(&alpha_diff.abs());
    let gamma_error = ctx.to_f64(&gamma_diff.abs());
    let distinct = (five.p, five.d) != (three.p, three.d);
    Ok(DecompositionReport {
        alpha_basis: five,
        gamma_basis: three,
        alpha_error,
        gamma_error,
        tolerance: DECOMPOSITION_TOLERANCE,
        distinct_basis_elements: distinct,
    })
}
