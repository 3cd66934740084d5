//! High-precision floating evaluation of exact values.
//!
//! Only used to screen candidates and to report decimals. Equality is
//! always decided in exact arithmetic.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use super::{GoldenNumber, Rational, TowerElement};

/// Environment variable selecting the mantissa width in bits.
pub const PRECISION_ENV: &str = "GOLDENTILES_PRECISION_BITS";
pub const DEFAULT_PRECISION_BITS: usize = 128;
pub const MIN_PRECISION_BITS: usize = 80;

const RM: RoundingMode = RoundingMode::ToEven;

/// Evaluation context: precision, cached constants and the radicals of
/// the tower.
pub struct NumCtx {
    bits: usize,
    consts: Consts,
    tau: BigFloat,
    rho: BigFloat,
    sqrt3: BigFloat,
    pi: BigFloat,
}

impl NumCtx {
    /// `bits` is clamped to at least [`MIN_PRECISION_BITS`].
    pub fn new(bits: usize) -> Self {
        let bits = bits.max(MIN_PRECISION_BITS);
        let mut consts = Consts::new().expect("astro-float constants cache");
        let five = BigFloat::from_i64(5, bits);
        let one = BigFloat::from_i64(1, bits);
        let two = BigFloat::from_i64(2, bits);
        let tau = one.add(&five.sqrt(bits, RM), bits, RM).div(&two, bits, RM);
        let rho = tau.add(&two, bits, RM).sqrt(bits, RM);
        let sqrt3 = BigFloat::from_i64(3, bits).sqrt(bits, RM);
        let pi = consts.pi(bits, RM);
        NumCtx {
            bits,
            consts,
            tau,
            rho,
            sqrt3,
            pi,
        }
    }

    /// Precision from `GOLDENTILES_PRECISION_BITS`, default 128.
    pub fn from_env() -> Self {
        let bits = std::env::var(PRECISION_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_PRECISION_BITS);
        NumCtx::new(bits)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn pi(&self) -> BigFloat {
        self.pi.clone()
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn rational(&mut self, r: &Rational) -> BigFloat {
        if let (Ok(n), Ok(d)) = (i64::try_from(r.numer()), i64::try_from(r.denom())) {
            let num = BigFloat::from_i64(n, self.bits);
            return if d == 1 { num } else { num.div(&BigFloat::from_i64(d, self.bits), self.bits, RM) };
        }
        let num = BigFloat::parse(&r.numer().to_string(), Radix::Dec, self.bits, RM, &mut self.consts);
        let den = BigFloat::parse(&r.denom().to_string(), Radix::Dec, self.bits, RM, &mut self.consts);
        num.div(&den, self.bits, RM)
    }

    pub fn golden(&mut self, g: &GoldenNumber) -> BigFloat {
        let a = self.rational(&g.a);
        let b = self.rational(&g.b);
        a.add(&b.mul(&self.tau, self.bits, RM), self.bits, RM)
    }

    pub fn tower(&mut self, t: &TowerElement) -> BigFloat {
        let p = self.bits;
        let mut acc = BigFloat::from_i64(0, p);
        for (i, c) in t.coeffs().iter().enumerate() {
            let mut v = self.rational(c);
            if i & 1 == 1 {
                v = v.mul(&self.tau, p, RM);
            }
            if i & 2 == 2 {
                v = v.mul(&self.rho, p, RM);
            }
            if i & 4 == 4 {
                v = v.mul(&self.sqrt3, p, RM);
            }
            acc = acc.add(&v, p, RM);
        }
        acc
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, RM)
    }

    pub fn acos(&mut self, a: &BigFloat) -> BigFloat {
        a.acos(self.bits, RM, &mut self.consts)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.bits, RM, &mut self.consts)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.bits, RM, &mut self.consts)
    }

    /// |a − b| < tol.
    pub fn close(&self, a: &BigFloat, b: &BigFloat, tol: f64) -> bool {
        let d = self.sub(a, b).abs();
        let t = BigFloat::from_f64(tol, self.bits);
        matches!(d.cmp(&t), Some(c) if c < 0)
    }

    pub fn to_f64(&self, a: &BigFloat) -> f64 {
        a.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Full-precision decimal rendering (scientific notation).
    pub fn decimal(&mut self, a: &BigFloat) -> String {
        a.format(Radix::Dec, RM, &mut self.consts)
            .unwrap_or_else(|_| "NaN".into())
    }
}

impl Default for NumCtx {
    fn default() -> Self {
        NumCtx::new(DEFAULT_PRECISION_BITS)
    }
}

/// 15-digit decimal rendering of an f64.
pub fn decimal15(x: f64) -> String {
    format!("{x:.15}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radicals() {
        let mut ctx = NumCtx::new(128);
        let tau = ctx.golden(&GoldenNumber::tau());
        assert!((ctx.to_f64(&tau) - 1.618033988749895).abs() < 1e-15);
        let rho = ctx.tower(&TowerElement::rho());
        let rho2 = ctx.mul(&rho, &rho);
        let want = ctx.golden(&GoldenNumber::int(2, 1));
        assert!(ctx.close(&rho2, &want, 1e-30));
        let third = ctx.rational(&Rational::new(1, 3));
        assert!((ctx.to_f64(&third) - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn precision_floor() {
        assert_eq!(NumCtx::new(16).bits(), MIN_PRECISION_BITS);
    }
}
