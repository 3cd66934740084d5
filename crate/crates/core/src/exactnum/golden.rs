//! The quadratic field Q[τ], τ = (1+√5)/2.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::Scalar;

/// An element `a + b·τ` of Q[τ] with τ² = τ + 1.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GoldenNumber {
    pub a: Rational,
    pub b: Rational,
}

impl GoldenNumber {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>) -> Self {
        GoldenNumber {
            a: a.into(),
            b: b.into(),
        }
    }

    /// `a + b·τ` from small integers.
    pub fn int(a: i64, b: i64) -> Self {
        GoldenNumber::new(a, b)
    }

    pub fn rational(a: impl Into<Rational>) -> Self {
        GoldenNumber::new(a, 0)
    }

    pub fn tau() -> Self {
        GoldenNumber::int(0, 1)
    }

    /// τ^n for any integer n; τ⁻¹ = τ − 1.
    pub fn tau_pow(n: i32) -> Self {
        let base = if n >= 0 {
            GoldenNumber::tau()
        } else {
            GoldenNumber::int(-1, 1)
        };
        (0..n.unsigned_abs()).fold(GoldenNumber::one(), |acc, _| &acc * &base)
    }

    /// √5 = 2τ − 1.
    pub fn sqrt5() -> Self {
        GoldenNumber::int(-1, 2)
    }

    /// The nontrivial Galois automorphism τ ↦ 1 − τ = −1/τ.
    pub fn conjugate(&self) -> Self {
        GoldenNumber {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// (τ⁰ part, τ¹ part).
    pub fn tau_components(&self) -> (Rational, Rational) {
        (self.a.clone(), self.b.clone())
    }

    /// Field norm x·conj(x) = a² + ab − b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        let inv = n.recip()?;
        let c = self.conjugate();
        Some(GoldenNumber {
            a: &c.a * &inv,
            b: &c.b * &inv,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenNumber {
            a: &self.a * r,
            b: &self.b * r,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(GoldenNumber::one(), |acc, _| &acc * self)
    }

    /// Exact sign of the real number a + bτ.
    ///
    /// With u = 2a + b, a + bτ = (u + b√5)/2; mixed signs are settled by
    /// comparing u² with 5b².
    pub fn signum(&self) -> i32 {
        let u = &self.a + &self.a + &self.b;
        let su = u.signum();
        let sv = self.b.signum();
        if su == 0 || sv == 0 || su == sv {
            return if su != 0 { su } else { sv };
        }
        let lhs = &u * &u;
        let rhs = &self.b * &self.b * Rational::from(5);
        match lhs.cmp(&rhs) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn to_f64(&self) -> f64 {
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64() + self.b.to_f64() * tau
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    /// Real ordering of the embedded numbers (τ ≈ 1.618).
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

/// Square root inside Q[τ].
///
/// Writing √(q + rτ) = a + bτ gives a² + b² = q and 2ab + b² = r. For
/// b ≠ 0, eliminating a = (r − b²)/(2b) leaves 5b⁴ − (4q + 2r)b² + r² = 0,
/// whose rational roots are found exactly (quadratic in b², then a rational
/// square root). Returns the non-negative root.
pub fn is_square_in_qtau(x: &GoldenNumber) -> Option<GoldenNumber> {
    let sign = x.signum();
    if sign < 0 {
        return None;
    }
    if sign == 0 {
        return Some(GoldenNumber::zero());
    }
    let q = &x.a;
    let r = &x.b;
    let mut candidates = Vec::new();
    if r.is_zero() {
        if let Some(a) = q.sqrt() {
            candidates.push(GoldenNumber::rational(a));
        }
    }
    // 5B² − (4q + 2r)B + r² = 0 with B = b².
    let two = Rational::from(2);
    let four = Rational::from(4);
    let five = Rational::from(5);
    let lin = &four * q + &two * r;
    let disc = &lin * &lin - Rational::from(20) * r * r;
    if let Some(sd) = disc.sqrt() {
        for s in [sd.clone(), -sd] {
            let big_b = (&lin + &s) / (&two * &five);
            if big_b.signum() <= 0 {
                continue;
            }
            if let Some(b) = big_b.sqrt() {
                for b in [b.clone(), -b] {
                    let a = (r - &b * &b) / (&two * &b);
                    candidates.push(GoldenNumber { a, b });
                }
            }
        }
    }
    candidates
        .into_iter()
        .filter(|y| y.signum() >= 0 && &(y * y) == x)
        .min()
}

impl fmt::Display for GoldenNumber {
    /// Renders as `a+b·τ`, e.g. `5+8τ`, `-1/2τ`, `3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}", tau_term(&self.b)),
            (false, false) => {
                let t = tau_term(&self.b);
                if t.starts_with('-') {
                    write!(f, "{}{}", self.a, t)
                } else {
                    write!(f, "{}+{}", self.a, t)
                }
            }
        }
    }
}

fn tau_term(b: &Rational) -> String {
    if *b == Rational::one() {
        "τ".to_string()
    } else if *b == -Rational::one() {
        "-τ".to_string()
    } else {
        format!("{b}τ")
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GoldenNumber {
    fn from(r: Rational) -> Self {
        GoldenNumber::rational(r)
    }
}

impl From<i64> for GoldenNumber {
    fn from(n: i64) -> Self {
        GoldenNumber::int(n, 0)
    }
}

impl Zero for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber::int(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenNumber {
    fn one() -> Self {
        GoldenNumber::int(1, 0)
    }
}

impl Add<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        // (a + bτ)(c + dτ) = (ac + bd) + (ad + bc + bd)τ
        let bd = &self.b * &rhs.b;
        GoldenNumber {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Div<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn div(self, rhs: &GoldenNumber) -> GoldenNumber {
        self * &rhs.inverse().expect("division by zero in Q[tau]")
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

super::owned_ops!(GoldenNumber);

impl Scalar for GoldenNumber {
    fn inverse(&self) -> Option<Self> {
        GoldenNumber::inverse(self)
    }
}

impl std::iter::Sum for GoldenNumber {
    fn sum<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GoldenNumber {
        GoldenNumber::int(a, b)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(GoldenNumber::tau().conjugate(), g(1, -1));
        // conj(√5) = −√5
        assert_eq!(g(1, 2).conjugate(), g(3, -2));
        assert_eq!(GoldenNumber::sqrt5().conjugate(), -GoldenNumber::sqrt5());
        let x = GoldenNumber::new(Rational::new(3, 2), Rational::new(5, 7));
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn tau_components_examples() {
        assert_eq!(g(5, 8).tau_components(), (5.into(), 8.into()));
        assert_eq!(g(0, 0).tau_components(), (0.into(), 0.into()));
        assert_eq!(g(0, -2).tau_components(), (0.into(), (-2).into()));
    }

    #[test]
    fn tau_relations() {
        let t = GoldenNumber::tau();
        assert_eq!(&t * &t, g(1, 1));
        assert_eq!(GoldenNumber::tau_pow(3), g(1, 2));
        assert_eq!(GoldenNumber::tau_pow(-1), g(-1, 1));
        assert_eq!(&GoldenNumber::tau_pow(-2) * &GoldenNumber::tau_pow(2), g(1, 0));
        assert_eq!(&GoldenNumber::sqrt5() * &GoldenNumber::sqrt5(), g(5, 0));
    }

    #[test]
    fn square_roots() {
        assert_eq!(is_square_in_qtau(&g(3, 0)), None);
        assert_eq!(is_square_in_qtau(&g(2, 3)), Some(g(1, 1)));
        assert_eq!(is_square_in_qtau(&g(5, 8)), Some(g(1, 2)));
        assert_eq!(is_square_in_qtau(&g(5, 0)), Some(g(-1, 2)));
        assert_eq!(is_square_in_qtau(&g(2, 1)), None, "τ+2 is not a square");
        assert_eq!(is_square_in_qtau(&g(-1, 0)), None);
        assert_eq!(is_square_in_qtau(&g(0, 0)), Some(g(0, 0)));
        // (τ−1)² = 2 − τ; the non-negative root is τ − 1.
        assert_eq!(is_square_in_qtau(&g(2, -1)), Some(g(-1, 1)));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(g(-1, 1).signum(), 1);
        assert_eq!(g(2, -1).signum(), 1);
        assert_eq!(g(-2, 1).signum(), -1);
        assert_eq!(g(1, -1).signum(), -1);
        assert_eq!(g(0, 0).signum(), 0);
        assert!(g(0, 1) > g(1, 0));
    }

    #[test]
    fn display() {
        assert_eq!(g(5, 8).to_string(), "5+8τ");
        assert_eq!(g(-1, -1).to_string(), "-1-τ");
        assert_eq!(g(0, 1).to_string(), "τ");
        assert_eq!(g(3, 0).to_string(), "3");
        let j = serde_json::to_string(&GoldenNumber::new(Rational::new(1, 12), 2)).unwrap();
        assert_eq!(j, r#"{"a":"1/12","b":"2"}"#);
    }
}
