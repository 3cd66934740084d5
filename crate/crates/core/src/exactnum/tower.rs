//! The degree-8 field Q[τ, ρ, √3] with ρ = √(τ+2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::golden::{is_square_in_qtau, GoldenNumber};
use super::rational::Rational;
use super::Scalar;

/// Names of the ordered basis {1, τ, ρ, τρ, √3, τ√3, ρ√3, τρ√3}.
pub const TOWER_BASIS: [&str; 8] = ["1", "τ", "ρ", "τρ", "√3", "τ√3", "ρ√3", "τρ√3"];

/// Element of Q[τ][ρ][√3].
///
/// Coordinate `i` multiplies the basis element whose bits are
/// (τ, ρ, √3) = (i & 1, i >> 1 & 1, i >> 2 & 1).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TowerElement {
    coeffs: [Rational; 8],
}

impl TowerElement {
    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        TowerElement { coeffs }
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        TowerElement {
            coeffs: c.map(Rational::from),
        }
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn tau() -> Self {
        GoldenNumber::tau().into()
    }

    pub fn rho() -> Self {
        TowerElement::from_ints([0, 0, 1, 0, 0, 0, 0, 0])
    }

    pub fn sqrt3() -> Self {
        TowerElement::from_ints([0, 0, 0, 0, 1, 0, 0, 0])
    }

    /// Build `Σ parts[k]·ρ^(k&1)·√3^(k>>1)` from four Q[τ] parts.
    pub fn from_parts(parts: [GoldenNumber; 4]) -> Self {
        let mut coeffs: [Rational; 8] = Default::default();
        for (k, p) in parts.into_iter().enumerate() {
            coeffs[2 * k] = p.a;
            coeffs[2 * k + 1] = p.b;
        }
        TowerElement { coeffs }
    }

    /// Q[τ] parts in the order (1, ρ, √3, ρ√3).
    pub fn parts(&self) -> [GoldenNumber; 4] {
        std::array::from_fn(|k| {
            GoldenNumber::new(self.coeffs[2 * k].clone(), self.coeffs[2 * k + 1].clone())
        })
    }

    /// The Q[τ] part, if every ρ and √3 coordinate vanishes.
    pub fn as_golden(&self) -> Option<GoldenNumber> {
        let [g, r, s, rs] = self.parts();
        (r.is_zero() && s.is_zero() && rs.is_zero()).then_some(g)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_golden().filter(|g| g.is_rational()).map(|g| g.a)
    }

    pub fn scale(&self, g: &GoldenNumber) -> Self {
        let parts = self.parts().map(|p| &p * g);
        TowerElement::from_parts(parts)
    }

    fn map_parts(&self, f: impl Fn(usize, GoldenNumber) -> GoldenNumber) -> Self {
        let mut k = 0;
        let parts = self.parts().map(|p| {
            let out = f(k, p);
            k += 1;
            out
        });
        TowerElement::from_parts(parts)
    }

    /// σ: τ ↦ 1−τ, ρ ↦ (τ−1)ρ = √(3−τ), √3 ↦ √3. Generates Gal(Q[ρ]/Q) ≅ Z₄.
    pub fn sigma(&self) -> Self {
        let rho_image = GoldenNumber::int(-1, 1);
        self.map_parts(|k, p| {
            let c = p.conjugate();
            if k & 1 == 1 {
                &c * &rho_image
            } else {
                c
            }
        })
    }

    /// φ: √3 ↦ −√3, fixing Q[ρ] pointwise.
    pub fn phi(&self) -> Self {
        self.map_parts(|k, p| if k & 2 == 2 { -p } else { p })
    }

    /// ρ ↦ −ρ with τ and √3 fixed; equals σ² on Q[ρ].
    pub fn negate_rho(&self) -> Self {
        self.map_parts(|k, p| if k & 1 == 1 { -p } else { p })
    }

    /// Multiplicative inverse via successive norms down the tower:
    /// x·φ(x) ∈ Q[τ, ρ], y·ȳ ∈ Q[τ] where ȳ negates ρ.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi_x = self.phi();
        let y = self * &phi_x;
        let y_bar = y.negate_rho();
        let n = (&y * &y_bar)
            .as_golden()
            .expect("tower norm lands in Q[tau]");
        let n_inv = n.inverse()?;
        Some((&phi_x * &y_bar).scale(&n_inv))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(TowerElement::one(), |acc, _| &acc * self)
    }

    pub fn to_f64(&self) -> f64 {
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        let rho = (tau + 2.0).sqrt();
        let s3 = 3f64.sqrt();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = c.to_f64();
                if i & 1 == 1 {
                    v *= tau;
                }
                if i & 2 == 2 {
                    v *= rho;
                }
                if i & 4 == 4 {
                    v *= s3;
                }
                v
            })
            .sum()
    }
}

/// Non-negative square root of a non-negative element of Q[τ], found in
/// the tower as √(x/c)·√c for c ∈ {1, 3, τ+2, 3(τ+2)}.
pub fn sqrt_in_tower(x: &GoldenNumber) -> Option<TowerElement> {
    if x.signum() < 0 {
        return None;
    }
    let tau2 = GoldenNumber::int(2, 1);
    let three = GoldenNumber::from(3);
    let radicands = [
        (GoldenNumber::one(), TowerElement::one()),
        (three.clone(), TowerElement::sqrt3()),
        (tau2.clone(), TowerElement::rho()),
        (&three * &tau2, &TowerElement::rho() * &TowerElement::sqrt3()),
    ];
    radicands.into_iter().find_map(|(c, root_c)| {
        let q = x / &c;
        is_square_in_qtau(&q).map(|r| root_c.scale(&r))
    })
}

impl From<GoldenNumber> for TowerElement {
    fn from(g: GoldenNumber) -> Self {
        TowerElement::from_parts([
            g,
            GoldenNumber::zero(),
            GoldenNumber::zero(),
            GoldenNumber::zero(),
        ])
    }
}

impl From<i64> for TowerElement {
    fn from(n: i64) -> Self {
        GoldenNumber::from(n).into()
    }
}

impl From<Rational> for TowerElement {
    fn from(r: Rational) -> Self {
        GoldenNumber::rational(r).into()
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g, r, s, rs] = self.parts();
        let mut terms = Vec::new();
        for (part, unit) in [(g, ""), (r, "ρ"), (s, "√3"), (rs, "ρ√3")] {
            if part.is_zero() {
                continue;
            }
            if unit.is_empty() {
                terms.push(part.to_string());
            } else if part == GoldenNumber::one() {
                terms.push(unit.to_string());
            } else {
                terms.push(format!("({part}){unit}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TowerElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TowerElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<Rational>::deserialize(deserializer)?;
        let coeffs: [Rational; 8] = v
            .try_into()
            .map_err(|_| serde::de::Error::custom("tower element needs 8 coefficients"))?;
        Ok(TowerElement { coeffs })
    }
}

impl Zero for TowerElement {
    fn zero() -> Self {
        TowerElement::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for TowerElement {
    fn one() -> Self {
        TowerElement::from(1)
    }
}

impl Add<&TowerElement> for &TowerElement {
    type Output = TowerElement;
    fn add(self, rhs: &TowerElement) -> TowerElement {
        TowerElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Sub<&TowerElement> for &TowerElement {
    type Output = TowerElement;
    fn sub(self, rhs: &TowerElement) -> TowerElement {
        TowerElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Mul<&TowerElement> for &TowerElement {
    type Output = TowerElement;
    fn mul(self, rhs: &TowerElement) -> TowerElement {
        let rho_sq = GoldenNumber::int(2, 1);
        let three = GoldenNumber::from(3);
        let x = self.parts();
        let y = rhs.parts();
        let mut out: [GoldenNumber; 4] = Default::default();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let mut term = xi * yj;
                if i & j & 1 == 1 {
                    term = &term * &rho_sq;
                }
                if i & j & 2 == 2 {
                    term = &term * &three;
                }
                let k = i ^ j;
                out[k] = &out[k] + &term;
            }
        }
        TowerElement::from_parts(out)
    }
}

impl Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

super::owned_ops!(TowerElement);

impl Scalar for TowerElement {
    fn inverse(&self) -> Option<Self> {
        TowerElement::inverse(self)
    }
}
