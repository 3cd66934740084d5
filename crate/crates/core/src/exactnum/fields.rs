//! Structural checks on the tower Q[τ, ρ, √3]: the minimal polynomial of
//! ρ, the order of σ and the fixed fields of σ² and φ.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::golden::{is_square_in_qtau, GoldenNumber};
use super::matrix::RationalMatrix;
use super::rational::Rational;
use super::tower::TowerElement;

/// Coefficients of x⁴ − 5x² + 5, constant term first.
pub const RHO_MINIMAL_POLY: [i64; 5] = [5, 0, -5, 0, 1];

/// Eisenstein's criterion at `p` for an integer polynomial given
/// constant term first.
pub fn eisenstein(coeffs: &[i64], p: i64) -> bool {
    let Some((&lead, rest)) = coeffs.split_last() else {
        return false;
    };
    lead % p != 0 && rest.iter().all(|c| c % p == 0) && coeffs[0] % (p * p) != 0
}

/// Evaluates an integer polynomial (constant term first) at `x`.
pub fn eval_poly(coeffs: &[i64], x: &TowerElement) -> TowerElement {
    coeffs
        .iter()
        .rev()
        .fold(TowerElement::zero(), |acc, &c| &(&acc * x) + &TowerElement::from(c))
}

/// ±ρ and ±(τ−1)ρ.
pub fn rho_conjugates() -> [TowerElement; 4] {
    let rho = TowerElement::rho();
    let rho2 = rho.scale(&GoldenNumber::int(-1, 1));
    [rho.clone(), -&rho, rho2.clone(), -&rho2]
}

/// Smallest k ≥ 1 with σᵏ = id on the basis, if k ≤ `limit`.
pub fn sigma_order(limit: u32) -> Option<u32> {
    let basis: Vec<TowerElement> = (0..8)
        .map(|i| {
            let mut c = [0i64; 8];
            c[i] = 1;
            TowerElement::from_ints(c)
        })
        .collect();
    let mut images = basis.clone();
    for k in 1..=limit {
        images = images.iter().map(TowerElement::sigma).collect();
        if images == basis {
            return Some(k);
        }
    }
    None
}

/// Basis of the fixed space of σ² on Q[ρ] = span{1, τ, ρ, τρ}, as
/// coordinate vectors in that basis.
pub fn sigma_squared_fixed_space() -> Vec<Vec<Rational>> {
    // Column j of A is σ²(e_j) − e_j restricted to the first four coordinates.
    let cols: Vec<Vec<Rational>> = (0..4)
        .map(|j| {
            let mut c = [0i64; 8];
            c[j] = 1;
            let e = TowerElement::from_ints(c);
            let d = &e.sigma().sigma() - &e;
            d.coeffs()[..4].to_vec()
        })
        .collect();
    let a = RationalMatrix::from_columns(cols).expect("4x4");
    a.kernel()
}

/// φ fixes every basis element of Q[ρ].
pub fn phi_fixes_q_rho() -> bool {
    (0..4).all(|j| {
        let mut c = [0i64; 8];
        c[j] = 1;
        let e = TowerElement::from_ints(c);
        e.phi() == e
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldTowerReport {
    pub eisenstein_at_5: bool,
    pub roots_vanish: bool,
    pub sigma_order: Option<u32>,
    pub sigma_squared_fixed_is_qtau: bool,
    pub three_not_square_in_qtau: bool,
    pub phi_fixes_q_rho: bool,
}

impl FieldTowerReport {
    pub fn passed(&self) -> bool {
        self.eisenstein_at_5
            && self.roots_vanish
            && self.sigma_order == Some(4)
            && self.sigma_squared_fixed_is_qtau
            && self.three_not_square_in_qtau
            && self.phi_fixes_q_rho
    }
}

pub fn field_tower_report() -> FieldTowerReport {
    let fixed = sigma_squared_fixed_space();
    let in_qtau = |v: &Vec<Rational>| v[2].is_zero() && v[3].is_zero();
    let spans_qtau = fixed.len() == 2 && fixed.iter().all(in_qtau) && {
        let m = RationalMatrix::from_columns(fixed.clone()).expect("kernel vectors");
        m.rank() == 2
    };
    FieldTowerReport {
        eisenstein_at_5: eisenstein(&RHO_MINIMAL_POLY, 5),
        roots_vanish: rho_conjugates()
            .iter()
            .all(|r| eval_poly(&RHO_MINIMAL_POLY, r).is_zero()),
        sigma_order: sigma_order(8),
        sigma_squared_fixed_is_qtau: spans_qtau,
        three_not_square_in_qtau: is_square_in_qtau(&GoldenNumber::from(3)).is_none(),
        phi_fixes_q_rho: phi_fixes_q_rho(),
    }
}
