#![allow(dead_code)]

use goldentiles::angles::{dehn_accumulate, AngleExpr};
use goldentiles::exactnum::solve_exact;
use goldentiles::{GoldenNumber, Rational, RationalMatrix, TowerElement};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const RING_CASES: u32 = 1000;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn golden() -> impl Strategy<Value = GoldenNumber> {
    (rational(), rational()).prop_map(|(a, b)| GoldenNumber::new(a, b))
}

pub fn tower() -> impl Strategy<Value = TowerElement> {
    proptest::array::uniform8(rational()).prop_map(TowerElement::from_coeffs)
}

pub fn angle() -> impl Strategy<Value = AngleExpr> {
    (rational(), rational(), rational()).prop_map(|(p, b, d)| AngleExpr::new(p, b, d))
}

pub fn golden_ring(x: &GoldenNumber, y: &GoldenNumber, z: &GoldenNumber) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(x + y) + z, x + &(y + z));
    prop_assert_eq!(&(x * y) * z, x * &(y * z));
    prop_assert_eq!(x + y, y + x);
    prop_assert_eq!(x * y, y * x);
    prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
    prop_assert_eq!(x + &GoldenNumber::zero(), x.clone());
    prop_assert_eq!(x * &GoldenNumber::one(), x.clone());
    prop_assert!((x + &(-x)).is_zero());
    if let Some(inv) = x.inverse() {
        prop_assert!((x * &inv).is_one());
    } else {
        prop_assert!(x.is_zero());
    }
    Ok(())
}

pub fn golden_conjugation(x: &GoldenNumber, y: &GoldenNumber) -> Result<(), TestCaseError> {
    prop_assert_eq!((x + y).conjugate(), &x.conjugate() + &y.conjugate());
    prop_assert_eq!((x * y).conjugate(), &x.conjugate() * &y.conjugate());
    prop_assert_eq!(x.conjugate().conjugate(), x.clone());
    prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
    // Numeric image: τ ↦ 1.618…, conjugate ↦ −0.618….
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let (a, b) = x.tau_components();
    let expect = a.to_f64() + b.to_f64() * (1.0 - tau);
    prop_assert!((x.conjugate().to_f64() - expect).abs() < 1e-9 * (1.0 + expect.abs()));
    Ok(())
}

pub fn tower_ring(x: &TowerElement, y: &TowerElement, z: &TowerElement) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(x * y) * z, x * &(y * z));
    prop_assert_eq!(x * y, y * x);
    prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
    prop_assert_eq!(&(x + y) - y, x.clone());
    if let Some(inv) = x.inverse() {
        prop_assert!((x * &inv).is_one());
    } else {
        prop_assert!(x.is_zero());
    }
    // Evaluation at the real embedding is a ring homomorphism.
    let (fx, fy) = (x.to_f64(), y.to_f64());
    let fxy = (x * y).to_f64();
    prop_assert!((fxy - fx * fy).abs() < 1e-7 * (1.0 + (fx * fy).abs()));
    Ok(())
}

pub fn tower_automorphisms(x: &TowerElement, y: &TowerElement) -> Result<(), TestCaseError> {
    for f in [TowerElement::sigma as fn(&TowerElement) -> TowerElement, TowerElement::phi] {
        prop_assert_eq!(f(&(x + y)), &f(x) + &f(y));
        prop_assert_eq!(f(&(x * y)), &f(x) * &f(y));
    }
    prop_assert_eq!(x.sigma().phi(), x.phi().sigma());
    prop_assert_eq!(x.sigma().sigma().sigma().sigma(), x.clone());
    prop_assert_eq!(x.phi().phi(), x.clone());
    Ok(())
}

pub fn dehn_bilinear(l1: &GoldenNumber, l2: &GoldenNumber, a1: &AngleExpr, a2: &AngleExpr) -> Result<(), TestCaseError> {
    let d = |pairs: &[(&GoldenNumber, &AngleExpr)]| dehn_accumulate(pairs.iter().copied()).unwrap();
    let ls = l1 + l2;
    let sum_a = a1 + a2;
    prop_assert_eq!(d(&[(&ls, a1)]), d(&[(l1, a1), (l2, a1)]));
    prop_assert_eq!(d(&[(l1, &sum_a)]), d(&[(l1, a1), (l1, a2)]));
    // π-multiples are invisible.
    let shifted = a1 + &AngleExpr::pi_multiple(Rational::from(3));
    prop_assert_eq!(d(&[(l1, &shifted)]), d(&[(l1, a1)]));
    // Rational scaling moves between the factors.
    let two = Rational::from(2);
    let l1x2 = l1.scale(&two);
    prop_assert_eq!(d(&[(&l1x2, a1)]), d(&[(l1, &a1.scale(&two))]));
    Ok(())
}

pub fn solve_round_trip(a: &RationalMatrix, x: &RationalMatrix) -> Result<(), TestCaseError> {
    let b = x.mul(a).unwrap();
    let det = a.determinant().unwrap();
    match solve_exact(a, &b) {
        Ok(sol) => {
            prop_assert!(!det.is_zero());
            prop_assert_eq!(&sol, x);
            prop_assert_eq!(sol.mul(a).unwrap(), b);
        }
        Err(_) => prop_assert!(det.is_zero()),
    }
    Ok(())
}

pub fn square_matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(rational(), n * n)
        .prop_map(move |v| RationalMatrix::new(n, n, v).unwrap())
}

pub fn matrix_pair() -> impl Strategy<Value = (RationalMatrix, RationalMatrix)> {
    (1usize..=6, 1usize..=4).prop_flat_map(|(n, k)| {
        (
            square_matrix(n),
            proptest::collection::vec(rational(), k * n).prop_map(move |v| RationalMatrix::new(k, n, v).unwrap()),
        )
    })
}

/// Coordinates of a tetrahedron with the given squared edge lengths in
/// edge order 01, 02, 03, 12, 13, 23.
pub fn coordinates(l: [f64; 6]) -> [[f64; 3]; 4] {
    let [d01, d02, d03, d12, d13, d23] = l.map(|x| x * x);
    let p1 = [d01.sqrt(), 0.0, 0.0];
    let x2 = (d01 + d02 - d12) / (2.0 * p1[0]);
    let p2 = [x2, (d02 - x2 * x2).sqrt(), 0.0];
    let x3 = (d01 + d03 - d13) / (2.0 * p1[0]);
    let y3 = (d03 - d23 + (p2[0] * p2[0] + p2[1] * p2[1]) - 2.0 * x2 * x3) / (2.0 * p2[1]);
    let z3 = (d03 - x3 * x3 - y3 * y3).max(0.0).sqrt();
    [[0.0; 3], p1, p2, [x3, y3, z3]]
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn volume(p: &[[f64; 3]; 4]) -> f64 {
    dot(sub(p[1], p[0]), cross(sub(p[2], p[0]), sub(p[3], p[0]))).abs() / 6.0
}

/// Interior dihedral angle at edge (i, j).
pub fn dihedral(p: &[[f64; 3]; 4], i: usize, j: usize) -> f64 {
    let others: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
    let e = sub(p[j], p[i]);
    let ee = dot(e, e);
    let perp = |k: usize| {
        let v = sub(p[k], p[i]);
        let t = dot(v, e) / ee;
        [v[0] - t * e[0], v[1] - t * e[1], v[2] - t * e[2]]
    };
    let (u, w) = (perp(others[0]), perp(others[1]));
    (dot(u, w) / (dot(u, u) * dot(w, w)).sqrt()).clamp(-1.0, 1.0).acos()
}

pub const TAU: f64 = 1.618_033_988_749_895;

/// Golden angles from their elementary cosines.
pub fn beta_f64() -> f64 {
    ((TAU + 1.0) / (3f64.sqrt() * (TAU + 2.0).sqrt())).acos()
}

pub fn delta_f64() -> f64 {
    ((TAU - 1.0) / (3f64.sqrt() * (TAU + 2.0).sqrt())).acos()
}

pub fn angle_f64(e: &AngleExpr) -> f64 {
    e.pi.to_f64() * std::f64::consts::PI + e.beta.to_f64() * beta_f64() + e.delta.to_f64() * delta_f64()
}

/// F_n by iteration, independent of the library.
pub fn fib_iter(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}
