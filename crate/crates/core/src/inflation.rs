//! Inflation matrices from eigen-relations, their powers, and the
//! area-covering obstructions to stone inflation.
//!
//! A volume vector v and Dehn component vectors d_i of the prototiles
//! satisfy M·v = λ³v and M·d_i = λ·d_i for an inflation by λ. If M is
//! rational, each relation splits into its τ¹ and τ⁰ parts, which gives
//! twice as many rational column constraints M·X = Y.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedra::Catalog;
use crate::exactnum::{solve_exact, GoldenMatrix, GoldenNumber, Rational, RationalMatrix, TowerElement};

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Fibonacci number f_n with f_0 = 0, f_1 = 1, extended by f_{−1} = 1.
pub fn fibonacci(n: i64) -> BigInt {
    if n < 0 {
        return if n % 2 == 0 { -fibonacci(-n) } else { fibonacci(-n) };
    }
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Eigen-data of a tile set under inflation by `factor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSystem {
    pub n: usize,
    pub volume_vec: Vec<GoldenNumber>,
    pub dehn_vecs: Vec<Vec<GoldenNumber>>,
    pub factor: GoldenNumber,
    /// Splitting into τ-components is only sound for a rational matrix.
    pub assume_rational: bool,
}

/// τ¹ and τ⁰ columns of an eigen-relation M·vec = λpow·vec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitColumns {
    pub input_tau: Vec<Rational>,
    pub input_one: Vec<Rational>,
    pub output_tau: Vec<Rational>,
    pub output_one: Vec<Rational>,
}

pub fn galois_split(vec: &[GoldenNumber], lambda_pow: &GoldenNumber) -> SplitColumns {
    let image: Vec<GoldenNumber> = vec.iter().map(|x| x * lambda_pow).collect();
    SplitColumns {
        input_tau: vec.iter().map(|x| x.b.clone()).collect(),
        input_one: vec.iter().map(|x| x.a.clone()).collect(),
        output_tau: image.iter().map(|x| x.b.clone()).collect(),
        output_one: image.iter().map(|x| x.a.clone()).collect(),
    }
}

/// Scales a Q[τ]-vector to have integer coordinates with no common factor;
/// the sign is kept.
pub fn primitive_vector(v: &[GoldenNumber]) -> Vec<GoldenNumber> {
    let coords = || v.iter().flat_map(|x| [&x.a, &x.b]);
    let lcm = coords().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let gcd = coords()
        .map(|r| (r * &Rational::from(lcm.clone())).to_integer().expect("cleared"))
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    if gcd.is_zero() {
        return v.to_vec();
    }
    let k = Rational::new(lcm, gcd);
    v.iter().map(|x| x.scale(&k)).collect()
}

/// One relation of an [`InvariantSystem`]: a vector with its eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenRelation {
    pub label: String,
    pub vector: Vec<GoldenNumber>,
    pub eigenvalue: GoldenNumber,
}

impl InvariantSystem {
    pub fn new(volume_vec: Vec<GoldenNumber>, dehn_vecs: Vec<Vec<GoldenNumber>>, factor: GoldenNumber) -> Self {
        InvariantSystem {
            n: volume_vec.len(),
            volume_vec,
            dehn_vecs,
            factor,
            assume_rational: true,
        }
    }

    pub fn constraint_count(&self) -> usize {
        2 * (1 + self.dehn_vecs.len())
    }

    pub fn is_square(&self) -> bool {
        self.constraint_count() == self.n
    }

    /// Volume relation first, then the Dehn relations in order.
    pub fn relations(&self) -> Vec<EigenRelation> {
        let mut out = vec![EigenRelation {
            label: "volume".into(),
            vector: self.volume_vec.clone(),
            eigenvalue: self.factor.pow(3),
        }];
        out.extend(self.dehn_vecs.iter().enumerate().map(|(i, d)| EigenRelation {
            label: format!("dehn[{i}]"),
            vector: d.clone(),
            eigenvalue: self.factor.clone(),
        }));
        out
    }

    /// The column matrices X and Y of M·X = Y, ordered volume τ¹, volume τ⁰,
    /// then τ¹, τ⁰ of each Dehn vector.
    pub fn constraint_matrices(&self) -> Result<(RationalMatrix, RationalMatrix)> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for rel in self.relations() {
            if rel.vector.len() != self.n {
                return Err(Error::DimensionMismatch(format!(
                    "{} has length {}, expected {}",
                    rel.label,
                    rel.vector.len(),
                    self.n
                )));
            }
            let s = galois_split(&rel.vector, &rel.eigenvalue);
            xs.push(s.input_tau);
            xs.push(s.input_one);
            ys.push(s.output_tau);
            ys.push(s.output_one);
        }
        Ok((RationalMatrix::from_columns(xs)?, RationalMatrix::from_columns(ys)?))
    }
}

impl InvariantSystem {
    /// Golden tetrahedra under inflation by τ: 12·volumes and the β and δ
    /// components of the Dehn values, in catalog name order.
    pub fn golden_tetrahedra(catalog: &Catalog) -> Self {
        let dehn = catalog.dehn_values();
        InvariantSystem::new(
            primitive_vector(&catalog.volumes()),
            vec![
                dehn.iter().map(|d| d.beta.clone()).collect(),
                dehn.iter().map(|d| d.delta.clone()).collect(),
            ],
            GoldenNumber::tau(),
        )
    }
}

fn from_doubled(rows: &[[i64; 6]]) -> RationalMatrix {
    RationalMatrix::from_i64_rows(rows).scale(&Rational::new(1, 2))
}

/// The golden tetrahedra inflation matrix as tabulated (rows are the
/// inflated tiles in name order A*, B*, C*, D*, F*, G*).
pub fn reference_m_gt() -> RationalMatrix {
    from_doubled(&[
        [4, 0, 2, 0, 4, 2],
        [0, 0, 2, 0, 0, 2],
        [1, 1, 2, 2, 2, 2],
        [0, 0, 2, 2, 2, 0],
        [2, 0, 2, 2, 2, 0],
        [1, 1, 2, 0, 0, 2],
    ])
}

/// M_gt² as tabulated. Entry (2,4) reads 2 there, while M_gt·M_gt has 1
/// (row B* of M_gt² is row C* plus row G* of M_gt).
pub fn tabulated_m_gt_squared() -> RationalMatrix {
    let mut m = reference_m_gt_squared();
    m.set(1, 3, Rational::from(2));
    m
}

/// Position (1-based) of the one entry where the tabulated M_gt² differs
/// from the exact square.
pub const M_GT_SQUARED_CORRECTED_ENTRY: (usize, usize) = (2, 4);

/// M_gt² with entry (2,4) corrected to 1.
pub fn reference_m_gt_squared() -> RationalMatrix {
    from_doubled(&[
        [14, 2, 12, 6, 14, 8],
        [2, 2, 4, 2, 2, 4],
        [6, 2, 10, 6, 8, 6],
        [3, 1, 6, 6, 6, 2],
        [7, 1, 8, 6, 10, 4],
        [4, 2, 6, 2, 4, 6],
    ])
}

pub fn reference_m_gt_cubed() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[
        [26, 5, 28, 16, 30, 18],
        [5, 2, 8, 4, 6, 6],
        [14, 4, 19, 12, 18, 12],
        [8, 2, 12, 9, 12, 6],
        [15, 3, 18, 12, 19, 10],
        [9, 3, 12, 6, 10, 9],
    ])
}

/// The unique rational M with M·X = Y.
pub fn reconstruct_matrix(sys: &InvariantSystem) -> Result<RationalMatrix> {
    if !sys.assume_rational {
        return Err(Error::RationalityNotAssumed);
    }
    let constraints = sys.constraint_count();
    if constraints < sys.n {
        return Err(Error::UnderDetermined {
            constraints,
            tiles: sys.n,
        });
    }
    if constraints > sys.n {
        return Err(Error::OverDetermined {
            constraints,
            tiles: sys.n,
        });
    }
    let (x, y) = sys.constraint_matrices()?;
    solve_exact(&x, &y).map_err(|e| match e {
        Error::SingularMatrix => Error::SingularSystem,
        other => other,
    })
}

/// Checks every eigen-relation of `sys` directly over Q[τ].
pub fn verify_eigen_relations(m: &GoldenMatrix, sys: &InvariantSystem) -> Result<()> {
    for rel in sys.relations() {
        let lhs = m.mul_vec(&rel.vector)?;
        let rhs: Vec<GoldenNumber> = rel.vector.iter().map(|x| x * &rel.eigenvalue).collect();
        if lhs != rhs {
            return Err(Error::EigenRelationFailed(rel.label));
        }
    }
    Ok(())
}

pub fn matrix_power(m: &RationalMatrix, k: u32) -> Result<RationalMatrix> {
    m.pow(k)
}

/// (k, M^k is integral) for k = 1..=kmax.
pub fn integrality_spectrum(m: &RationalMatrix, kmax: u32) -> Result<Vec<(u32, bool)>> {
    let mut out = Vec::with_capacity(kmax as usize);
    let mut p = m.clone();
    for k in 1..=kmax {
        if k > 1 {
            p = p.mul(m)?;
        }
        out.push((k, p.is_integral()));
    }
    Ok(out)
}

/// χ(x) = x⁴ − 5x³ + 2x² + 5x + 1, lowest degree first.
pub const CHI: [i64; 5] = [1, 5, 2, -5, 1];

/// Coefficients of x^n = a x³ + b x² + c x + d modulo χ.
///
/// a_n = (f_{3(n−1)}/2 − f_{n−1})/3, b_n = a_{n+1} − 5a_n,
/// c_n = −a_{n+1} + 3a_n + f_n, d_n = −a_{n+1} + 4a_n + f_{n−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCoefficients {
    pub n: u32,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

fn fib_a(n: u32) -> BigInt {
    let n = n as i64;
    let num: BigInt = fibonacci(3 * (n - 1)) / BigInt::from(2) - fibonacci(n - 1);
    debug_assert!(num.is_multiple_of(&BigInt::from(3)));
    num / BigInt::from(3)
}

impl PowerCoefficients {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "n ≥ 1");
        let a = fib_a(n);
        let a1 = fib_a(n + 1);
        let f = |k: i64| fibonacci(k);
        PowerCoefficients {
            n,
            b: &a1 - &a * 5,
            c: -&a1 + &a * 3 + f(n as i64),
            d: -&a1 + &a * 4 + f(n as i64 - 1),
            a,
        }
    }

    /// The relation b_n = a_{n+1} − a_n agrees with b_n modulo 2.
    pub fn parity_shortcut_holds(&self) -> bool {
        let alt = fib_a(self.n + 1) - &self.a;
        (&alt - &self.b).is_even()
    }
}

fn poly_at(m: &RationalMatrix, coeffs: &[Rational]) -> Result<RationalMatrix> {
    let n = m.rows();
    let mut acc = RationalMatrix::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(m)?.add(&RationalMatrix::identity(n).scale(c))?;
    }
    Ok(acc)
}

/// χ(M) = 0.
pub fn chi_annihilates(m: &RationalMatrix) -> Result<bool> {
    let coeffs: Vec<Rational> = CHI.iter().map(|&c| Rational::from(c)).collect();
    Ok(poly_at(m, &coeffs)?.is_zero())
}

/// M^n = a_n M³ + b_n M² + c_n M + d_n Id and χ(M) = 0.
pub fn fibonacci_power_check(m: &RationalMatrix, n: u32) -> Result<bool> {
    let pc = PowerCoefficients::new(n);
    let r = |x: &BigInt| Rational::from(x.clone());
    let lhs = m.pow(n)?;
    let rhs = poly_at(m, &[r(&pc.d), r(&pc.c), r(&pc.b), r(&pc.a)])?;
    Ok(lhs == rhs && chi_annihilates(m)?)
}

/// f_n is even exactly when 3 | n, for all n ≤ nmax.
pub fn fibonacci_parity_check(nmax: u32) -> bool {
    (0..=nmax).all(|n| fibonacci(n as i64).is_even() == (n % 3 == 0))
}

/// σ = τ².
pub fn sigma() -> GoldenNumber {
    GoldenNumber::tau_pow(2)
}

/// Contradiction witness for σ^k = Σ αᵢσ^i with αᵢ ≥ 0, α₀ > 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringCertificate {
    pub k: u32,
    #[serde(with = "bigint_strings")]
    pub psi: Vec<BigInt>,
    /// S = Σ α_{k−1−i} ψᵢ expressed in the quotient coefficients vanishes
    /// identically.
    pub telescopes: bool,
    pub conclusion: String,
}

/// ψ_0..ψ_{k−1} with ψ₀ = 1, ψ₁ = 3, ψ_{n+1} = 3ψ_n − ψ_{n−1}.
pub fn psi_sequence(k: usize) -> Vec<BigInt> {
    let mut psi: Vec<BigInt> = Vec::with_capacity(k);
    for n in 0..k {
        let next = match n {
            0 => BigInt::one(),
            1 => BigInt::from(3),
            _ => &psi[n - 1] * 3 - &psi[n - 2],
        };
        psi.push(next);
    }
    psi
}

/// Writes p(x) = x^k − Σ αᵢ x^i as (x^{k−2} + Σ β_j x^j)(x² − 3x + 1),
/// expresses every αᵢ through the β_j, and checks that
/// S = Σ αᵢ ψ_{k−1−i} has zero coefficient on each β_j and zero constant.
fn telescoping_vanishes(k: usize, psi: &[BigInt]) -> bool {
    if k < 2 {
        return false;
    }
    // Linear forms over (β_0..β_{k−3}, 1): index k−2 is the constant slot,
    // which also stands for the leading quotient coefficient β_{k−2} = 1.
    let slots = k - 1;
    let beta = |j: isize| -> Option<usize> { (0..=(k as isize - 2)).contains(&j).then_some(j as usize) };
    let mut s = vec![BigInt::zero(); slots];
    for i in 0..k {
        // α_i = −(β_{i−2} − 3β_{i−1} + β_i)
        let weight = &psi[k - 1 - i];
        for (off, c) in [(2isize, 1i64), (1, -3), (0, 1)] {
            if let Some(j) = beta(i as isize - off) {
                s[j] -= weight * c;
            }
        }
    }
    s.iter().all(Zero::is_zero)
}

pub fn covering_certificate(k: u32) -> CoveringCertificate {
    let ku = k as usize;
    let psi = psi_sequence(ku.max(2));
    let psi_k: Vec<BigInt> = psi[..ku].to_vec();
    if k < 2 {
        return CoveringCertificate {
            k,
            psi: psi_k,
            telescopes: false,
            conclusion: "σ = α₀ is impossible: σ is irrational".into(),
        };
    }
    let telescopes = telescoping_vanishes(ku, &psi);
    let conclusion = format!(
        "S = Σ α_(k-1-i)·ψ_i = -3·ψ_0 + ψ_1 = {} identically, but S ≥ α_0·ψ_{} > 0",
        -3 * &psi[0] + &psi[1],
        k - 1
    );
    CoveringCertificate {
        k,
        psi: psi_k,
        telescopes,
        conclusion,
    }
}

/// Checks a certificate against the Fibonacci numbers and its own claims.
pub fn certificate_is_valid(c: &CoveringCertificate) -> bool {
    let k = c.k as usize;
    let fib_ok = c.psi.len() == k
        && c
            .psi
            .iter()
            .enumerate()
            .all(|(n, p)| *p == fibonacci(2 * n as i64 + 2) && p.is_positive());
    fib_ok && (k < 2 || c.telescopes)
}

pub const MAX_BRUTE_FORCE_K: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringSearch {
    pub k: u32,
    pub nodes: u64,
    /// α₀..α_{k−1} when a solution exists.
    pub solution: Option<Vec<u64>>,
}

/// Exhaustive search for σ^k = Σ αᵢσ^i with αᵢ ≥ 0 and α₀ > 0.
///
/// σ^i = f_{2i}τ + f_{2i−1}, so the τ-parts bound α_{k−1}, …, α₂ and
/// force α₁; α₀ then follows from the rational parts. Candidates are
/// confirmed in Q[τ].
pub fn covering_brute_force(k: u32) -> Result<CoveringSearch> {
    if k > MAX_BRUTE_FORCE_K {
        return Err(Error::SearchTooLarge {
            k: k as usize,
            max: MAX_BRUTE_FORCE_K as usize,
        });
    }
    let fib = |n: i64| -> i64 { i64::try_from(fibonacci(n)).expect("small Fibonacci") };
    let tau_part: Vec<i64> = (0..=k as i64).map(|i| fib(2 * i)).collect();
    let one_part: Vec<i64> = (0..=k as i64).map(|i| fib(2 * i - 1)).collect();
    let powers: Vec<GoldenNumber> = (0..=k).map(|i| sigma().pow(i)).collect();
    let mut search = CoveringSearch {
        k,
        nodes: 0,
        solution: None,
    };
    if k == 0 {
        return Ok(search);
    }
    let mut alpha = vec![0u64; k as usize];

    #[allow(clippy::too_many_arguments)]
    fn descend(
        i: usize,
        rem_tau: i64,
        rem_one: i64,
        tau_part: &[i64],
        one_part: &[i64],
        powers: &[GoldenNumber],
        alpha: &mut [u64],
        search: &mut CoveringSearch,
    ) {
        search.nodes += 1;
        if search.solution.is_some() {
            return;
        }
        if i == 0 {
            // τ-part must be exhausted; α₀ takes the rest.
            if rem_tau != 0 || rem_one <= 0 {
                return;
            }
            alpha[0] = rem_one as u64;
            let k = alpha.len();
            let sum: GoldenNumber = alpha
                .iter()
                .zip(powers)
                .map(|(&a, p)| p.scale(&Rational::from(a as i64)))
                .sum();
            if sum == powers[k] {
                search.solution = Some(alpha.to_vec());
            }
            return;
        }
        if i == 1 {
            // f_2 = f_1 = 1: α₁ takes the whole τ-part, α₀ what is left.
            alpha[1] = rem_tau as u64;
            descend(0, 0, rem_one - rem_tau, tau_part, one_part, powers, alpha, search);
            alpha[1] = 0;
            return;
        }
        let max = rem_tau / tau_part[i];
        for a in 0..=max {
            alpha[i] = a as u64;
            descend(
                i - 1,
                rem_tau - a * tau_part[i],
                rem_one - a * one_part[i],
                tau_part,
                one_part,
                powers,
                alpha,
                search,
            );
        }
        alpha[i] = 0;
    }

    let ku = k as usize;
    descend(
        ku - 1,
        tau_part[ku],
        one_part[ku],
        &tau_part,
        &one_part,
        &powers,
        &mut alpha,
        &mut search,
    );
    Ok(search)
}

/// Outcome of testing A_r = p₁(τ⁻²)A_r + p₂(τ⁻²)A_a + p₃(τ⁻²)A_o.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaDecision {
    pub holds: bool,
    /// X = √3(1 − p₁(τ⁻²)) vanishes.
    pub regular_part_vanishes: bool,
    /// Y = (p₂(τ⁻²)τ + p₃(τ⁻²))ρ vanishes.
    pub golden_part_vanishes: bool,
    /// φ(X) = −X and φ(Y) = Y.
    pub phi_split: bool,
    pub reason: String,
}

fn eval_poly(coeffs: &[u64], x: &GoldenNumber) -> GoldenNumber {
    coeffs
        .iter()
        .rev()
        .fold(GoldenNumber::zero(), |acc, &c| &(&acc * x) + &GoldenNumber::from(c as i64))
}

/// Decides the area equation of a covering of a unit regular triangle by
/// τ⁻ᵏ-scaled regular, acute and obtuse triangles. Coefficient lists are
/// lowest degree first; `p1` must have no constant term.
pub fn area_covering_decide(p1: &[u64], p2: &[u64], p3: &[u64]) -> Result<AreaDecision> {
    if p1.first().is_some_and(|&c| c != 0) {
        return Err(Error::UnsupportedExpr("p1 must have no constant term".into()));
    }
    let x_arg = GoldenNumber::tau_pow(-2);
    let one = GoldenNumber::one();
    let sqrt3 = TowerElement::sqrt3();
    let rho = TowerElement::rho();
    let x = sqrt3.scale(&(&one - &eval_poly(p1, &x_arg)));
    let golden = &(&eval_poly(p2, &x_arg) * &GoldenNumber::tau()) + &eval_poly(p3, &x_arg);
    let y = rho.scale(&golden);
    let phi_split = x.phi() == -&x && y.phi() == y;
    let regular_part_vanishes = x.is_zero();
    let golden_part_vanishes = y.is_zero();
    let holds = x == y;
    let reason = if holds {
        "areas balance".to_string()
    } else if !golden_part_vanishes {
        "φ separates X = Y into X = 0 and Y = 0; Y ≠ 0, so golden triangles cannot occur".to_string()
    } else {
        "p1(τ^-2) ≠ 1: a regular triangle is not a union of τ^k-smaller regular triangles (covering certificate)"
            .to_string()
    };
    Ok(AreaDecision {
        holds,
        regular_part_vanishes,
        golden_part_vanishes,
        phi_split,
        reason,
    })
}
