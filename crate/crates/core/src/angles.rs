//! Residue classes of angles modulo π spanned by the golden angles, their
//! exact trigonometry in the tower, and Dehn values in β/δ normal form.
//!
//! The four acute angles α, β, γ, δ of the golden tetrahedra are fixed by
//!
//! ```text
//! cos α = τ/(τ+2)        cos β = (τ+1)/(√3·ρ)
//! cos γ = (τ+2)/(3τ)     cos δ = (τ−1)/(√3·ρ)
//! ```
//!
//! and satisfy α = π − β − δ, γ = δ − β as real angles. Only β and δ are
//! kept as basis symbols; α and γ are rewritten on construction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::numeric::NumCtx;
use crate::exactnum::{sqrt_in_tower, GoldenNumber, Rational, TowerElement};

/// Label of a Conway–Radin–Sadun basis angle ⟨p⟩_d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CrsLabel {
    pub p: u64,
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CrsTerm {
    p: u64,
    d: u64,
    coeff: Rational,
}

/// The angle `pi·π + beta·β + delta·δ + Σ c·⟨p⟩_d`.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "AngleRepr", into = "AngleRepr")]
pub struct AngleExpr {
    pub pi: Rational,
    pub beta: Rational,
    pub delta: Rational,
    pub crs_terms: BTreeMap<CrsLabel, Rational>,
}

#[derive(Serialize, Deserialize)]
struct AngleRepr {
    #[serde(default)]
    pi: Rational,
    #[serde(default)]
    beta: Rational,
    #[serde(default)]
    delta: Rational,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    crs: Vec<CrsTerm>,
}

impl From<AngleRepr> for AngleExpr {
    fn from(r: AngleRepr) -> Self {
        let mut crs_terms = BTreeMap::new();
        for t in r.crs {
            let e: &mut Rational = crs_terms.entry(CrsLabel { p: t.p, d: t.d }).or_default();
            *e += &t.coeff;
        }
        crs_terms.retain(|_, c: &mut Rational| !c.is_zero());
        AngleExpr {
            pi: r.pi,
            beta: r.beta,
            delta: r.delta,
            crs_terms,
        }
    }
}

impl From<AngleExpr> for AngleRepr {
    fn from(e: AngleExpr) -> Self {
        AngleRepr {
            pi: e.pi,
            beta: e.beta,
            delta: e.delta,
            crs: e
                .crs_terms
                .into_iter()
                .map(|(l, coeff)| CrsTerm { p: l.p, d: l.d, coeff })
                .collect(),
        }
    }
}

impl AngleExpr {
    pub fn new(pi: impl Into<Rational>, beta: impl Into<Rational>, delta: impl Into<Rational>) -> Self {
        AngleExpr {
            pi: pi.into(),
            beta: beta.into(),
            delta: delta.into(),
            crs_terms: BTreeMap::new(),
        }
    }

    pub fn pi_multiple(q: Rational) -> Self {
        AngleExpr::new(q, 0, 0)
    }

    pub fn right_angle() -> Self {
        AngleExpr::pi_multiple(Rational::new(1, 2))
    }

    pub fn beta() -> Self {
        AngleExpr::new(0, 1, 0)
    }

    pub fn delta() -> Self {
        AngleExpr::new(0, 0, 1)
    }

    /// α = π − β − δ.
    pub fn alpha() -> Self {
        AngleExpr::new(1, -1, -1)
    }

    /// γ = δ − β.
    pub fn gamma() -> Self {
        AngleExpr::new(0, -1, 1)
    }

    pub fn golden(angle: GoldenAngle) -> Self {
        match angle {
            GoldenAngle::Alpha => AngleExpr::alpha(),
            GoldenAngle::Beta => AngleExpr::beta(),
            GoldenAngle::Gamma => AngleExpr::gamma(),
            GoldenAngle::Delta => AngleExpr::delta(),
        }
    }

    pub fn crs(label: CrsLabel, coeff: Rational) -> Self {
        let mut e = AngleExpr::default();
        if !coeff.is_zero() {
            e.crs_terms.insert(label, coeff);
        }
        e
    }

    pub fn scale(&self, k: &Rational) -> Self {
        AngleExpr {
            pi: &self.pi * k,
            beta: &self.beta * k,
            delta: &self.delta * k,
            crs_terms: self
                .crs_terms
                .iter()
                .map(|(l, c)| (*l, c * k))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Class in R_π: the π part dropped.
    pub fn residue(&self) -> Self {
        AngleExpr {
            pi: Rational::zero(),
            ..self.clone()
        }
    }

    pub fn has_crs_terms(&self) -> bool {
        !self.crs_terms.is_empty()
    }

    /// Real value; CRS terms are not evaluated here.
    pub fn value(&self, ctx: &mut NumCtx) -> Result<astro_float::BigFloat> {
        if self.has_crs_terms() {
            return Err(Error::UnsupportedExpr(
                "CRS terms need the crs module to evaluate".into(),
            ));
        }
        let gv = golden_values(ctx);
        let pi = ctx.pi();
        let q = ctx.rational(&self.pi);
        let m = ctx.rational(&self.beta);
        let n = ctx.rational(&self.delta);
        let a = ctx.mul(&q, &pi);
        let b = ctx.mul(&m, &gv.beta);
        let c = ctx.mul(&n, &gv.delta);
        let ab = ctx.add(&a, &b);
        Ok(ctx.add(&ab, &c))
    }
}

impl fmt::Display for AngleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, sym) in [(&self.pi, "π"), (&self.beta, "β"), (&self.delta, "δ")] {
            if !c.is_zero() {
                parts.push(format!("{c}{sym}"));
            }
        }
        for (l, c) in &self.crs_terms {
            parts.push(format!("{c}<{}>_{}", l.p, l.d));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for AngleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&AngleExpr> for &AngleExpr {
    type Output = AngleExpr;
    fn add(self, rhs: &AngleExpr) -> AngleExpr {
        let mut crs_terms = self.crs_terms.clone();
        for (l, c) in &rhs.crs_terms {
            *crs_terms.entry(*l).or_default() += c;
        }
        crs_terms.retain(|_, c| !c.is_zero());
        AngleExpr {
            pi: &self.pi + &rhs.pi,
            beta: &self.beta + &rhs.beta,
            delta: &self.delta + &rhs.delta,
            crs_terms,
        }
    }
}

impl Neg for &AngleExpr {
    type Output = AngleExpr;
    fn neg(self) -> AngleExpr {
        self.scale(&Rational::from(-1))
    }
}

impl Sub<&AngleExpr> for &AngleExpr {
    type Output = AngleExpr;
    fn sub(self, rhs: &AngleExpr) -> AngleExpr {
        self + &(-rhs)
    }
}

impl Add for AngleExpr {
    type Output = AngleExpr;
    fn add(self, rhs: AngleExpr) -> AngleExpr {
        &self + &rhs
    }
}

impl Sub for AngleExpr {
    type Output = AngleExpr;
    fn sub(self, rhs: AngleExpr) -> AngleExpr {
        &self - &rhs
    }
}

impl Neg for AngleExpr {
    type Output = AngleExpr;
    fn neg(self) -> AngleExpr {
        -&self
    }
}

/// One of the four acute golden angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GoldenAngle {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl GoldenAngle {
    pub const ALL: [GoldenAngle; 4] = [
        GoldenAngle::Alpha,
        GoldenAngle::Beta,
        GoldenAngle::Gamma,
        GoldenAngle::Delta,
    ];
}

/// A point (cos θ, sin θ) on the unit circle with tower coordinates.
/// Angle addition is complex multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation {
    pub cos: TowerElement,
    pub sin: TowerElement,
}

impl Rotation {
    pub fn identity() -> Self {
        Rotation {
            cos: TowerElement::one(),
            sin: TowerElement::zero(),
        }
    }

    /// Rotation by π/2.
    pub fn quarter_turn() -> Self {
        Rotation {
            cos: TowerElement::zero(),
            sin: TowerElement::one(),
        }
    }

    /// cos(a+b) = cos a cos b − sin a sin b; sin(a+b) = sin a cos b + cos a sin b.
    pub fn compose(&self, other: &Rotation) -> Rotation {
        Rotation {
            cos: &(&self.cos * &other.cos) - &(&self.sin * &other.sin),
            sin: &(&self.sin * &other.cos) + &(&self.cos * &other.sin),
        }
    }

    pub fn inverse(&self) -> Rotation {
        Rotation {
            cos: self.cos.clone(),
            sin: -&self.sin,
        }
    }

    pub fn pow(&self, k: i64) -> Rotation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Rotation::identity(), |acc, _| acc.compose(&base))
    }

    /// cos² + sin² − 1 vanishes.
    pub fn is_unit(&self) -> bool {
        (&(&self.cos * &self.cos) + &(&self.sin * &self.sin)) == TowerElement::one()
    }
}

/// Exact cosines and sines of α, β, γ, δ.
#[derive(Debug, Clone)]
pub struct GoldenAngleTable {
    alpha: Rotation,
    beta: Rotation,
    gamma: Rotation,
    delta: Rotation,
}

impl GoldenAngleTable {
    fn build() -> Self {
        let g = GoldenNumber::int;
        let sqrt3_rho = &TowerElement::sqrt3() * &TowerElement::rho();
        let inv_sqrt3_rho = sqrt3_rho.inverse().expect("√3ρ ≠ 0");
        let over = |num: GoldenNumber, den: GoldenNumber| -> TowerElement {
            (&num / &den).into()
        };
        let cos_alpha = over(g(0, 1), g(2, 1));
        let cos_beta = inv_sqrt3_rho.scale(&g(1, 1));
        let cos_gamma = over(g(2, 1), g(0, 3));
        let cos_delta = inv_sqrt3_rho.scale(&g(-1, 1));
        let with_sine = |cos: TowerElement| -> Rotation {
            let c2 = (&cos * &cos).as_golden().expect("cos² lies in Q[τ]");
            // Acute angles: the positive root.
            let sin = sqrt_in_tower(&(&GoldenNumber::one() - &c2)).expect("sin lies in the tower");
            Rotation { cos, sin }
        };
        GoldenAngleTable {
            alpha: with_sine(cos_alpha),
            beta: with_sine(cos_beta),
            gamma: with_sine(cos_gamma),
            delta: with_sine(cos_delta),
        }
    }

    pub fn get(&self, angle: GoldenAngle) -> &Rotation {
        match angle {
            GoldenAngle::Alpha => &self.alpha,
            GoldenAngle::Beta => &self.beta,
            GoldenAngle::Gamma => &self.gamma,
            GoldenAngle::Delta => &self.delta,
        }
    }

    pub fn cos(&self, angle: GoldenAngle) -> &TowerElement {
        &self.get(angle).cos
    }

    pub fn sin(&self, angle: GoldenAngle) -> &TowerElement {
        &self.get(angle).sin
    }
}

/// The shared table, built on first use.
pub fn golden_angle_table() -> &'static GoldenAngleTable {
    static TABLE: OnceLock<GoldenAngleTable> = OnceLock::new();
    TABLE.get_or_init(GoldenAngleTable::build)
}

fn integer_coeff(r: &Rational, what: &str) -> Result<i64> {
    r.to_integer()
        .and_then(|n| i64::try_from(n).ok())
        .ok_or_else(|| Error::UnsupportedExpr(format!("{what} coefficient {r} is not an integer")))
}

/// Rotation for `pi·π + Σ k·θ` with θ among the golden angles, using the
/// table entries of each angle directly (α and γ are not rewritten).
pub fn rotation_of_combination(pi: &Rational, terms: &[(GoldenAngle, i64)]) -> Result<Rotation> {
    let halves = integer_coeff(&(pi * &Rational::from(2)), "π")?;
    let table = golden_angle_table();
    let quarter = Rotation::quarter_turn().pow(halves.rem_euclid(4));
    Ok(terms.iter().fold(quarter, |acc, &(angle, k)| {
        acc.compose(&table.get(angle).pow(k))
    }))
}

/// Exact (cos, sin) of an angle expression with integer β, δ coefficients
/// and a π coefficient in ½Z.
pub fn exact_rotation(e: &AngleExpr) -> Result<Rotation> {
    if e.has_crs_terms() {
        return Err(Error::UnsupportedExpr(format!("{e}: CRS terms have no tower trigonometry")));
    }
    if !(&e.pi * &Rational::from(2)).is_integer() {
        return Err(Error::UnsupportedExpr(format!("{e}: π coefficient beyond denominator 2")));
    }
    let m = integer_coeff(&e.beta, "β")?;
    let n = integer_coeff(&e.delta, "δ")?;
    rotation_of_combination(&e.pi, &[(GoldenAngle::Beta, m), (GoldenAngle::Delta, n)])
}

pub fn exact_cos(e: &AngleExpr) -> Result<TowerElement> {
    exact_rotation(e).map(|r| r.cos)
}

pub fn exact_sin(e: &AngleExpr) -> Result<TowerElement> {
    exact_rotation(e).map(|r| r.sin)
}

/// Search bounds of [`identify_angle`].
pub const MAX_GOLDEN_MULTIPLE: i64 = 6;
pub const PI_HALVES: [i64; 8] = [0, 1, -1, 2, -2, 3, -3, 4];
const SCREEN_TOLERANCE: f64 = 1e-12;

/// Every expression qπ + mβ + nδ with q ∈ {0, ±½, ±1, ±3⁄2, 2},
/// |m|, |n| ≤ 6, regardless of its value.
pub fn supported_lattice() -> impl Iterator<Item = AngleExpr> {
    PI_HALVES.into_iter().flat_map(|h| {
        (-MAX_GOLDEN_MULTIPLE..=MAX_GOLDEN_MULTIPLE).flat_map(move |m| {
            (-MAX_GOLDEN_MULTIPLE..=MAX_GOLDEN_MULTIPLE)
                .map(move |n| AngleExpr::new(Rational::new(h, 2), m, n))
        })
    })
}

struct GoldenValues {
    beta: astro_float::BigFloat,
    delta: astro_float::BigFloat,
}

fn golden_values(ctx: &mut NumCtx) -> GoldenValues {
    let table = golden_angle_table();
    let cb = ctx.tower(table.cos(GoldenAngle::Beta));
    let cd = ctx.tower(table.cos(GoldenAngle::Delta));
    GoldenValues {
        beta: ctx.acos(&cb),
        delta: ctx.acos(&cd),
    }
}

/// Numeric value of a golden angle.
pub fn golden_angle_value(angle: GoldenAngle, ctx: &mut NumCtx) -> astro_float::BigFloat {
    let c = ctx.tower(golden_angle_table().cos(angle));
    ctx.acos(&c)
}

/// Recovers qπ + mβ + nδ ∈ (0, π) with the given exact cosine.
///
/// Candidates in the bounded lattice are screened numerically against
/// arccos(c) and every survivor is confirmed in exact arithmetic.
pub fn identify_angle(c: &TowerElement, ctx: &mut NumCtx) -> Result<AngleExpr> {
    let cv = ctx.tower(c);
    let one = ctx.int(1);
    if !matches!(cv.abs().cmp(&one), Some(o) if o <= 0) {
        return Err(Error::NotIdentified(c.to_string()));
    }
    let target = ctx.acos(&cv);
    let gv = golden_values(ctx);
    let pi = ctx.pi();
    let zero = ctx.int(0);
    for e in supported_lattice() {
        let v = e.value_with(ctx, &pi, &gv);
        let in_range = matches!(v.cmp(&zero), Some(o) if o > 0)
            && matches!(v.cmp(&pi), Some(o) if o < 0);
        if !in_range || !ctx.close(&v, &target, SCREEN_TOLERANCE) {
            continue;
        }
        if exact_cos(&e)? == *c {
            return Ok(e);
        }
    }
    Err(Error::NotIdentified(c.to_string()))
}

impl AngleExpr {
    fn value_with(
        &self,
        ctx: &mut NumCtx,
        pi: &astro_float::BigFloat,
        gv: &GoldenValues,
    ) -> astro_float::BigFloat {
        let q = ctx.rational(&self.pi);
        let m = ctx.rational(&self.beta);
        let n = ctx.rational(&self.delta);
        let a = ctx.mul(&q, pi);
        let b = ctx.mul(&m, &gv.beta);
        let c = ctx.mul(&n, &gv.delta);
        let ab = ctx.add(&a, &b);
        ctx.add(&ab, &c)
    }
}

/// Dehn value Σ lᵢ ⊗ θ̄ᵢ in the basis {β̄, δ̄} of the golden angles mod π.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DehnValue {
    pub beta: GoldenNumber,
    pub delta: GoldenNumber,
}

impl DehnValue {
    pub fn new(beta: GoldenNumber, delta: GoldenNumber) -> Self {
        DehnValue { beta, delta }
    }

    pub fn zero() -> Self {
        DehnValue::default()
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_zero() && self.delta.is_zero()
    }

    /// c ⊗ ᾱ, rewritten through ᾱ = −β̄ − δ̄.
    pub fn alpha_multiple(c: &GoldenNumber) -> Self {
        DehnValue {
            beta: -c,
            delta: -c,
        }
    }

    /// The c with self = c ⊗ ᾱ, when only ᾱ occurs.
    pub fn alpha_coefficient(&self) -> Option<GoldenNumber> {
        (self.beta == self.delta).then(|| -&self.beta)
    }

    pub fn components(&self) -> [&GoldenNumber; 2] {
        [&self.beta, &self.delta]
    }
}

impl fmt::Display for DehnValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})⊗β + ({})⊗δ", self.beta, self.delta)
    }
}

impl fmt::Debug for DehnValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&DehnValue> for &DehnValue {
    type Output = DehnValue;
    fn add(self, rhs: &DehnValue) -> DehnValue {
        DehnValue {
            beta: &self.beta + &rhs.beta,
            delta: &self.delta + &rhs.delta,
        }
    }
}

impl Sub<&DehnValue> for &DehnValue {
    type Output = DehnValue;
    fn sub(self, rhs: &DehnValue) -> DehnValue {
        DehnValue {
            beta: &self.beta - &rhs.beta,
            delta: &self.delta - &rhs.delta,
        }
    }
}

impl Add for DehnValue {
    type Output = DehnValue;
    fn add(self, rhs: DehnValue) -> DehnValue {
        &self + &rhs
    }
}

impl std::iter::Sum for DehnValue {
    fn sum<I: Iterator<Item = DehnValue>>(iter: I) -> Self {
        iter.fold(DehnValue::zero(), |acc, d| &acc + &d)
    }
}

/// Σ lᵢ ⊗ θ̄ᵢ; rational multiples of π vanish.
pub fn dehn_accumulate<'a, I>(terms: I) -> Result<DehnValue>
where
    I: IntoIterator<Item = (&'a GoldenNumber, &'a AngleExpr)>,
{
    let mut acc = DehnValue::zero();
    for (length, angle) in terms {
        if angle.has_crs_terms() {
            return Err(Error::UnsupportedExpr(format!(
                "{angle}: Dehn values are normalised over β, δ only"
            )));
        }
        acc.beta = &acc.beta + &length.scale(&angle.beta);
        acc.delta = &acc.delta + &length.scale(&angle.delta);
    }
    Ok(acc)
}

pub fn dehn_scale(d: &DehnValue, s: &GoldenNumber) -> DehnValue {
    DehnValue {
        beta: &d.beta * s,
        delta: &d.delta * s,
    }
}
