//! Tetrahedra with edges in Q[τ]: exact volumes, dihedral cosines, the
//! golden family and its names, and Dehn invariants of polyhedra given by
//! their edge data.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::angles::{dehn_accumulate, identify_angle, AngleExpr, DehnValue};
use crate::error::{Error, Result};
use crate::exactnum::numeric::NumCtx;
use crate::exactnum::{is_square_in_qtau, sqrt_in_tower, GoldenMatrix, GoldenNumber, Rational, TowerElement};

/// Edge order used for edge-indexed data: 01, 02, 03, 12, 13, 23.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Faces listed by the vertex they omit.
pub const FACES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

pub fn edge_index(i: usize, j: usize) -> usize {
    let key = if i < j { (i, j) } else { (j, i) };
    EDGES
        .iter()
        .position(|&e| e == key)
        .unwrap_or_else(|| panic!("no edge between {i} and {j}"))
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// A tetrahedron given by its six edge lengths in [`EDGES`] order.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetrahedronSpec {
    pub edges: [GoldenNumber; 6],
}

impl TetrahedronSpec {
    pub fn new(edges: [GoldenNumber; 6]) -> Self {
        TetrahedronSpec { edges }
    }

    /// Label 0 is length 1, label 1 is length τ.
    pub fn from_labels(labels: [u8; 6]) -> Self {
        TetrahedronSpec {
            edges: labels.map(|l| if l == 0 { GoldenNumber::one() } else { GoldenNumber::tau() }),
        }
    }

    pub fn regular(side: GoldenNumber) -> Self {
        TetrahedronSpec {
            edges: std::array::from_fn(|_| side.clone()),
        }
    }

    /// The 0/1 label vector when every edge is 1 or τ.
    pub fn labels(&self) -> Option<[u8; 6]> {
        let tau = GoldenNumber::tau();
        let mut out = [0u8; 6];
        for (o, e) in out.iter_mut().zip(&self.edges) {
            *o = if e.is_one() {
                0
            } else if *e == tau {
                1
            } else {
                return None;
            };
        }
        Some(out)
    }

    pub fn length(&self, i: usize, j: usize) -> &GoldenNumber {
        &self.edges[edge_index(i, j)]
    }

    fn sq(&self, i: usize, j: usize) -> GoldenNumber {
        if i == j {
            return GoldenNumber::zero();
        }
        let l = self.length(i, j);
        l * l
    }

    /// Vertex v is renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut edges: [GoldenNumber; 6] = std::array::from_fn(|_| GoldenNumber::zero());
        for (k, &(i, j)) in EDGES.iter().enumerate() {
            edges[edge_index(perm[i], perm[j])] = self.edges[k].clone();
        }
        TetrahedronSpec { edges }
    }

    /// Half the Gram entry (v_u − v_o)·(v_w − v_o) from squared lengths.
    fn dot(&self, o: usize, u: usize, w: usize) -> GoldenNumber {
        (&(&self.sq(o, u) + &self.sq(o, w)) - &self.sq(u, w)).scale(&Rational::new(1, 2))
    }

    pub fn face_lengths(&self, face: usize) -> [&GoldenNumber; 3] {
        let [a, b, c] = FACES[face];
        [self.length(a, b), self.length(a, c), self.length(b, c)]
    }
}

impl fmt::Debug for TetrahedronSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.labels() {
            Some(l) => write!(f, "Tetrahedron{l:?}"),
            None => write!(f, "Tetrahedron{:?}", self.edges),
        }
    }
}

/// Triangle classes occurring in the golden family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FaceType {
    /// Regular with side 1.
    RegularUnit,
    /// Regular with side τ.
    RegularTau,
    /// Sides 1, 1, τ.
    Obtuse,
    /// Sides τ, τ, 1.
    Acute,
}

impl FaceType {
    pub fn of_labels(labels: [u8; 3]) -> Self {
        match labels.iter().filter(|&&l| l == 1).count() {
            0 => FaceType::RegularUnit,
            1 => FaceType::Obtuse,
            2 => FaceType::Acute,
            _ => FaceType::RegularTau,
        }
    }
}

/// Face counts of a golden tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FaceMultiset {
    pub regular_unit: u8,
    pub regular_tau: u8,
    pub obtuse: u8,
    pub acute: u8,
}

impl FaceMultiset {
    pub fn of(spec: &TetrahedronSpec) -> Option<Self> {
        let labels = spec.labels()?;
        let mut m = FaceMultiset::default();
        for [a, b, c] in FACES {
            let ft = FaceType::of_labels([
                labels[edge_index(a, b)],
                labels[edge_index(a, c)],
                labels[edge_index(b, c)],
            ]);
            match ft {
                FaceType::RegularUnit => m.regular_unit += 1,
                FaceType::RegularTau => m.regular_tau += 1,
                FaceType::Obtuse => m.obtuse += 1,
                FaceType::Acute => m.acute += 1,
            }
        }
        Some(m)
    }

    /// Number of distinct face types present.
    pub fn distinct(&self) -> usize {
        [self.regular_unit, self.regular_tau, self.obtuse, self.acute]
            .iter()
            .filter(|&&c| c > 0)
            .count()
    }

    /// Σ count · area.
    pub fn total_area(&self) -> TowerElement {
        let t = FaceAreaTable::new();
        let k = |n: u8| GoldenNumber::from(n as i64);
        &(&t.regular.scale(&k(self.regular_unit)) + &t.regular_tau().scale(&k(self.regular_tau)))
            + &(&t.obtuse.scale(&k(self.obtuse)) + &t.acute.scale(&k(self.acute)))
    }
}

/// Exact areas of the golden triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceAreaTable {
    /// √3/4
    pub regular: TowerElement,
    /// ρ/4
    pub obtuse: TowerElement,
    /// τρ/4
    pub acute: TowerElement,
}

impl FaceAreaTable {
    pub fn new() -> Self {
        let quarter = GoldenNumber::rational(Rational::new(1, 4));
        FaceAreaTable {
            regular: TowerElement::sqrt3().scale(&quarter),
            obtuse: TowerElement::rho().scale(&quarter),
            acute: TowerElement::rho().scale(&(&quarter * &GoldenNumber::tau())),
        }
    }

    /// τ²√3/4, the regular triangle of side τ.
    pub fn regular_tau(&self) -> TowerElement {
        self.regular.scale(&GoldenNumber::tau_pow(2))
    }

    pub fn area(&self, ft: FaceType) -> TowerElement {
        match ft {
            FaceType::RegularUnit => self.regular.clone(),
            FaceType::RegularTau => self.regular_tau(),
            FaceType::Obtuse => self.obtuse.clone(),
            FaceType::Acute => self.acute.clone(),
        }
    }
}

impl Default for FaceAreaTable {
    fn default() -> Self {
        FaceAreaTable::new()
    }
}

/// Exact area of a triangle with the given sides, by Heron's formula.
pub fn triangle_area(a: &GoldenNumber, b: &GoldenNumber, c: &GoldenNumber) -> Result<TowerElement> {
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let two = GoldenNumber::from(2);
    let pairs = &(&(&a2 * &b2) + &(&b2 * &c2)) + &(&c2 * &a2);
    let quads = &(&(&a2 * &a2) + &(&b2 * &b2)) + &(&c2 * &c2);
    let sixteen_a2 = &(&two * &pairs) - &quads;
    let area2 = sixteen_a2.scale(&Rational::new(1, 16));
    sqrt_in_tower(&area2).ok_or_else(|| Error::NotRepresentable(format!("area² = {area2}")))
}

/// 288·V², the Cayley–Menger determinant.
pub fn cayley_menger(t: &TetrahedronSpec) -> GoldenNumber {
    let mut m = GoldenMatrix::zeros(5, 5);
    for i in 0..4 {
        m.set(0, i + 1, GoldenNumber::one());
        m.set(i + 1, 0, GoldenNumber::one());
        for j in 0..4 {
            m.set(i + 1, j + 1, t.sq(i, j));
        }
    }
    m.determinant().expect("square matrix")
}

/// Exact volume; zero for a flat tetrahedron.
pub fn cm_volume(t: &TetrahedronSpec) -> Result<GoldenNumber> {
    let v2 = cayley_menger(t).scale(&Rational::new(1, 288));
    is_square_in_qtau(&v2).ok_or_else(|| Error::NotRepresentable(format!("V² = {v2}")))
}

/// Cosine of the interior dihedral angle along edge `edge` (index into
/// [`EDGES`]).
///
/// With e, f, g the edge vectors from one endpoint, the angle is the one
/// between e×f and e×g, and
/// (e×f)·(e×g) = (e·e)(f·g) − (e·g)(e·f).
pub fn dihedral_cos(t: &TetrahedronSpec, edge: usize) -> Result<TowerElement> {
    if cayley_menger(t).is_zero() {
        return Err(Error::Degenerate);
    }
    let (i, j) = EDGES[edge];
    let mut rest = (0..4).filter(|&v| v != i && v != j);
    let (k, l) = (rest.next().unwrap(), rest.next().unwrap());
    let ee = t.dot(i, j, j);
    let ff = t.dot(i, k, k);
    let gg = t.dot(i, l, l);
    let ef = t.dot(i, j, k);
    let eg = t.dot(i, j, l);
    let fg = t.dot(i, k, l);
    let num = &(&ee * &fg) - &(&eg * &ef);
    let n1 = &(&ee * &ff) - &(&ef * &ef);
    let n2 = &(&ee * &gg) - &(&eg * &eg);
    let r1 = sqrt_in_tower(&n1).ok_or_else(|| Error::NotRepresentable(format!("|e×f|² = {n1}")))?;
    let r2 = sqrt_in_tower(&n2).ok_or_else(|| Error::NotRepresentable(format!("|e×g|² = {n2}")))?;
    // num / (r1 r2) = num · r1 r2 / (n1 n2)
    let denom = (&n1 * &n2).inverse().ok_or(Error::Degenerate)?;
    Ok((&r1 * &r2).scale(&(&num * &denom)))
}

/// Dihedral angles of all six edges, identified as qπ + mβ + nδ.
pub fn dihedral_angles(t: &TetrahedronSpec, ctx: &mut NumCtx) -> Result<[AngleExpr; 6]> {
    let mut out: [AngleExpr; 6] = Default::default();
    for (e, slot) in out.iter_mut().enumerate() {
        *slot = identify_angle(&dihedral_cos(t, e)?, ctx)?;
    }
    Ok(out)
}

pub fn tetrahedron_dehn(t: &TetrahedronSpec, ctx: &mut NumCtx) -> Result<DehnValue> {
    let angles = dihedral_angles(t, ctx)?;
    dehn_accumulate(t.edges.iter().zip(angles.iter()))
}

/// Lexicographically smallest label vector over the 24 vertex relabelings.
pub fn canonical_labels(labels: [u8; 6]) -> [u8; 6] {
    permutations(4)
        .iter()
        .map(|p| {
            let mut out = [0u8; 6];
            for (k, &(i, j)) in EDGES.iter().enumerate() {
                out[edge_index(p[i], p[j])] = labels[k];
            }
            out
        })
        .min()
        .expect("24 relabelings")
}

/// Congruence classes of tetrahedra with edges in {1, τ} whose faces are
/// not all congruent, ordered by canonical label vector. Exactly one is flat.
pub fn enumerate_golden_tetrahedra() -> Vec<TetrahedronSpec> {
    let mut classes: Vec<[u8; 6]> = (0u8..64)
        .map(|bits| canonical_labels(std::array::from_fn(|k| (bits >> (5 - k)) & 1)))
        .collect();
    classes.sort();
    classes.dedup();
    classes
        .into_iter()
        .map(TetrahedronSpec::from_labels)
        .filter(|t| FaceMultiset::of(t).is_some_and(|m| m.distinct() >= 2))
        .collect()
}

pub fn is_flat(t: &TetrahedronSpec) -> bool {
    cayley_menger(t).is_zero()
}

/// Names of the six non-flat golden tetrahedra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GoldenName {
    #[serde(rename = "A*")]
    A,
    #[serde(rename = "B*")]
    B,
    #[serde(rename = "C*")]
    C,
    #[serde(rename = "D*")]
    D,
    #[serde(rename = "F*")]
    F,
    #[serde(rename = "G*")]
    G,
}

impl GoldenName {
    pub const ALL: [GoldenName; 6] = [
        GoldenName::A,
        GoldenName::B,
        GoldenName::C,
        GoldenName::D,
        GoldenName::F,
        GoldenName::G,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// 12·volume of the named tetrahedron.
    pub fn reference_volume12(self) -> GoldenNumber {
        let (a, b) = match self {
            GoldenName::A => (1, 2),
            GoldenName::B => (1, 0),
            GoldenName::C => (1, 1),
            GoldenName::D => (0, 1),
            GoldenName::F => (1, 1),
            GoldenName::G => (0, 1),
        };
        GoldenNumber::int(a, b)
    }

    pub fn reference_volume(self) -> GoldenNumber {
        self.reference_volume12().scale(&Rational::new(1, 12))
    }

    pub fn reference_dehn(self) -> DehnValue {
        let g = GoldenNumber::int;
        match self {
            GoldenName::A => DehnValue::new(g(-1, -1), g(-1, 5)),
            GoldenName::B => DehnValue::new(g(5, 1), g(-1, 1)),
            GoldenName::C => DehnValue::new(g(-2, 3), g(-2, 0)),
            GoldenName::D => DehnValue::new(g(0, -2), g(-3, -2)),
            GoldenName::F => DehnValue::new(g(0, -3), g(3, -3)),
            GoldenName::G => DehnValue::new(g(3, 3), g(3, 0)),
        }
    }
}

impl fmt::Display for GoldenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            GoldenName::A => 'A',
            GoldenName::B => 'B',
            GoldenName::C => 'C',
            GoldenName::D => 'D',
            GoldenName::F => 'F',
            GoldenName::G => 'G',
        };
        write!(f, "{c}*")
    }
}

impl FromStr for GoldenName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_end_matches('*');
        GoldenName::ALL
            .into_iter()
            .find(|n| n.to_string().trim_end_matches('*').eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown tetrahedron name {s:?}")))
    }
}

/// A named golden tetrahedron with its computed invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: GoldenName,
    pub labels: [u8; 6],
    pub spec: TetrahedronSpec,
    pub volume: GoldenNumber,
    pub dehn: DehnValue,
    pub angles: [AngleExpr; 6],
    pub faces: FaceMultiset,
}

impl CatalogEntry {
    pub fn invariants(&self) -> Invariants {
        Invariants {
            volume: self.volume.clone(),
            dehn: self.dehn.clone(),
        }
    }

    pub fn to_polyhedron(&self) -> ExactPolyhedron {
        ExactPolyhedron {
            edges: self
                .spec
                .edges
                .iter()
                .zip(&self.angles)
                .map(|(l, a)| PolyEdge {
                    length: l.clone(),
                    angle: a.clone(),
                })
                .collect(),
            volume: Some(self.volume.clone()),
        }
    }
}

/// The six named entries in name order plus the flat candidate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub flat: TetrahedronSpec,
}

impl Catalog {
    pub fn get(&self, name: GoldenName) -> &CatalogEntry {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .expect("complete catalog")
    }

    pub fn volumes(&self) -> Vec<GoldenNumber> {
        GoldenName::ALL.iter().map(|&n| self.get(n).volume.clone()).collect()
    }

    pub fn dehn_values(&self) -> Vec<DehnValue> {
        GoldenName::ALL.iter().map(|&n| self.get(n).dehn.clone()).collect()
    }
}

struct Computed {
    spec: TetrahedronSpec,
    volume: GoldenNumber,
    dehn: DehnValue,
    angles: [AngleExpr; 6],
}

/// Names the six non-flat classes by matching computed volumes and Dehn
/// values against the reference table; the matching bijection must be
/// unique.
pub fn catalog_identify(specs: &[TetrahedronSpec], ctx: &mut NumCtx) -> Result<Vec<CatalogEntry>> {
    let mut computed = Vec::with_capacity(specs.len());
    for spec in specs {
        let angles = dihedral_angles(spec, ctx)?;
        let dehn = dehn_accumulate(spec.edges.iter().zip(angles.iter()))?;
        computed.push(Computed {
            spec: spec.clone(),
            volume: cm_volume(spec)?,
            dehn,
            angles,
        });
    }
    if computed.len() != GoldenName::ALL.len() {
        return Err(Error::NoMatch);
    }
    let matches = |c: &Computed, n: GoldenName| c.volume == n.reference_volume() && c.dehn == n.reference_dehn();
    let bijections: Vec<Vec<usize>> = permutations(6)
        .into_iter()
        .filter(|p| p.iter().enumerate().all(|(s, &n)| matches(&computed[s], GoldenName::ALL[n])))
        .collect();
    let perm = match bijections.len() {
        0 => return Err(Error::NoMatch),
        1 => &bijections[0],
        k => return Err(Error::AmbiguousNaming(k)),
    };
    let mut entries: Vec<CatalogEntry> = computed
        .into_iter()
        .zip(perm)
        .map(|(c, &n)| CatalogEntry {
            name: GoldenName::ALL[n],
            labels: c.spec.labels().unwrap_or_default(),
            faces: FaceMultiset::of(&c.spec).unwrap_or_default(),
            spec: c.spec,
            volume: c.volume,
            dehn: c.dehn,
            angles: c.angles,
        })
        .collect();
    entries.sort_by_key(|e| e.name);
    Ok(entries)
}

/// Enumerates, separates the flat candidate and names the rest.
pub fn build_catalog(ctx: &mut NumCtx) -> Result<Catalog> {
    let (flat, solid): (Vec<_>, Vec<_>) = enumerate_golden_tetrahedra().into_iter().partition(is_flat);
    let flat = match <[TetrahedronSpec; 1]>::try_from(flat) {
        Ok([f]) => f,
        Err(v) => {
            return Err(Error::CatalogIncomplete {
                expected: 1,
                found: v.len(),
            })
        }
    };
    Ok(Catalog {
        entries: catalog_identify(&solid, ctx)?,
        flat,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyEdge {
    pub length: GoldenNumber,
    pub angle: AngleExpr,
}

/// Edge data of a polyhedron, optionally with its volume.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExactPolyhedron {
    pub edges: Vec<PolyEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<GoldenNumber>,
}

impl ExactPolyhedron {
    pub fn unit_cube() -> Self {
        ExactPolyhedron {
            edges: (0..12)
                .map(|_| PolyEdge {
                    length: GoldenNumber::one(),
                    angle: AngleExpr::right_angle(),
                })
                .collect(),
            volume: Some(GoldenNumber::one()),
        }
    }

    /// Lengths scaled by s; the volume by s³.
    pub fn scaled(&self, s: &GoldenNumber) -> Self {
        ExactPolyhedron {
            edges: self
                .edges
                .iter()
                .map(|e| PolyEdge {
                    length: &e.length * s,
                    angle: e.angle.clone(),
                })
                .collect(),
            volume: self.volume.as_ref().map(|v| v * &s.pow(3)),
        }
    }

    /// Disjoint union of edge lists (volumes add when both are known).
    pub fn union(&self, other: &Self) -> Self {
        ExactPolyhedron {
            edges: self.edges.iter().chain(&other.edges).cloned().collect(),
            volume: match (&self.volume, &other.volume) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }
}

pub fn polyhedron_dehn(p: &ExactPolyhedron) -> Result<DehnValue> {
    dehn_accumulate(p.edges.iter().map(|e| (&e.length, &e.angle)))
}

/// Volume and Dehn invariant: a complete scissors invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub volume: GoldenNumber,
    pub dehn: DehnValue,
}

pub fn scissor_equivalent(p1: &Invariants, p2: &Invariants) -> bool {
    p1.volume == p2.volume && p1.dehn == p2.dehn
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::dehn_scale;

    fn g(a: i64, b: i64) -> GoldenNumber {
        GoldenNumber::int(a, b)
    }

    #[test]
    fn regular_tetrahedron() {
        let t = TetrahedronSpec::regular(GoldenNumber::one());
        assert_eq!(cayley_menger(&t), g(4, 0));
        assert!(matches!(cm_volume(&t), Err(Error::NotRepresentable(_))));
        assert_eq!(dihedral_cos(&t, 0).unwrap(), TowerElement::from(Rational::new(1, 3)));
    }

    #[test]
    fn enumeration_counts() {
        let all = enumerate_golden_tetrahedra();
        assert_eq!(all.len(), 7);
        let flat: Vec<_> = all.iter().filter(|t| is_flat(t)).collect();
        assert_eq!(flat.len(), 1);
        assert_eq!(flat[0].labels(), Some([0, 0, 1, 1, 0, 1]));
        assert!(dihedral_cos(flat[0], 0).is_err());
        assert!(all.iter().all(|t| t.labels() != Some([0; 6])));
    }

    #[test]
    fn volume_multiset() {
        let mut v: Vec<GoldenNumber> = enumerate_golden_tetrahedra()
            .iter()
            .filter(|t| !is_flat(t))
            .map(|t| cm_volume(t).unwrap().scale(&Rational::from(12)))
            .collect();
        let mut want = vec![g(1, 2), g(1, 0), g(1, 1), g(0, 1), g(1, 1), g(0, 1)];
        v.sort();
        want.sort();
        assert_eq!(v, want);
    }

    #[test]
    fn areas_match_table() {
        let t = FaceAreaTable::new();
        let one = GoldenNumber::one();
        let tau = GoldenNumber::tau();
        assert_eq!(triangle_area(&one, &one, &one).unwrap(), t.regular);
        assert_eq!(triangle_area(&one, &one, &tau).unwrap(), t.obtuse);
        assert_eq!(triangle_area(&tau, &tau, &one).unwrap(), t.acute);
        assert_eq!(triangle_area(&tau, &tau, &tau).unwrap(), t.regular_tau());
    }

    #[test]
    fn relabel_invariance() {
        let t = TetrahedronSpec::from_labels([0, 1, 1, 1, 1, 1]);
        let v = cm_volume(&t).unwrap();
        for p in permutations(4) {
            assert_eq!(cm_volume(&t.relabel(&p)).unwrap(), v);
        }
    }

    #[test]
    fn catalog_names() {
        let mut ctx = NumCtx::default();
        let cat = build_catalog(&mut ctx).unwrap();
        let labels: Vec<[u8; 6]> = GoldenName::ALL.iter().map(|&n| cat.get(n).labels).collect();
        assert_eq!(
            labels,
            vec![
                [0, 1, 1, 1, 1, 1],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 1, 1, 1, 1],
                [0, 0, 0, 0, 1, 1],
                [0, 0, 1, 0, 1, 1],
                [0, 0, 0, 1, 1, 1],
            ]
        );
        for n in GoldenName::ALL {
            let e = cat.get(n);
            let areas: TowerElement = (0..4)
                .map(|f| {
                    let [a, b, c] = e.spec.face_lengths(f);
                    triangle_area(a, b, c).unwrap()
                })
                .fold(TowerElement::zero(), |acc, x| &acc + &x);
            assert_eq!(areas, e.faces.total_area(), "{n}");
        }
        let sum = &(&cat.get(GoldenName::A).dehn + &cat.get(GoldenName::C).dehn) + &cat.get(GoldenName::G).dehn;
        assert_eq!(sum, DehnValue::new(g(0, 5), g(0, 5)));
    }

    #[test]
    fn a_star_alpha_edge() {
        let t = TetrahedronSpec::from_labels([0, 1, 1, 1, 1, 1]);
        let cos_alpha: TowerElement = GoldenNumber::sqrt5().scale(&Rational::new(1, 5)).into();
        assert!((0..6).any(|e| dihedral_cos(&t, e).unwrap() == cos_alpha));
    }

    #[test]
    fn polyhedron_examples() {
        assert!(polyhedron_dehn(&ExactPolyhedron::unit_cube()).unwrap().is_zero());
        let mut ctx = NumCtx::default();
        let cat = build_catalog(&mut ctx).unwrap();
        let a = cat.get(GoldenName::A);
        let scaled = a.to_polyhedron().scaled(&GoldenNumber::tau());
        assert_eq!(polyhedron_dehn(&scaled).unwrap(), dehn_scale(&a.dehn, &GoldenNumber::tau()));
        let c = cat.get(GoldenName::C).invariants();
        let f = cat.get(GoldenName::F).invariants();
        assert_eq!(c.volume, f.volume);
        assert!(!scissor_equivalent(&c, &f));
        assert!(scissor_equivalent(&c, &c));
        let cube = Invariants {
            volume: GoldenNumber::one(),
            dehn: DehnValue::zero(),
        };
        assert!(!scissor_equivalent(&cube, &a.invariants()));
    }

    #[test]
    fn polyhedron_json() {
        let json = r#"{"edges":[{"length":{"a":"1","b":"0"},"angle":{"pi":"1/2","beta":"0","delta":"0"}}]}"#;
        let p: ExactPolyhedron = serde_json::from_str(json).unwrap();
        assert_eq!(p.edges.len(), 1);
        assert_eq!(p.edges[0].angle, AngleExpr::right_angle());
    }
}
