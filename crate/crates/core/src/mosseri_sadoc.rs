//! Mosseri–Sadoc tiles z, h, s, a (and the split h = m ∪ r) as packings of
//! golden tetrahedra, and the matrix identities relating their inflation
//! to the tetrahedra inflations.
//!
//! Matrices act on tile-count row vectors: row i of an inflation matrix
//! lists the content of the inflated tile i, and a packing map ψ has one
//! row per tetrahedron and one column per tile. With this convention the
//! induced operator N of M on Im ψ satisfies ψᵀ·M = N·ψᵀ.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::angles::DehnValue;
use crate::error::{Error, Result};
use crate::exactnum::{GoldenMatrix, GoldenNumber, Matrix, Rational, RationalMatrix, Scalar};
use crate::inflation::{primitive_vector, InvariantSystem};
use crate::polyhedra::{Catalog, GoldenName};

pub const MS_TILES: [&str; 4] = ["z", "h", "s", "a"];
pub const FIVE_TILES: [&str; 5] = ["a", "m", "r", "z", "s"];
pub const COLORED_TETRAHEDRA: [&str; 8] = ["A*", "B*", "C*b", "C*r", "D*", "F*", "G*b", "G*r"];

/// Uncolored name of each colored tetrahedron.
pub const COLOR_BASE: [GoldenName; 8] = [
    GoldenName::A,
    GoldenName::B,
    GoldenName::C,
    GoldenName::C,
    GoldenName::D,
    GoldenName::F,
    GoldenName::G,
    GoldenName::G,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PackingName {
    PsiGt,
    PsiGtFive,
    Psi2f,
    Psi2fFive,
}

/// How tiles are packed from tetrahedra: entry (t, j) counts copies of
/// tetrahedron t inside tile j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingMap {
    pub name: PackingName,
    pub sources: Vec<String>,
    pub tiles: Vec<String>,
    pub matrix: RationalMatrix,
}

impl PackingMap {
    fn from_columns(name: PackingName, sources: &[&str], tiles: &[&str], cols: &[&[i64]]) -> Self {
        PackingMap {
            name,
            sources: sources.iter().map(|s| s.to_string()).collect(),
            tiles: tiles.iter().map(|s| s.to_string()).collect(),
            matrix: RationalMatrix::from_columns(
                cols.iter().map(|c| c.iter().map(|&x| Rational::from(x)).collect()).collect(),
            )
            .expect("equal column lengths"),
        }
    }

    /// Base tetrahedron name of each source row.
    pub fn source_names(&self) -> Vec<GoldenName> {
        if self.sources.len() == 8 {
            COLOR_BASE.to_vec()
        } else {
            GoldenName::ALL.to_vec()
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.matrix.cols()
    }

    pub fn column_of(&self, tile: &str) -> Option<Vec<Rational>> {
        self.tiles.iter().position(|t| t == tile).map(|j| self.matrix.column(j))
    }
}

const GT: [&str; 6] = ["A*", "B*", "C*", "D*", "F*", "G*"];

pub fn psi_gt() -> PackingMap {
    PackingMap::from_columns(
        PackingName::PsiGt,
        &GT,
        &MS_TILES,
        &[&[1, 0, 1, 0, 0, 1], &[1, 1, 0, 0, 2, 2], &[1, 0, 2, 0, 0, 0], &[0, 0, 0, 1, 1, 0]],
    )
}

/// ψ_gt on the five tiles (a, m, r, z, s).
pub fn psi_gt_five() -> PackingMap {
    PackingMap::from_columns(
        PackingName::PsiGtFive,
        &GT,
        &FIVE_TILES,
        &[
            &[0, 0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 2, 0],
            &[1, 0, 0, 0, 0, 2],
            &[1, 0, 1, 0, 0, 1],
            &[1, 0, 2, 0, 0, 0],
        ],
    )
}

pub fn psi_2f() -> PackingMap {
    PackingMap::from_columns(
        PackingName::Psi2f,
        &COLORED_TETRAHEDRA,
        &MS_TILES,
        &[
            &[1, 0, 1, 0, 0, 0, 0, 1],
            &[1, 1, 0, 0, 0, 2, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
        ],
    )
}

/// ψ_2F on the five tiles (a, m, r, z, s).
pub fn psi_2f_five() -> PackingMap {
    PackingMap::from_columns(
        PackingName::Psi2fFive,
        &COLORED_TETRAHEDRA,
        &FIVE_TILES,
        &[
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 0, 0, 2, 0, 0],
            &[1, 0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 0, 0, 0, 0, 1],
            &[1, 0, 1, 1, 0, 0, 0, 0],
        ],
    )
}

/// Inflation matrix of z, h, s, a.
pub fn m_ms() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[[1, 1, 1, 1], [2, 1, 2, 2], [1, 1, 1, 2], [0, 0, 1, 2]])
}

/// Inflation matrix of a, m, r, z, s.
pub fn five_tile_matrix() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[
        [2, 0, 0, 0, 1],
        [2, 0, 0, 1, 1],
        [0, 1, 1, 1, 1],
        [1, 1, 1, 1, 1],
        [2, 1, 1, 1, 1],
    ])
}

/// Inflation matrix of the eight colored golden tetrahedra over Z[τ],
/// stored as (τ⁰, τ¹) pairs.
const M_2F_ENTRIES: [[(i64, i64); 8]; 8] = [
    [(-16, 11), (0, 0), (-2, 2), (-3, 2), (0, 0), (-13, 9), (-1, 1), (-4, 3)],
    [(0, 0), (0, 0), (0, 0), (1, 0), (0, 0), (0, 0), (0, 0), (1, 0)],
    [(4, -2), (1, 0), (0, 0), (2, -1), (1, 0), (3, -1), (0, 0), (2, -1)],
    [(15, -9), (0, 0), (4, -2), (2, -1), (1, 0), (14, -8), (2, -1), (4, -2)],
    [(0, 0), (0, 0), (0, 0), (1, 0), (1, 0), (1, 0), (0, 0), (0, 0)],
    [(1, 0), (0, 0), (1, 0), (0, 0), (1, 0), (1, 0), (0, 0), (0, 0)],
    [(4, -2), (1, 0), (0, 0), (2, -1), (0, 0), (2, -1), (0, 0), (2, -1)],
    [(15, -9), (0, 0), (4, -2), (2, -1), (0, 0), (13, -8), (2, -1), (4, -2)],
];

pub fn m_2f() -> GoldenMatrix {
    GoldenMatrix::from_rows(
        M_2F_ENTRIES
            .iter()
            .map(|row| row.iter().map(|&(a, b)| GoldenNumber::int(a, b)).collect())
            .collect(),
    )
    .expect("8x8")
}

/// 12·volumes of z, h, s, a.
pub fn reference_ms_volumes12() -> [GoldenNumber; 4] {
    [GoldenNumber::int(2, 4), GoldenNumber::int(4, 6), GoldenNumber::int(3, 4), GoldenNumber::int(1, 2)]
}

/// c with d(tile) = c ⊗ ᾱ, for z, h, s, a.
pub fn reference_ms_alpha_coefficients() -> [GoldenNumber; 4] {
    let five = GoldenNumber::from(-5);
    [
        GoldenNumber::tau(),
        GoldenNumber::from(2),
        GoldenNumber::int(-1, 1),
        GoldenNumber::int(0, -1),
    ]
    .map(|x| &x * &five)
}

/// (12·volume, ᾱ-coefficient) of m and r.
pub fn reference_m_r() -> [(GoldenNumber, GoldenNumber); 2] {
    [
        (GoldenNumber::int(3, 2), GoldenNumber::int(-5, 5)),
        (GoldenNumber::int(1, 4), GoldenNumber::int(-5, -5)),
    ]
}

/// Volumes and Dehn values of the tiles of a packing map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileInvariants {
    pub tiles: Vec<String>,
    pub volumes: Vec<GoldenNumber>,
    pub dehn: Vec<DehnValue>,
}

impl TileInvariants {
    pub fn get(&self, tile: &str) -> Option<(&GoldenNumber, &DehnValue)> {
        let i = self.tiles.iter().position(|t| t == tile)?;
        Some((&self.volumes[i], &self.dehn[i]))
    }

    /// Every Dehn value is a multiple of ᾱ alone.
    pub fn alpha_collapse(&self) -> bool {
        self.dehn.iter().all(|d| d.alpha_coefficient().is_some())
    }
}

/// Sums catalog invariants along the columns of ψ.
pub fn build_tile_invariants(catalog: &Catalog, psi: &PackingMap) -> Result<TileInvariants> {
    let found = GoldenName::ALL
        .iter()
        .filter(|&&n| catalog.entries.iter().any(|e| e.name == n))
        .count();
    if found != GoldenName::ALL.len() {
        return Err(Error::CatalogIncomplete {
            expected: GoldenName::ALL.len(),
            found,
        });
    }
    let names = psi.source_names();
    let mut volumes = Vec::new();
    let mut dehn = Vec::new();
    for j in 0..psi.tiles.len() {
        let mut vol = GoldenNumber::zero();
        let mut d = DehnValue::zero();
        for (t, name) in names.iter().enumerate() {
            let k = GoldenNumber::rational(psi.matrix.get(t, j).clone());
            if k.is_zero() {
                continue;
            }
            let entry = catalog.get(*name);
            vol = &vol + &(&entry.volume * &k);
            d = &d + &crate::angles::dehn_scale(&entry.dehn, &k);
        }
        volumes.push(vol);
        dehn.push(d);
    }
    Ok(TileInvariants {
        tiles: psi.tiles.clone(),
        volumes,
        dehn,
    })
}

/// The Mosseri–Sadoc system: 12·volumes and one Dehn vector, since every
/// tile's Dehn value lies on the ᾱ line.
pub fn ms_invariant_system(ti: &TileInvariants) -> Result<InvariantSystem> {
    if !ti.alpha_collapse() {
        return Err(Error::UnsupportedExpr("Dehn values are not multiples of ᾱ".into()));
    }
    let beta: Vec<GoldenNumber> = ti.dehn.iter().map(|d| d.beta.clone()).collect();
    Ok(InvariantSystem::new(
        primitive_vector(&ti.volumes),
        vec![primitive_vector(&beta)],
        GoldenNumber::tau(),
    ))
}

/// Solves ψᵀ·M = N·ψᵀ. Returns None when Im ψ is not M-invariant.
pub fn subspace_invariance<T: Scalar>(m: &Matrix<T>, psi: &PackingMap) -> Result<Option<Matrix<T>>> {
    if !psi.is_injective() {
        return Err(Error::NotInjective {
            rank: psi.rank(),
            cols: psi.matrix.cols(),
        });
    }
    if !m.is_square() || m.rows() != psi.matrix.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator against a packing map with {} rows",
            m.rows(),
            m.cols(),
            psi.matrix.rows()
        )));
    }
    let pt: Matrix<T> = psi.matrix.transpose().map(|r| T::from(r.clone()));
    let rhs = pt.mul(m)?;
    let basis = pt.pivot_columns();
    let n = Matrix::solve_right(&pt.select_columns(&basis), &rhs.select_columns(&basis))?;
    Ok((n.mul(&pt)? == rhs).then_some(n))
}

/// First cell where `found` differs from `expected`.
pub fn first_mismatch<T: Scalar + std::fmt::Display>(expected: &Matrix<T>, found: &Matrix<T>) -> Option<Error> {
    if expected.rows() != found.rows() || expected.cols() != found.cols() {
        return Some(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            expected.rows(),
            expected.cols(),
            found.rows(),
            found.cols()
        )));
    }
    for r in 0..expected.rows() {
        for c in 0..expected.cols() {
            if expected.get(r, c) != found.get(r, c) {
                return Some(Error::MatrixMismatch {
                    row: r + 1,
                    col: c + 1,
                    expected: expected.get(r, c).to_string(),
                    found: found.get(r, c).to_string(),
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiveTileReport {
    /// ψ(e_r + e_s − 2e_z) = 0 in the tetrahedra basis.
    pub kernel_relation: bool,
    pub psi_rank: usize,
    pub determinant: Rational,
    /// row s = 2·row z − row r.
    pub row_dependency: bool,
    /// Columns m and r agree in every row.
    pub m_r_columns_equal: bool,
    /// Merging m, r into h reproduces the four-tile matrix.
    pub aggregates_to_ms: bool,
}

impl FiveTileReport {
    pub fn passed(&self) -> bool {
        self.kernel_relation
            && self.psi_rank == 4
            && self.determinant.is_zero()
            && self.row_dependency
            && self.m_r_columns_equal
            && self.aggregates_to_ms
    }
}

pub fn five_tile_analysis() -> Result<FiveTileReport> {
    let psi = psi_gt_five();
    let col = |t: &str| psi.column_of(t).expect("five-tile column");
    let (z, r, s) = (col("z"), col("r"), col("s"));
    let kernel_relation = r
        .iter()
        .zip(&s)
        .zip(&z)
        .all(|((r, s), z)| (r + s - z * &Rational::from(2)).is_zero());
    let m5 = five_tile_matrix();
    let row = |i: usize| m5.row(i).to_vec();
    let row_dependency = (0..5).all(|c| row(4)[c] == &row(3)[c] * &Rational::from(2) - &row(2)[c]);
    let m_r_columns_equal = m5.column(1) == m5.column(2);
    // (z, h, s, a) in terms of (a, m, r, z, s).
    let embed = RationalMatrix::from_i64_rows(&[
        [0, 0, 0, 1, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0],
    ]);
    // Counts of (z, h, s, a) read off (a, m, r, z, s), with h counted by m.
    let collapse = RationalMatrix::from_i64_rows(&[
        [0, 0, 0, 1],
        [0, 1, 0, 0],
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
    ]);
    let aggregated = embed.mul(&m5)?.mul(&collapse)?;
    Ok(FiveTileReport {
        kernel_relation,
        psi_rank: psi.rank(),
        determinant: m5.determinant()?,
        row_dependency,
        m_r_columns_equal,
        aggregates_to_ms: aggregated == m_ms(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2fReport {
    pub spot_entries: bool,
    pub eigenvector: bool,
    pub intertwiner: bool,
    pub uncolored_rows: bool,
}

/// 12·volumes of the colored tetrahedra.
pub fn colored_volumes12() -> Vec<GoldenNumber> {
    COLOR_BASE.iter().map(|n| n.reference_volume12()).collect()
}

/// Merges colored columns: (8 colored) → (6 uncolored).
fn uncolor() -> RationalMatrix {
    let mut m = RationalMatrix::zeros(8, 6);
    for (i, n) in COLOR_BASE.iter().enumerate() {
        m.set(i, n.index(), Rational::one());
    }
    m
}

/// Checks the colored inflation matrix: spot entries, the τ³ volume
/// eigenvector, the intertwiner with ψ_2F and the B*, D*, F* rows against
/// `m_gt`.
pub fn t2f_checks(m2f: &GoldenMatrix, m_gt: &RationalMatrix) -> Result<T2fReport> {
    if m2f.rows() != 8 || m2f.cols() != 8 {
        return Err(Error::DimensionMismatch(format!("{}x{} colored matrix", m2f.rows(), m2f.cols())));
    }
    let spots = [((1, 1), (-16, 11)), ((4, 6), (14, -8)), ((8, 6), (13, -8))];
    for ((r, c), (a, b)) in spots {
        let want = GoldenNumber::int(a, b);
        let got = m2f.get(r - 1, c - 1);
        if *got != want {
            return Err(Error::MatrixMismatch {
                row: r,
                col: c,
                expected: want.to_string(),
                found: got.to_string(),
            });
        }
    }
    let v8 = colored_volumes12();
    let lhs = m2f.mul_vec(&v8)?;
    let tau3 = GoldenNumber::tau_pow(3);
    for (i, (l, v)) in lhs.iter().zip(&v8).enumerate() {
        let want = v * &tau3;
        if *l != want {
            return Err(Error::MatrixMismatch {
                row: i + 1,
                col: 1,
                expected: want.to_string(),
                found: l.to_string(),
            });
        }
    }
    let psi = psi_2f();
    let pt = psi.matrix.transpose().to_golden();
    let left = pt.mul(m2f)?;
    let right = m_ms().to_golden().mul(&pt)?;
    if let Some(e) = first_mismatch(&right, &left) {
        return Err(e);
    }
    let merged = m2f.mul(&uncolor().to_golden())?;
    for name in [GoldenName::B, GoldenName::D, GoldenName::F] {
        let i = COLOR_BASE.iter().position(|&n| n == name).expect("uncolored tile");
        for c in 0..6 {
            let want = GoldenNumber::rational(m_gt.get(name.index(), c).clone());
            if *merged.get(i, c) != want {
                return Err(Error::MatrixMismatch {
                    row: i + 1,
                    col: c + 1,
                    expected: want.to_string(),
                    found: merged.get(i, c).to_string(),
                });
            }
        }
    }
    Ok(T2fReport {
        spot_entries: true,
        eigenvector: true,
        intertwiner: true,
        uncolored_rows: true,
    })
}

/// The packing maps and matrices as one JSON document.
pub fn constants_json() -> serde_json::Value {
    serde_json::json!({
        "tile_orders": {
            "ms": MS_TILES,
            "five_tile": FIVE_TILES,
            "colored_tetrahedra": COLORED_TETRAHEDRA,
        },
        "psi_gt": psi_gt(),
        "psi_gt_five": psi_gt_five(),
        "psi_2f": psi_2f(),
        "psi_2f_five": psi_2f_five(),
        "m_ms": m_ms(),
        "five_tile_matrix": five_tile_matrix(),
        "m_2f": m_2f(),
    })
}
