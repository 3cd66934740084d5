use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::golden::GoldenNumber;
use super::rational::Rational;
use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<Rational>;
pub type GoldenMatrix = Matrix<GoldenNumber>;

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(cols: Vec<Vec<T>>) -> Result<Self> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    /// Integer matrix from literal rows.
    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| T::from(Rational::from(x))))
            .collect();
        Matrix::new(rows.len(), C, data).expect("literal matrix shape")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * other.get(k, c);
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s)
    }

    /// k-th power by repeated multiplication; `pow(0)` is the identity.
    pub fn pow(&self, k: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Row echelon form by Gaussian elimination, pivoting on the lowest
    /// row index with a nonzero entry. Returns (echelon, pivot columns,
    /// determinant sign-adjusted product of pivots when square).
    fn echelon(&self) -> (Self, Vec<usize>, T) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = T::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                det = T::zero();
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
                det = -det;
            }
            let piv = m.get(r, c).clone();
            det = det * &piv;
            let inv = piv.inverse().expect("nonzero pivot is invertible");
            for i in (r + 1)..m.rows {
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let f = f * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        if pivots.len() < m.rows.min(m.cols) || m.rows != m.cols {
            det = T::zero();
        }
        (m, pivots, det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().1
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_columns(cols.iter().map(|&c| self.column(c)).collect())
            .expect("selected columns share a length")
    }

    /// Basis of the right null space {x : A·x = 0}, one vector per free
    /// column.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (mut m, pivots, _) = self.echelon();
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = m.get(r, c).inverse().expect("nonzero pivot is invertible");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * &inv;
                m.set(r, j, v);
            }
            for i in 0..r {
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j);
                    m.set(i, j, v);
                }
            }
        }
        (0..m.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = vec![T::zero(); m.cols];
                x[free] = T::one();
                for (r, &c) in pivots.iter().enumerate() {
                    x[c] = -m.get(r, free).clone();
                }
                x
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        Ok(self.echelon().2)
    }

    /// Solves `X · A = B` for X over the field of entries (A square).
    pub fn solve_right(a: &Self, b: &Self) -> Result<Self> {
        if !a.is_square() || b.cols != a.rows {
            return Err(Error::DimensionMismatch(format!(
                "X·A = B with A {}x{} and B {}x{}",
                a.rows, a.cols, b.rows, b.cols
            )));
        }
        // Aᵀ Xᵀ = Bᵀ by Gauss-Jordan on the augmented matrix.
        let n = a.rows;
        let at = a.transpose();
        let bt = b.transpose();
        let mut aug = Matrix::zeros(n, n + bt.cols);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, at.get(r, c).clone());
            }
            for c in 0..bt.cols {
                aug.set(r, n + c, bt.get(r, c).clone());
            }
        }
        let (mut e, pivots, _) = aug.echelon();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::SingularMatrix);
        }
        for r in (0..n).rev() {
            let inv = e.get(r, r).inverse().expect("pivot");
            for c in 0..e.cols {
                let v = e.get(r, c).clone() * &inv;
                e.set(r, c, v);
            }
            for i in 0..r {
                let f = e.get(i, r).clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..e.cols {
                    let v = e.get(i, c).clone() - f.clone() * e.get(r, c);
                    e.set(i, c, v);
                }
            }
        }
        let mut xt = Matrix::zeros(n, bt.cols);
        for r in 0..n {
            for c in 0..bt.cols {
                xt.set(r, c, e.get(r, n + c).clone());
            }
        }
        Ok(xt.transpose())
    }
}

impl RationalMatrix {
    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    pub fn to_golden(&self) -> GoldenMatrix {
        self.map(|r| GoldenNumber::rational(r.clone()))
    }
}

impl GoldenMatrix {
    /// Componentwise τ-split: (τ⁰ part, τ¹ part).
    pub fn tau_parts(&self) -> (RationalMatrix, RationalMatrix) {
        (self.map(|g| g.a.clone()), self.map(|g| g.b.clone()))
    }

    /// The entries as rationals when every τ¹ part vanishes.
    pub fn to_rational(&self) -> Option<RationalMatrix> {
        self.data
            .iter()
            .all(GoldenNumber::is_rational)
            .then(|| self.map(|g| g.a.clone()))
    }
}

/// Fraction-free (Bareiss) solve of `X · A = B` over Q.
///
/// The transposed system Aᵀ·Xᵀ = Bᵀ is cleared to integers row by row,
/// eliminated with Bareiss' exact division (pivot: lowest row index with a
/// nonzero entry), and back-substituted over Q.
pub fn solve_exact(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    if !a.is_square() || b.cols != a.rows {
        return Err(Error::DimensionMismatch(format!(
            "X·A = B with A {}x{} and B {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let n = a.rows;
    let at = a.transpose();
    let bt = b.transpose();
    let width = n + bt.cols;
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let row: Vec<&Rational> = at.row(r).iter().chain(bt.row(r)).collect();
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(k, p);
        for i in (k + 1)..n {
            for j in (k + 1)..width {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut xt = RationalMatrix::zeros(n, bt.cols);
    for c in 0..bt.cols {
        for r in (0..n).rev() {
            let mut acc = Rational::from(m[r][n + c].clone());
            for j in (r + 1)..n {
                acc -= &(Rational::from(m[r][j].clone()) * xt.get(j, c));
            }
            xt.set(r, c, acc / Rational::from(m[r][r].clone()));
        }
    }
    Ok(xt.transpose())
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols))
            .finish()
    }
}

impl<T: Serialize> Serialize for Matrix<T> {
    /// Nested JSON arrays, one per row.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = self.data.chunks(self.cols).collect();
        rows.serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
