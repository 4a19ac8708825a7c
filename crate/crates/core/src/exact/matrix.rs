use std::ops::{Deref, Index};

use num_traits::{One, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A fixed-length vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        QVector(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        QVector(entries.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn parse(entries: &[impl AsRef<str>]) -> Result<Self> {
        entries.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>().map(QVector)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn scaled(&self, c: &Rational) -> QVector {
        QVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(super::rational_to_f64).collect()
    }
}

impl Deref for QVector {
    type Target = [Rational];

    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl FromIterator<Rational> for QVector {
    fn from_iter<T: IntoIterator<Item = Rational>>(iter: T) -> Self {
        QVector(iter.into_iter().collect())
    }
}

/// Dense rational matrix. The column count is stored explicitly so that
/// `0 × n` matrices keep their width.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    cols: usize,
    rows: Vec<QVector>,
}

impl QMatrix {
    pub fn new(cols: usize, rows: Vec<QVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Malformed(format!(
                "matrix is not rectangular: row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(QMatrix { cols, rows })
    }

    pub fn from_rows(rows: Vec<QVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::new(cols, rows)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<QVector> = rows.iter().map(|r| QVector::from_i64(r)).collect();
        Self::from_rows(rows).expect("rectangular literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { cols, rows: vec![QVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix { cols: n, rows: (0..n).map(|i| QVector::unit(n, i)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &QVector {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> QVector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix { cols: self.nrows(), rows: (0..self.cols).map(|j| self.column(j)).collect() }
    }

    /// Submatrix keeping the given columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> QMatrix {
        QMatrix {
            cols: cols.len(),
            rows: self.rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect(),
        }
    }

    /// `M · v` for a vector of length `ncols`.
    pub fn mul_vec(&self, v: &QVector) -> QVector {
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    /// `vᵀ · M` for a vector of length `nrows`.
    pub fn left_mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(v.len(), self.nrows(), "dimension mismatch");
        let mut out = QVector::zeros(self.cols);
        for (c, r) in v.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.0.iter_mut().zip(r.iter()) {
                *o += c * x;
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(QVector::to_strings).collect()
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.rows[i][j]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form by Gauss–Jordan elimination.
pub fn rref(m: &QMatrix) -> Rref {
    let mut rows: Vec<Vec<Rational>> = m.rows.iter().map(|r| r.0.clone()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    let matrix = QMatrix { cols: m.cols, rows: rows.into_iter().map(QVector).collect() };
    Rref { matrix, pivots, rank }
}

/// Rows form a basis of `{v : M·v = 0}`; one basis vector per free column,
/// with a one in that column.
pub fn kernel_basis(m: &QMatrix) -> QMatrix {
    let Rref { matrix, pivots, .. } = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let rows = free
        .iter()
        .map(|&f| {
            let mut v = QVector::zeros(m.cols);
            v.0[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v.0[p] = -matrix.rows[i][f].clone();
            }
            v
        })
        .collect();
    QMatrix { cols: m.cols, rows }
}
