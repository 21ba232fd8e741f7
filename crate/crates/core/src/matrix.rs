//! Square and symmetric rational matrices.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::poly::Vector;

/// Dense square matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(Matrix { rows })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, s: Rational) -> Self {
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = s.clone();
        }
        Matrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.size() {
            return Err(Error::DimensionMismatch { expected: self.size(), found: v.len() });
        }
        Ok(Vector::new(
            self.rows
                .iter()
                .map(|r| r.iter().zip(v.entries()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::DimensionMismatch { expected: n, found: other.size() });
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(Matrix { rows })
    }

    /// Exact determinant by Gaussian elimination with row pivoting.
    pub fn det(&self) -> Rational {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &p;
                for c in col..n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut inv = Matrix::identity(n).rows;
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(piv, col);
            inv.swap(piv, col);
            let p = a[col][col].recip();
            for c in 0..n {
                a[col][c] *= &p;
                inv[col][c] *= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let da = &f * &a[col][c];
                    a[r][c] -= da;
                    let di = &f * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        Ok(Matrix { rows: inv })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<Rational>]) -> fmt::Result {
    write!(f, "[")?;
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "[")?;
        for (j, x) in r.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

/// A `d x d` symmetric matrix with rational entries.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymMatrixWire", into = "SymMatrixWire")]
pub struct SymMatrix {
    rows: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct SymMatrixWire {
    d: usize,
    rows: Vec<RowWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RowWire(#[serde(with = "crate::rational::serde_str::vec")] Vec<Rational>);

impl TryFrom<SymMatrixWire> for SymMatrix {
    type Error = Error;
    fn try_from(w: SymMatrixWire) -> Result<Self> {
        if w.rows.len() != w.d {
            return Err(Error::DimensionMismatch { expected: w.d, found: w.rows.len() });
        }
        SymMatrix::new(w.rows.into_iter().map(|r| r.0).collect())
    }
}

impl From<SymMatrix> for SymMatrixWire {
    fn from(m: SymMatrix) -> Self {
        SymMatrixWire { d: m.dim(), rows: m.rows.into_iter().map(RowWire).collect() }
    }
}

impl SymMatrix {
    /// Validates squareness and symmetry. Empty (0 x 0) matrices are rejected.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::InvalidArgument("symmetric matrix must be at least 1x1".into()));
        }
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::NotSquare);
        }
        for i in 0..d {
            for j in i + 1..d {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(d: usize) -> Self {
        Self::diag(&vec![Rational::one(); d])
    }

    pub fn zeros(d: usize) -> Self {
        SymMatrix { rows: vec![vec![Rational::zero(); d]; d] }
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let d = entries.len();
        let mut m = Self::zeros(d);
        for (i, e) in entries.iter().enumerate() {
            m.rows[i][i] = e.clone();
        }
        m
    }

    pub fn diag_ints(entries: &[i64]) -> Self {
        Self::diag(&entries.iter().map(|&x| rational::int(x)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Sets entry `(i, j)` and its mirror `(j, i)`.
    pub fn with_entry(&self, i: usize, j: usize, v: Rational) -> Self {
        let mut m = self.clone();
        m.rows[i][j] = v.clone();
        m.rows[j][i] = v;
        m
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        SymMatrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x * s).collect()).collect() }
    }

    pub fn add(&self, other: &SymMatrix) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(SymMatrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix { rows: self.rows.clone() }
    }

    pub fn det(&self) -> Rational {
        self.to_matrix().det()
    }

    /// The `k` leading principal minors `det M[..i, ..i]` for `i = 1..=d`,
    /// each computed as an independent determinant.
    pub fn leading_principal_minors(&self) -> Vec<Rational> {
        (1..=self.dim())
            .map(|k| {
                let block = self.rows[..k].iter().map(|r| r[..k].to_vec()).collect();
                Matrix { rows: block }.det()
            })
            .collect()
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}
