//! Dense square matrices over [`Rational`].

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
}

/// A `g × g` matrix. Indices are 0-based in code; documentation and reports
/// use 1-based indices to match curve numbering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(size: usize) -> Self {
        RatMatrix {
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(LinalgError::Ragged {
                    row,
                    found: r.len(),
                    expected: size,
                });
            }
            entries.extend(r);
        }
        Ok(RatMatrix { size, entries })
    }

    /// Convenience for tests and fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.size).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size)
    }

    /// Exact determinant by Gaussian elimination, pivoting on the first
    /// nonzero entry of each column.
    pub fn det(&self) -> Rational {
        let n = self.size;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det = &det * &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        let n = self.size;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(LinalgError::SingularMatrix)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].recip().expect("nonzero pivot");
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] * &p;
                inv[(col, c)] = &inv[(col, c)] * &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let da = &factor * &a[(col, c)];
                    a[(r, c)] -= da;
                    let di = &factor * &inv[(col, c)];
                    inv[(r, c)] -= di;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.size {
            self.entries.swap(a * self.size + c, b * self.size + c);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.size + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.size + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.size, rhs.size, "size mismatch");
        let n = self.size;
        let mut out = RatMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|r| r.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
