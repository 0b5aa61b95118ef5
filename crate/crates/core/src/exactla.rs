//! Exact rank and kernel computations over the rationals.
//!
//! Each row is scaled to integers, then reduced by fraction-free (Bareiss)
//! elimination: every intermediate entry is a minor of the input, so the
//! divisions by the previous pivot are exact and coefficient growth stays
//! polynomial in the matrix size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
            })
            .collect()
    }
}

/// Row echelon form produced by [`echelon`].
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Fraction-free forward elimination. The pivot for each column is the first
/// remaining row with a nonzero entry there.
fn echelon(m: &RationalMatrix) -> Echelon {
    let mut a = m.integer_rows();
    let (nrows, ncols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let upd = &pivot_row[j];
                if factor.is_zero() || upd.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    row[j] = (&row[j] * pivot) / &prev;
                } else {
                    row[j] = (&row[j] * pivot - &factor * upd) / &prev;
                }
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Rank over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    echelon(m).pivots.len()
}

/// `cols - rank`.
pub fn kernel_dim(m: &RationalMatrix) -> usize {
    m.cols - rank(m)
}

/// A basis of `{v : M v = 0}`, one vector per non-pivot column (that column
/// set to 1, the other free columns to 0).
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
    let ech = echelon(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); m.cols];
        v[free] = BigRational::one();
        for (row, &pc) in ech.rows.iter().zip(&ech.pivots).rev() {
            let mut s = BigRational::zero();
            for j in pc + 1..m.cols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s += &v[j] * BigRational::from_integer(row[j].clone());
                }
            }
            v[pc] = -s / BigRational::from_integer(row[pc].clone());
        }
        basis.push(v);
    }
    basis
}
