//! Resultants and subresultants of polynomials in `y` over `Q[x]`.

use num_rational::BigRational;

use super::monomial::Var;
use super::poly::Polynomial;
use super::univariate::UniPolynomial;

/// A polynomial in `y` whose coefficients are univariate polynomials in `x`,
/// lowest `y`-degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YPolynomial {
    coeffs: Vec<UniPolynomial>,
}

impl YPolynomial {
    pub fn new(mut coeffs: Vec<UniPolynomial>) -> Self {
        while coeffs.last().is_some_and(UniPolynomial::is_zero) {
            coeffs.pop();
        }
        YPolynomial { coeffs }
    }

    /// Dehomogenizes a form at `z = 1` and regroups it by powers of `y`.
    pub fn from_affine_chart(f: &Polynomial) -> Self {
        let dy = f.degree_in(Var::Y).unwrap_or(0) as usize;
        let dx = f.degree().unwrap_or(0) as usize;
        let mut table = vec![vec![BigRational::from_integer(0.into()); dx + 1]; dy + 1];
        for (m, c) in f.terms() {
            table[m.exponent(Var::Y) as usize][m.exponent(Var::X) as usize] += c;
        }
        Self::new(table.into_iter().map(UniPolynomial::new).collect())
    }

    pub fn coeffs(&self) -> &[UniPolynomial] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> UniPolynomial {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Specializes `x = x0`, giving a polynomial in `y`.
    pub fn eval_x(&self, x0: &BigRational) -> UniPolynomial {
        UniPolynomial::new(self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }
}

/// Determinant over `Q[x]` by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<UniPolynomial>>) -> UniPolynomial {
    let n = m.len();
    if n == 0 {
        return UniPolynomial::one();
    }
    let mut sign_negative = false;
    let mut prev = UniPolynomial::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return UniPolynomial::zero();
        };
        if p != k {
            m.swap(p, k);
            sign_negative = !sign_negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = UniPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_negative {
        -&det
    } else {
        det
    }
}

/// Rows `y^(count-1) * f, ..., y * f, f`, written against the columns
/// `y^(width-1), ..., y^0`.
fn shifted_rows(f: &YPolynomial, count: usize, width: usize) -> Vec<Vec<UniPolynomial>> {
    let deg = f.degree().unwrap_or(0);
    (0..count)
        .map(|r| {
            let shift = count - 1 - r;
            (0..width)
                .map(|c| {
                    let power = width - 1 - c;
                    if power >= shift && power - shift <= deg {
                        f.coeff(power - shift)
                    } else {
                        UniPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`): `n` shifted
/// copies of `f` on top, then `m` copies of `g`; columns from `y^(m+n-1)`
/// down to `y^0`.
pub fn sylvester_matrix(f: &YPolynomial, g: &YPolynomial) -> Vec<Vec<UniPolynomial>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let mut rows = shifted_rows(f, n, m + n);
    rows.extend(shifted_rows(g, m, m + n));
    rows
}

/// `Res_y(f, g)`, the determinant of [`sylvester_matrix`].
///
/// When one argument is constant in `y` the usual conventions apply:
/// `Res(c, g) = c^deg g`.
pub fn resultant(f: &YPolynomial, g: &YPolynomial) -> UniPolynomial {
    match (f.degree(), g.degree()) {
        (None, _) | (_, None) => UniPolynomial::zero(),
        (Some(0), Some(n)) => pow(&f.coeff(0), n),
        (Some(m), Some(0)) => pow(&g.coeff(0), m),
        _ => determinant(sylvester_matrix(f, g)),
    }
}

fn pow(p: &UniPolynomial, e: usize) -> UniPolynomial {
    (0..e).fold(UniPolynomial::one(), |acc, _| &acc * p)
}

/// The `j`-th subresultant `S_j(y) = sum_{i <= j} s_{j,i}(x) y^i`, for
/// `j < min(deg f, deg g)`.
///
/// `S_0` is the resultant. The principal coefficient `s_{j,j}` vanishes at
/// `x0` exactly when (leading coefficients permitting) the gcd of `f(x0, y)`
/// and `g(x0, y)` has degree greater than `j`.
pub fn subresultant(f: &YPolynomial, g: &YPolynomial, j: usize) -> YPolynomial {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    assert!(j < m.min(n), "subresultant index out of range");
    let width = m + n - j;
    let mut rows = shifted_rows(f, n - j, width);
    rows.extend(shifted_rows(g, m - j, width));
    let size = m + n - 2 * j;
    // leading size-1 columns are y^(width-1) .. y^(j+1); the last column is y^i
    let coeffs = (0..=j)
        .map(|i| {
            let col = width - 1 - i;
            let minor: Vec<Vec<UniPolynomial>> = rows
                .iter()
                .map(|row| {
                    let mut r: Vec<UniPolynomial> = row[..size - 1].to_vec();
                    r.push(row[col].clone());
                    r
                })
                .collect();
            determinant(minor)
        })
        .collect();
    YPolynomial::new(coeffs)
}
