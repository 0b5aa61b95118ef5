//! Jacobian syzygies, total Tjurina numbers and the freeness test.
//!
//! For a reduced plane curve `C : f = 0` of degree `d` everything here comes
//! from one family of linear maps,
//!
//! ```text
//! (S_r)^3 -> S_{r+d-1},   (a, b, c) |-> a f_x + b f_y + c f_z,
//! ```
//!
//! whose kernels are the graded pieces `AR(f)_r` of the syzygy module and
//! whose cokernels, for large degrees, have dimension `tau(C)`. With
//! `d1 = mdr(f)`, the curve is free exactly when
//! `(d-1)^2 - d1 (d - 1 - d1) = tau(C)`, and its exponents are then
//! `(d1, d - 1 - d1)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{self, RationalMatrix};
use crate::polyring::{basis_index, monomial_basis, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyzygyError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("curve degree {0} is too small for this operation")]
    DegreeTooSmall(u32),
    #[error("Hilbert function of the Jacobian algebra did not stabilize: {values:?} at degrees {degrees:?}")]
    NonStabilized { degrees: [u32; 3], values: [usize; 3] },
    #[error("product of the components is not a scalar multiple of the curve equation")]
    ProductMismatch,
}

/// Numerical invariants of a reduced plane curve and the freeness verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub degree: u32,
    pub mdr: u32,
    pub tau: u64,
    pub is_free: bool,
    /// `(mdr, d - 1 - mdr)`, present only for free curves.
    pub exponents: Option<(u32, u32)>,
}

fn form_degree(f: &Polynomial) -> Result<u32, SyzygyError> {
    f.homogeneous_degree().ok_or(SyzygyError::NotHomogeneous)
}

/// `(f_x, f_y, f_z)`.
pub fn jacobian_generators(f: &Polynomial) -> Result<[Polynomial; 3], SyzygyError> {
    let d = form_degree(f)?;
    if d == 0 {
        return Err(SyzygyError::DegreeTooSmall(0));
    }
    Ok(Var::ALL.map(|v| f.partial(v)))
}

/// Matrix of `(S_r)^3 -> S_{r+d-1}`: rows are indexed by the target
/// monomial basis, columns by `(generator, source monomial)` with the
/// generator index varying slowest.
pub fn jacobian_matrix(gens: &[Polynomial; 3], d: u32, r: u32) -> RationalMatrix {
    let source = monomial_basis(r);
    let target_deg = r + d - 1;
    let n_target = monomial_basis(target_deg).len();
    let mut m = RationalMatrix::zeros(n_target, 3 * source.len());
    for (g, gen) in gens.iter().enumerate() {
        for (s, mono) in source.iter().enumerate() {
            let col = g * source.len() + s;
            for (gm, c) in gen.terms() {
                m.set(basis_index(&gm.mul(mono)), col, c.clone());
            }
        }
    }
    m
}

/// `dim AR(f)_r`, counting every syzygy including the Koszul ones.
pub fn ar_dim(f: &Polynomial, r: u32) -> Result<usize, SyzygyError> {
    let gens = jacobian_generators(f)?;
    let d = form_degree(f)?;
    Ok(exactla::kernel_dim(&jacobian_matrix(&gens, d, r)))
}

/// An explicit basis of `AR(f)_r`, each element a triple `(a, b, c)`.
pub fn syzygy_basis(f: &Polynomial, r: u32) -> Result<Vec<[Polynomial; 3]>, SyzygyError> {
    let gens = jacobian_generators(f)?;
    let d = form_degree(f)?;
    let source = monomial_basis(r);
    let n = source.len();
    let kernel = exactla::kernel_basis(&jacobian_matrix(&gens, d, r));
    Ok(kernel
        .into_iter()
        .map(|v| {
            std::array::from_fn(|g| {
                Polynomial::from_terms((0..n).map(|s| (v[g * n + s].clone(), source[s])))
            })
        })
        .collect())
}

/// Minimal degree of a nonzero Jacobian syzygy.
pub fn mdr(f: &Polynomial) -> Result<u32, SyzygyError> {
    let d = form_degree(f)?;
    let gens = jacobian_generators(f)?;
    // the Koszul relations live in degree d - 1
    for r in 0..d {
        if exactla::kernel_dim(&jacobian_matrix(&gens, d, r)) > 0 {
            return Ok(r);
        }
    }
    Ok(d - 1)
}

/// `dim (S/J_f)_k`.
pub fn hilbert_dim(f: &Polynomial, k: u32) -> Result<usize, SyzygyError> {
    let d = form_degree(f)?;
    let gens = jacobian_generators(f)?;
    Ok(hilbert_dim_with(&gens, d, k))
}

fn hilbert_dim_with(gens: &[Polynomial; 3], d: u32, k: u32) -> usize {
    let total = monomial_basis(k).len();
    if k + 1 < d {
        return total;
    }
    let m = jacobian_matrix(gens, d, k + 1 - d);
    total - exactla::rank(&m.transpose())
}

/// The three degrees at which [`total_tjurina`] samples the Hilbert function.
pub fn stabilization_window(d: u32) -> [u32; 3] {
    let start = (3 * d).saturating_sub(5);
    [start, start + 1, start + 2]
}

/// Total Tjurina number `tau(C) = deg J_f`, read off as the stable value of
/// the Hilbert function of `S/J_f`.
///
/// Samples three consecutive degrees starting at `3d - 5` (the first degree
/// past the socle of a smooth curve's Jacobian algebra) and insists they
/// agree. A non-reduced `f` has a one-dimensional Jacobian scheme, so its
/// Hilbert function keeps growing and is reported as
/// [`SyzygyError::NonStabilized`].
pub fn total_tjurina(f: &Polynomial) -> Result<u64, SyzygyError> {
    let d = form_degree(f)?;
    if d == 0 {
        return Err(SyzygyError::DegreeTooSmall(0));
    }
    if d == 1 {
        return Ok(0);
    }
    let gens = jacobian_generators(f)?;
    let degrees = stabilization_window(d);
    let values: Vec<usize> = degrees
        .par_iter()
        .map(|&k| hilbert_dim_with(&gens, d, k))
        .collect();
    let values = [values[0], values[1], values[2]];
    if values[0] != values[1] || values[1] != values[2] {
        return Err(SyzygyError::NonStabilized { degrees, values });
    }
    Ok(values[0] as u64)
}

/// du Plessis–Wall value `(d-1)^2 - d1 (d - 1 - d1)`.
pub fn free_tau(d: u32, d1: u32) -> i64 {
    let (d, d1) = (d as i64, d1 as i64);
    (d - 1) * (d - 1) - d1 * (d - 1 - d1)
}

/// Computes `mdr`, `tau` and decides freeness.
pub fn is_free(f: &Polynomial) -> Result<CurveInvariants, SyzygyError> {
    let d = form_degree(f)?;
    if d < 2 {
        return Err(SyzygyError::DegreeTooSmall(d));
    }
    let d1 = mdr(f)?;
    let tau = total_tjurina(f)?;
    let free = free_tau(d, d1) == tau as i64 && 2 * d1 < d;
    Ok(CurveInvariants {
        degree: d,
        mdr: d1,
        tau,
        is_free: free,
        exponents: free.then(|| (d1, d - 1 - d1)),
    })
}

/// Product of the components, with a check that it matches `f` up to a
/// nonzero scalar.
fn check_product(f: &Polynomial, components: &[Polynomial]) -> Result<(), SyzygyError> {
    let product = components.iter().fold(Polynomial::one(), |acc, c| &acc * c);
    if product.is_zero() || !product.is_proportional_to(f) {
        return Err(SyzygyError::ProductMismatch);
    }
    Ok(())
}

/// True iff no two components are proportional and every component is
/// squarefree. A component with a repeated factor has a positive-dimensional
/// singular locus, which shows up as a non-stabilizing Hilbert function.
pub fn reducedness_check(f: &Polynomial, components: &[Polynomial]) -> Result<bool, SyzygyError> {
    check_product(f, components)?;
    for (i, a) in components.iter().enumerate() {
        if components[i + 1..].iter().any(|b| a.is_proportional_to(b)) {
            return Ok(false);
        }
    }
    for c in components {
        match total_tjurina(c) {
            Ok(_) => {}
            Err(SyzygyError::NonStabilized { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// A component is smooth iff its total Tjurina number vanishes.
pub fn smoothness_check(component: &Polynomial) -> Result<bool, SyzygyError> {
    let d = form_degree(component)?;
    if d == 0 {
        return Err(SyzygyError::DegreeTooSmall(0));
    }
    if d == 1 {
        return Ok(true);
    }
    Ok(total_tjurina(component)? == 0)
}

/// Checks `a f_x + b f_y + c f_z = 0`.
pub fn is_syzygy(f: &Polynomial, triple: &[Polynomial; 3]) -> bool {
    let gens = Var::ALL.map(|v| f.partial(v));
    let s = triple
        .iter()
        .zip(&gens)
        .fold(Polynomial::zero(), |acc, (a, g)| &acc + &(a * g));
    s.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(jacobian_generators(&p("x*y*z")).unwrap(), [p("y*z"), p("x*z"), p("x*y")]);
        assert_eq!(jacobian_generators(&p("x*y")).unwrap(), [p("y"), p("x"), Polynomial::zero()]);
        assert_eq!(
            jacobian_generators(&p("x^3+y^3+z^3")).unwrap(),
            [p("3*x^2"), p("3*y^2"), p("3*z^2")]
        );
        assert_eq!(jacobian_generators(&p("x^2 + y")), Err(SyzygyError::NotHomogeneous));
    }

    #[test]
    fn ar_dims() {
        assert_eq!(ar_dim(&p("x*y"), 0).unwrap(), 1);
        let conic = p("x^2+y^2+z^2");
        assert_eq!(ar_dim(&conic, 0).unwrap(), 0);
        assert_eq!(ar_dim(&conic, 1).unwrap(), 3);
        assert_eq!(mdr(&conic).unwrap(), 1);
        assert_eq!(mdr(&p("x*y")).unwrap(), 0);
    }

    #[test]
    fn syzygy_basis_elements_are_syzygies() {
        let f = p("x*y*(x+y)*(x-z)");
        let r = mdr(&f).unwrap();
        let basis = syzygy_basis(&f, r).unwrap();
        assert_eq!(basis.len(), ar_dim(&f, r).unwrap());
        assert!(basis.iter().all(|t| is_syzygy(&f, t)));
    }

    #[test]
    fn hilbert_values() {
        assert_eq!(hilbert_dim(&p("x*y"), 5).unwrap(), 1);
        assert_eq!(hilbert_dim(&p("x^2+y^2+z^2"), 4).unwrap(), 0);
    }

    #[test]
    fn small_tjurina_numbers() {
        assert_eq!(total_tjurina(&p("x*y")).unwrap(), 1);
        assert_eq!(total_tjurina(&p("x*y*z")).unwrap(), 3);
        assert_eq!(total_tjurina(&p("x*y*(x+y)")).unwrap(), 4);
        assert_eq!(total_tjurina(&p("x^2+y^2+z^2")).unwrap(), 0);
        assert_eq!(total_tjurina(&p("x+y+z")).unwrap(), 0);
    }

    #[test]
    fn non_reduced_input_does_not_stabilize() {
        assert!(matches!(total_tjurina(&p("x^2*y")), Err(SyzygyError::NonStabilized { .. })));
    }

    #[test]
    fn two_lines_are_free() {
        let inv = is_free(&p("x*y")).unwrap();
        assert_eq!(inv, CurveInvariants { degree: 2, mdr: 0, tau: 1, is_free: true, exponents: Some((0, 1)) });
        assert_eq!(is_free(&p("x")), Err(SyzygyError::DegreeTooSmall(1)));
    }

    #[test]
    fn reducedness_and_smoothness() {
        assert!(reducedness_check(&p("x*y"), &[p("x"), p("y")]).unwrap());
        assert!(!reducedness_check(&p("2*x^2"), &[p("x"), p("2*x")]).unwrap());
        let (a, b) = (p("x*y - z^2"), p("x*y + z^2"));
        assert!(reducedness_check(&(&a * &b), &[a, b]).unwrap());
        assert_eq!(reducedness_check(&p("x*y"), &[p("x"), p("z")]), Err(SyzygyError::ProductMismatch));
        assert!(smoothness_check(&p("x+y+z")).unwrap());
        assert!(smoothness_check(&p("x^2+y^2+z^2")).unwrap());
        assert!(!smoothness_check(&p("x*y")).unwrap());
    }
}
