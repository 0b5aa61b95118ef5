//! Exact polynomial arithmetic over the rationals.
//!
//! [`Polynomial`] is a sparse trivariate polynomial in `x, y, z`;
//! [`UniPolynomial`] and [`YPolynomial`] support the one- and two-variable
//! work done in affine charts (resultants, root finding, tangent cones).

mod monomial;
mod parse;
mod poly;
mod resultant;
mod univariate;

pub use monomial::{monomial_basis, Monomial, Var};
pub(crate) use monomial::basis_index;
pub use parse::{parse, ParseError};
pub use poly::Polynomial;
pub use resultant::{determinant, resultant, subresultant, sylvester_matrix, YPolynomial};
pub use univariate::{coprime_basis, squarefree_check, UniPolynomial};
