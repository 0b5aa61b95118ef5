//! Freeness of plane curve arrangements, decided two ways.
//!
//! The algebraic route ([`syzygy`]) computes the minimal degree of a Jacobian
//! syzygy and the total Tjurina number of a reduced plane curve by exact
//! linear algebra, and applies the du Plessis–Wall criterion. The
//! combinatorial route ([`combin`]) builds Poincaré-type quadratics from the
//! weak combinatorics of an arrangement and tests whether they split over
//! the rationals. [`singlocus`] connects the two: it finds and classifies the
//! singular points of an arrangement from its component equations.

pub mod combin;
pub mod exactla;
pub mod polyring;
pub mod singlocus;
pub mod syzygy;

#[cfg(doctest)]
mod book;
