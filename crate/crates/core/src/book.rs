//! Compiles the guide's code snippets as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
mod polynomials {}
#[doc = include_str!("../../../book/src/exact-rank.md")]
mod exact_rank {}
#[doc = include_str!("../../../book/src/syzygies.md")]
mod syzygies {}
#[doc = include_str!("../../../book/src/combinatorics.md")]
mod combinatorics {}
#[doc = include_str!("../../../book/src/singular-points.md")]
mod singular_points {}
#[doc = include_str!("../../../book/src/command-line.md")]
mod command_line {}
#[doc = include_str!("../../../docs/schema.md")]
mod schema {}
#[doc = include_str!("../../../README.md")]
mod readme {}
