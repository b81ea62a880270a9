//! Exact arithmetic: rationals, sparse polynomials, the apolarity
//! contraction, and dense rational linear algebra.
//!
//! Everything runs over ℚ. The decisions made elsewhere in the crate all
//! reduce to ranks and kernels of matrices whose entries are rational in the
//! point coordinates, and rank does not change under field extension, so for
//! rational input points a verdict over ℚ is the verdict over its algebraic
//! closure.

pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod polymatrix;
pub mod rational;

pub use matrix::{rank_of, AffineSolution, QMatrix};
pub use monomial::{binomial, count_monomials, monomials_of_degree, ExpVec, MonomialBasis};
pub use poly::{contract, power_of_linear, Poly, Ring};
pub use polymatrix::{poly_matrix_minors, MinorList, PolyMatrix};
pub use rational::{
    dot, factorial, format_rational, parse_rational, primitive, proportional, rat, ratio, Rational,
};
