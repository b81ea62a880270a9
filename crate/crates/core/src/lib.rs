//! Arithmetically Gorenstein sets of points through inverse systems.
//!
//! A finite set of distinct points `X ⊂ P^n` is described by the dual linear
//! forms `L_i = Σ a_{j,i} y_j` of its points. Whether `X` is arithmetically
//! Gorenstein can be read off from a single relation among the powers
//! `L_i^{s−1}` and the apolar algebra of one form built from it; see
//! [`gorenstein::is_arithmetically_gorenstein`].
//!
//! All arithmetic is over `Q`. Every decision reduces to ranks and kernels of
//! matrices whose entries are rational in the point coordinates, and rank does
//! not change under field extension, so for rational points the verdicts over
//! `Q` agree with those over its algebraic closure.
//!
//! * [`exactalg`]: rationals, polynomials, contraction, exact linear algebra.
//! * [`pointset`]: points, power matrices, Hilbert functions.
//! * [`gorenstein`]: the decision procedure, the Hilbert-function oracle and
//!   inverse-system generators.
//! * [`locus`]: equations of the locus of configurations with a relation in
//!   degree `s − 1`, and a seeded search for Gorenstein completions.
//! * [`lifting`]: Artinian reductions, Waring counts and the nonliftability
//!   bound.

pub mod error;
pub mod exactalg;
pub mod gorenstein;
pub mod lifting;
pub mod locus;
pub mod pointset;

pub use error::{Error, Result};
