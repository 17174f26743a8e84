//! Exact linear algebra over a [`Field`](crate::field::Field): dense
//! matrices, canonical subspaces and univariate polynomials.

mod matrix;
mod poly;
mod subspace;

pub use matrix::{kernel, Matrix};
pub use poly::{evaluate_polynomial_at, factor_squarefree_or_irreducible, minimal_polynomial, Factor, Polynomial};
pub use subspace::{is_direct_sum, sum_all, Subspace};

pub(crate) use subspace::unit;
