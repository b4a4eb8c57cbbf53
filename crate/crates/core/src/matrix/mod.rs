//! Exact linear algebra (RREF, rank, Bareiss determinants, maximal minors)
//! and a dense complex eigensolver.

mod complex;
mod exact;

pub use complex::{least_squares, ComplexMatrix, EigenResult, Lu, EIGEN_RESIDUAL_TOL};
pub use exact::{binomial, combination_rank, combinations, ExactMatrix};
