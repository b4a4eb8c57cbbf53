//! Exact scalars: rationals and simple algebraic extensions of ℚ.

mod extension;
pub mod field;
pub mod univariate;

pub use extension::{ExtElement, FieldDescriptor};
pub use field::{int, rat, rational_to_f64, Field};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = num_rational::BigRational;
