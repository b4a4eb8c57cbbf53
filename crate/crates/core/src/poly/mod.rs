//! Sparse multivariate polynomials, monomial orders and the text grammar.

mod context;
mod monomial;
mod parse;
mod polynomial;

pub use context::{VarContext, LAMBDA};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse, parse_rational};
pub use polynomial::Polynomial;
