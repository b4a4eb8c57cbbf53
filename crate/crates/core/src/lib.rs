pub mod arith;
pub mod corpus;
pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod reproduce;
pub mod solve;
pub mod tensor;

pub use error::{Error, Result};
