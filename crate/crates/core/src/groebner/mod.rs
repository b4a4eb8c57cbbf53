//! Buchberger's algorithm and the ideal operations built on it.

mod buchberger;
mod hilbert;
mod ideal;

pub use buchberger::{groebner_basis, is_groebner_basis, normal_form, reduce_basis};
pub use hilbert::{hilbert_from_leading, hilbert_function, HilbertData};
pub use ideal::Ideal;
