//! Words over ordered alphabets and exact noncommutative polynomials.

pub(crate) mod coeff;
mod poly;
mod presentation;
mod word;

pub use coeff::{Coefficient, Field, DEFAULT_PRIME};
pub use poly::{poly_product, FreeAlgebra, Polynomial};
pub use presentation::Presentation;
pub use word::{compare_deglex, Alphabet, Word};
