//! Exact computations with finitely presented quadratic algebras.
//!
//! The crate computes Hilbert series of graded algebras two ways (normal-word
//! counting over a completed rewriting system, and ranks of the shift matrix
//! over a prime field), checks the Anick lower bound on random presentations,
//! and implements the combinatorics of RIT algebras: the map conditions that
//! make the defining relations a quadratic Gröbner basis, the structure of
//! pairs of maps, semigroup representations, colored-graph classification
//! and the commutator form of the Yang–Baxter identity.

pub mod algebra;
pub mod error;
pub mod rank;
pub mod rewriting;
pub mod rit;
pub mod series;
pub mod ybe;

pub use algebra::{Alphabet, Coefficient, Field, FreeAlgebra, Polynomial, Presentation, Word};
pub use error::{Error, Result};
pub use rewriting::{Ambiguity, AmbiguityKind, RewriteRule, RewriteSystem};
pub use series::TruncatedSeries;
