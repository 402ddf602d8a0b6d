//! Exact arithmetic over `F_p`: monomials, sparse polynomials and graded free
//! module elements with their orders.

pub mod field;
pub mod free;
pub mod monomial;
pub mod poly;

pub use field::{PrimeField, DEFAULT_CHARACTERISTIC};
pub use free::{FreeVector, GradedFreeModule, ModuleCtx, Term};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use poly::{is_standard_graded_presentation, PolyRing, Polynomial};
