//! Minimal graded free resolutions over standard graded algebras `S/I` with
//! `S` a polynomial ring over a prime field; Betti tables, rates and
//! regularity; Veronese subrings and modules; and a checker for the
//! rate/regularity inequalities relating a ring to its Veronese subrings.

pub mod arith;
pub mod bounds;
pub mod error;
pub mod groebner;
pub mod resolution;
pub mod session;
pub mod veronese;

pub use error::{Error, Result};
