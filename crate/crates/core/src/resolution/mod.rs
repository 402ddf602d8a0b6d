//! Minimal graded free resolutions over `S/I`, Betti tables and the
//! invariants read from them.

mod betti;
mod extended;
mod module;
mod resolve;
mod ring;

pub use betti::{BettiReport, BettiTable, CutoffReport};
pub use extended::{ceil_div, ceil_ratio, fmt_rational, Extended, RateValue, Rational, TValue};
pub use module::ModulePresentation;
pub use resolve::{
    rat_from_residue_table, rat_of_ring, resolve_minimal, Cutoffs, RatValue, ResolutionSlice,
    DEFAULT_HOMOLOGICAL_CUTOFF,
};
pub use ring::{RingPresentation, IDEAL_BASIS_CAP};

#[cfg(test)]
mod tests;
