//! Right-hand sides of the rate and regularity inequalities for Veronese
//! subrings, and a checker comparing them with windowed invariants.

mod check;
mod corpus;
mod formulas;
mod report;

pub use check::{Checker, LabeledModule};
pub use corpus::{
    corpus_run, CorpusCase, CorpusOutcome, Summary, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VIOLATION,
};
pub use formulas::{
    aramova_rhs, backelin_rhs, complex_degree_bound, mainthm_rhs, surjection_rate_rhs, versyz_rhs,
    Composition,
};
pub use report::{decide, slack, BoundReport, Inequality, Params, ReportCutoffs, Side, Verdict};
