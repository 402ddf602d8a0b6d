//! Textual input: polynomial expressions and the key-value session format.

mod format;
mod parse;

pub use format::{CheckSpec, ModuleSpec, SessionSpec, SpecCutoffs};
pub use parse::parse_polynomial;
