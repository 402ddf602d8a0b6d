//! Veronese subrings `R^(c)` presented as `K[y]/J`, Veronese modules
//! `M^(c,d)` over them, and the regrading of free modules.

mod module;
mod ring;
mod shift;

pub use module::{restrict_module_to_veronese, veronese_module};
pub use ring::{veronese_ring, VeroneseCaps, VeroneseMap};
pub use shift::{restrict_resolution_to_veronese, veronese_shift_transform, ShiftTransform};
