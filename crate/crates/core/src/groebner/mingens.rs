use std::sync::Arc;

use super::{buchberger_seeded, ideal_times_basis, GroebnerBasis};
use crate::arith::{FreeVector, GradedFreeModule, PolyRing, Polynomial};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct MinimalGenerators {
    /// Indices into the input list of a minimal generating subset.
    pub indices: Vec<usize>,
    /// The same generators after reduction by everything of lower degree and
    /// by the ideal: they generate the same submodule modulo the ideal.
    pub reduced: Vec<FreeVector>,
    /// Gröbner basis of the submodule plus `ideal * module`.
    pub basis: GroebnerBasis,
    pub truncated: bool,
}

/// Minimal homogeneous generators of the submodule of `module / ideal*module`
/// generated by `gens`, chosen degree by degree: a generator is kept exactly
/// when it is not in the span of lower-degree generators, the ideal part and
/// previously kept generators of its own degree.
pub fn minimal_generators(
    ring: &Arc<PolyRing>,
    module: &GradedFreeModule,
    gens: &[FreeVector],
    ideal_gb: &[Polynomial],
    degree_cap: i64,
) -> Result<MinimalGenerators> {
    let seeds = ideal_times_basis(ring, module, ideal_gb, 0..module.rank());
    let run = buchberger_seeded(ring, module, &seeds, gens, degree_cap)?;
    Ok(MinimalGenerators {
        indices: run.minimal_indices,
        reduced: run.minimal_reduced,
        truncated: run.basis.is_truncated(),
        basis: run.basis,
    })
}
