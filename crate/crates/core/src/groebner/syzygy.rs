use std::sync::Arc;

use super::{buchberger_seeded, ideal_times_basis, GroebnerBasis, Submodule};
use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx, PolyRing, Polynomial, Term};
use crate::error::{Error, Result};

/// Syzygies of a list of vectors, as lifts to the polynomial ring.
#[derive(Clone, Debug)]
pub struct Syzygies {
    /// One basis element per input vector, shifted by its internal degree.
    pub module: GradedFreeModule,
    /// A Gröbner basis (up to the cap) of the syzygy module.
    pub generators: Vec<FreeVector>,
    pub truncated: bool,
}

/// Syzygies of `vectors` in `module`, modulo the ideal whose Gröbner basis is
/// `ideal_gb` (empty for the polynomial ring itself).
///
/// Works in `module ⊕ S^k` where the original block dominates: the Gröbner
/// basis of `{(v_i, e_i)} ∪ I·(module ⊕ S^k)` restricted to elements whose
/// leading term lies in the tag block is a Gröbner basis of the lifted syzygy
/// module (which contains `I·S^k`).
pub fn syzygies(
    ring: &Arc<PolyRing>,
    module: &GradedFreeModule,
    vectors: &[FreeVector],
    degrees: &[i64],
    ideal_gb: &[Polynomial],
    degree_cap: i64,
) -> Result<Syzygies> {
    if vectors.len() != degrees.len() {
        return Err(Error::usage("one degree per vector required"));
    }
    let ctx = ModuleCtx::new(ring, module);
    for (v, d) in vectors.iter().zip(degrees) {
        if !v.is_zero() && ctx.homogeneous_degree(v) != Some(*d) {
            return Err(Error::usage(format!(
                "vector {} is not homogeneous of degree {d}",
                ctx.fmt(v)
            )));
        }
    }
    let r = module.rank();
    let k = vectors.len();
    let mut shifts = module.shifts().to_vec();
    shifts.extend_from_slice(degrees);
    let combined = GradedFreeModule::with_dominant_block(shifts, r);
    let cctx = ModuleCtx::new(ring, &combined);
    let one = crate::arith::Monomial::one(ring.nvars());
    let inputs: Vec<FreeVector> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut terms = v.terms().to_vec();
            terms.push(Term {
                mon: one.clone(),
                pos: (r + i) as u32,
                coeff: 1,
            });
            cctx.from_terms(terms)
        })
        .collect();
    let seeds = ideal_times_basis(ring, &combined, ideal_gb, 0..r + k);
    let run = buchberger_seeded(ring, &combined, &seeds, &inputs, degree_cap)?;
    let tag = GradedFreeModule::new(degrees.to_vec());
    let tctx = ModuleCtx::new(ring, &tag);
    let mut generators = Vec::new();
    for g in run.basis.generators() {
        if (g.lead().unwrap().pos as usize) < r {
            continue;
        }
        debug_assert!(g.terms().iter().all(|t| t.pos as usize >= r));
        generators.push(tctx.from_terms(g.terms().iter().map(|t| Term {
            mon: t.mon.clone(),
            pos: t.pos - r as u32,
            coeff: t.coeff,
        })));
    }
    Ok(Syzygies {
        module: tag,
        generators,
        truncated: run.basis.is_truncated(),
    })
}

/// Syzygy module of the generators of `gb` over the polynomial ring: one basis
/// element per generator, shifted by the generator's internal degree.
pub fn syzygy_basis(gb: &GroebnerBasis, degree_cap: i64) -> Result<(Submodule, bool)> {
    let ctx = gb.ctx();
    let degrees: Vec<i64> = gb
        .generators()
        .iter()
        .map(|g| ctx.homogeneous_degree(g).expect("homogeneous"))
        .collect();
    let syz = syzygies(
        gb.ring(),
        gb.module(),
        gb.generators(),
        &degrees,
        &[],
        degree_cap,
    )?;
    Ok((
        Submodule {
            module: syz.module,
            generators: syz.generators,
        },
        syz.truncated,
    ))
}
