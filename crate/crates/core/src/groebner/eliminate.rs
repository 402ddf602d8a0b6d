use std::sync::Arc;

use super::{minimal_generators, GroebnerBasis};
use crate::arith::{GradedFreeModule, ModuleCtx, MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Elimination {
    /// Polynomial ring on the kept variables.
    pub ring: Arc<PolyRing>,
    /// Minimal generators of the elimination ideal.
    pub generators: Vec<Polynomial>,
    /// Gröbner basis of the input ideal in the elimination order.
    pub basis: GroebnerBasis,
    pub truncated: bool,
}

/// Intersection of the ideal generated by `gens` with the subring on `keep`.
///
/// `ring` must carry an elimination order whose eliminated block is exactly
/// the complement of `keep` (placed first). `degree_cap` bounds the weighted
/// degree of S-pairs.
pub fn eliminate(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    keep: &[usize],
    degree_cap: i64,
) -> Result<Elimination> {
    let order = ring.order();
    let k = order.eliminated();
    let expected: Vec<usize> = (k..ring.nvars()).collect();
    if keep != expected.as_slice() {
        return Err(Error::usage(
            "kept variables must be the trailing block of an elimination order",
        ));
    }
    for g in gens {
        if !ring.is_homogeneous(g) {
            return Err(Error::usage(format!(
                "inhomogeneous generator {}",
                ring.fmt(g)
            )));
        }
    }
    let basis = GroebnerBasis::ideal(ring, gens, degree_cap)?;

    let kept_names: Vec<String> = ring.names()[k..].to_vec();
    let kept_weights: Vec<u32> = match order.weights() {
        Some(w) => w[k..].to_vec(),
        None => vec![1; kept_names.len()],
    };
    let uniform = kept_weights.windows(2).all(|w| w[0] == w[1]);
    let scale = if uniform {
        kept_weights.first().copied().unwrap_or(1)
    } else {
        1
    };
    let kept_order = if uniform {
        MonomialOrder::degrevlex()
    } else {
        MonomialOrder::elimination(0, kept_weights)
    };
    let kept = Arc::new(PolyRing::with_order(*ring.field(), kept_names, kept_order));

    let candidates: Vec<Polynomial> = basis
        .polynomials()
        .into_iter()
        .filter(|p| order.elim_degree(p.leading_monomial().unwrap()) == 0)
        .map(|p| {
            kept.from_terms(
                p.into_terms()
                    .into_iter()
                    .map(|(m, c)| (m.drop_prefix(k), c)),
            )
        })
        .collect();
    let module = GradedFreeModule::new(vec![0]);
    let ctx = ModuleCtx::new(&kept, &module);
    let vecs: Vec<_> = candidates
        .iter()
        .map(|p| ctx.from_polys(&[(0, p)]))
        .collect();
    let kept_cap = degree_cap / scale as i64;
    let mg = minimal_generators(&kept, &module, &vecs, &[], kept_cap)?;
    let generators = mg
        .indices
        .iter()
        .map(|&i| kept.make_monic(&candidates[i]))
        .collect();
    Ok(Elimination {
        ring: kept,
        generators,
        truncated: basis.is_truncated(),
        basis,
    })
}
