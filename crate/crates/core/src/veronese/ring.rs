use std::sync::Arc;

use crate::arith::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::eliminate;
use crate::resolution::RingPresentation;

/// Degree caps for Veronese constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VeroneseCaps {
    /// Cap on the `y`-degree of the elimination (the `x`-degree cap is `c`
    /// times this).
    pub elimination: i64,
    /// Degrees `i` for which Hilbert functions are compared.
    pub verify_through: i64,
}

impl Default for VeroneseCaps {
    fn default() -> Self {
        VeroneseCaps {
            elimination: 24,
            verify_through: 8,
        }
    }
}

/// `R^(c) = K[y]/J` with `y_k ↦` the `k`-th standard monomial of `R_c`.
#[derive(Clone, Debug)]
pub struct VeroneseMap {
    source: Arc<RingPresentation>,
    level: i64,
    target: Arc<RingPresentation>,
    representatives: Vec<Monomial>,
    mixed: Arc<PolyRing>,
    mixed_basis: Vec<Polynomial>,
    truncated: bool,
    verified_through: i64,
}

fn y_prefix(source: &[String]) -> &'static str {
    ["y", "z", "w", "u", "v", "t"]
        .into_iter()
        .find(|p| {
            !source.iter().any(|n| {
                n.strip_prefix(p).is_some_and(|rest| {
                    !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())
                })
            })
        })
        .unwrap_or("y_")
}

/// Presents the `c`-th Veronese subring of `source` by elimination and checks
/// its Hilbert function against `source` through `caps.verify_through`.
pub fn veronese_ring(
    source: &Arc<RingPresentation>,
    c: i64,
    caps: VeroneseCaps,
) -> Result<VeroneseMap> {
    if c < 1 {
        return Err(Error::usage("Veronese level must be at least 1"));
    }
    let n = source.nvars();
    let representatives = source.k_basis(c);
    let m = representatives.len();
    let prefix = y_prefix(source.ring().names());
    let mut names = source.ring().names().to_vec();
    let y_names: Vec<String> = (0..m).map(|k| format!("{prefix}{k}")).collect();
    names.extend(y_names.iter().cloned());
    let mut weights = vec![1u32; n];
    weights.extend(std::iter::repeat_n(c as u32, m));
    let mixed = Arc::new(PolyRing::with_order(
        *source.ring().field(),
        names,
        MonomialOrder::elimination(n, weights),
    ));

    let lift = |f: &Polynomial| {
        mixed.from_terms(
            f.terms()
                .iter()
                .map(|(mon, c)| (mon.with_suffix(m), *c))
                .collect::<Vec<_>>(),
        )
    };
    let mut gens: Vec<Polynomial> = source.ideal().iter().map(lift).collect();
    let p = source.ring().field().characteristic();
    for (k, rep) in representatives.iter().enumerate() {
        let y = Monomial::var(m, k).with_prefix(n);
        gens.push(mixed.from_terms(vec![(y, 1), (rep.with_suffix(m), p - 1)]));
    }
    let keep: Vec<usize> = (n..n + m).collect();
    let elim = eliminate(&mixed, &gens, &keep, caps.elimination * c)?;
    debug_assert_eq!(elim.ring.names(), y_names.as_slice());
    let target = Arc::new(RingPresentation::new(
        elim.ring.clone(),
        elim.generators.clone(),
    )?);

    for i in 0..=caps.verify_through {
        let lhs = target.hilbert_function(i);
        let rhs = source.hilbert_function(i * c);
        if lhs != rhs {
            return Err(Error::invariant(format!(
                "Veronese Hilbert function mismatch in degree {i}: {lhs} != {rhs}"
            )));
        }
    }
    Ok(VeroneseMap {
        source: source.clone(),
        level: c,
        target,
        representatives,
        mixed_basis: elim.basis.polynomials(),
        mixed,
        truncated: elim.truncated,
        verified_through: caps.verify_through,
    })
}

impl VeroneseMap {
    pub fn source(&self) -> &Arc<RingPresentation> {
        &self.source
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// `K[y]/J`.
    pub fn target(&self) -> &Arc<RingPresentation> {
        &self.target
    }

    /// `representatives()[k]` is the image of `y_k`.
    pub fn representatives(&self) -> &[Monomial] {
        &self.representatives
    }

    /// The ring on `x` then `y` with the elimination order used.
    pub fn mixed_ring(&self) -> &Arc<PolyRing> {
        &self.mixed
    }

    /// Gröbner basis of `I + (y_k - rep_k)` in the mixed ring.
    pub fn mixed_basis(&self) -> &[Polynomial] {
        &self.mixed_basis
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn verified_through(&self) -> i64 {
        self.verified_through
    }

    /// Substitutes representatives for the `y` variables.
    pub fn pull_back(&self, f: &Polynomial) -> Polynomial {
        let src = self.source.ring();
        let mut acc = Polynomial::zero();
        for (mon, c) in f.terms() {
            let mut t = src.constant(*c);
            for (k, &e) in mon.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = src.mul_term(&t, &self.representatives[k], 1);
                }
            }
            acc = src.add(&acc, &t);
        }
        acc
    }
}
