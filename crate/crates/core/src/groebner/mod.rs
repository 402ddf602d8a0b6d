//! Gröbner bases of graded submodules of shifted free modules over a
//! polynomial ring (ideals are the rank-one case): normal forms, syzygies,
//! minimal generators, standard monomials and elimination.

mod buchberger;
mod eliminate;
mod kbasis;
pub mod linalg;
mod mingens;
mod reduce;
mod syzygy;

use std::sync::Arc;

use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx, Monomial, PolyRing, Polynomial, Term};
use crate::error::{Error, Result};
use reduce::LeadIndex;

pub use buchberger::{buchberger, buchberger_seeded, BuchbergerRun};
pub use eliminate::{eliminate, Elimination};
pub use kbasis::standard_monomials;
pub use mingens::{minimal_generators, MinimalGenerators};
pub use syzygy::{syzygies, syzygy_basis, Syzygies};

/// Generators of a graded submodule of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub module: GradedFreeModule,
    pub generators: Vec<FreeVector>,
}

/// A (possibly degree-truncated) Gröbner basis with monic, homogeneous
/// generators, no leading term dividing another.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    module: GradedFreeModule,
    generators: Vec<FreeVector>,
    index: LeadIndex,
    truncated: bool,
    degree_cap: i64,
}

impl GroebnerBasis {
    pub(crate) fn from_parts(
        ring: Arc<PolyRing>,
        module: GradedFreeModule,
        generators: Vec<FreeVector>,
        truncated: bool,
        degree_cap: i64,
    ) -> Self {
        let mut index = LeadIndex::default();
        for (k, g) in generators.iter().enumerate() {
            index.insert(k, g.lead().expect("nonzero generator"));
        }
        GroebnerBasis {
            ring,
            module,
            generators,
            index,
            truncated,
            degree_cap,
        }
    }

    /// Gröbner basis of an ideal from polynomials (rank one, shift zero).
    pub fn ideal(ring: &Arc<PolyRing>, gens: &[Polynomial], degree_cap: i64) -> Result<Self> {
        let module = GradedFreeModule::new(vec![0]);
        let ctx = ModuleCtx::new(ring, &module);
        let vs: Vec<FreeVector> = gens.iter().map(|g| ctx.from_polys(&[(0, g)])).collect();
        buchberger(ring, &module, &vs, degree_cap)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn ctx(&self) -> ModuleCtx<'_> {
        ModuleCtx::new(&self.ring, &self.module)
    }

    pub fn generators(&self) -> &[FreeVector] {
        &self.generators
    }

    /// Rank-one view of the generators as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|g| self.ring.from_terms(g.component(0).into_terms()))
            .collect()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn degree_cap(&self) -> i64 {
        self.degree_cap
    }

    pub fn leading_terms(&self) -> impl Iterator<Item = (&Monomial, usize)> {
        self.generators.iter().map(|g| {
            let t = g.lead().unwrap();
            (&t.mon, t.pos as usize)
        })
    }

    /// True when some leading term divides `mon` at `pos`.
    pub fn lead_divides(&self, mon: &Monomial, pos: usize) -> bool {
        self.index.find_divisor(mon, pos as u32).is_some()
    }

    fn check_vector(&self, v: &FreeVector) -> Result<()> {
        for t in v.terms() {
            if t.pos as usize >= self.module.rank() || t.mon.nvars() != self.ring.nvars() {
                return Err(Error::usage(
                    "vector does not belong to the Gröbner basis' free module",
                ));
            }
        }
        Ok(())
    }

    /// Fully reduced remainder of `v`: no term divisible by a leading term.
    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector> {
        self.check_vector(v)?;
        let ctx = self.ctx();
        let v = ctx.resort(v.clone());
        Ok(reduce::reduce(
            &ctx,
            &self.generators,
            &self.index,
            v,
            false,
        ))
    }

    pub fn normal_form_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        let ctx = self.ctx();
        let v = self.normal_form(&ctx.from_polys(&[(0, f)]))?;
        Ok(self.ring.from_terms(v.component(0).into_terms()))
    }

    /// Whether every S-pair of internal degree at most `up_to` reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self, up_to: i64) -> bool {
        let ctx = self.ctx();
        let neg = self.ring.field().neg(1);
        for (a, ga) in self.generators.iter().enumerate() {
            for gb in &self.generators[a + 1..] {
                let (ta, tb) = (ga.lead().unwrap(), gb.lead().unwrap());
                if ta.pos != tb.pos {
                    continue;
                }
                let l = ta.mon.lcm(&tb.mon);
                if ctx.term_degree(&l, ta.pos) > up_to {
                    continue;
                }
                let s = ctx.axpy(
                    &ctx.mul_term(ga, &l.div(&ta.mon).unwrap(), 1),
                    neg,
                    &l.div(&tb.mon).unwrap(),
                    gb,
                );
                if !self.normal_form(&s).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Multiplies every polynomial of `ideal` into each basis position of `module`.
pub(crate) fn ideal_times_basis(
    ring: &PolyRing,
    module: &GradedFreeModule,
    ideal: &[Polynomial],
    positions: std::ops::Range<usize>,
) -> Vec<FreeVector> {
    let ctx = ModuleCtx::new(ring, module);
    let mut out = Vec::new();
    for pos in positions {
        for g in ideal {
            out.push(ctx.from_terms(g.terms().iter().map(|(m, c)| Term {
                mon: m.clone(),
                pos: pos as u32,
                coeff: *c,
            })));
        }
    }
    out
}

#[cfg(test)]
mod tests;
