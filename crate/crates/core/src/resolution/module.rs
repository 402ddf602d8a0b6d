use std::sync::Arc;

use super::ring::{ideal_seeds, RingPresentation};
use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx, Monomial, Term};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_seeded, minimal_generators, standard_monomials, syzygies, GroebnerBasis,
};

/// A finitely presented graded module `coker(relations) (twist)`: generator
/// `k` sits in internal degree `shifts[k]` and in degree `shifts[k] - twist`
/// of the module.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ring: Arc<RingPresentation>,
    module: GradedFreeModule,
    relations: Vec<FreeVector>,
    twist: i64,
    relations_valid_through: Option<i64>,
}

impl ModulePresentation {
    pub fn new(
        ring: Arc<RingPresentation>,
        shifts: Vec<i64>,
        relations: Vec<FreeVector>,
        twist: i64,
    ) -> Result<Self> {
        let module = GradedFreeModule::new(shifts);
        let ctx = ModuleCtx::new(ring.ring(), &module);
        for r in &relations {
            if r.terms().iter().any(|t| t.pos as usize >= module.rank()) {
                return Err(Error::usage("relation refers to a missing generator"));
            }
            if !ctx.is_homogeneous(r) {
                return Err(Error::usage(format!(
                    "relation {} is not homogeneous for the generator shifts",
                    ctx.fmt(r)
                )));
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(ModulePresentation {
            ring,
            module,
            relations,
            twist,
            relations_valid_through: None,
        })
    }

    /// The free module `⊕ R(-shift)`.
    pub fn free(ring: Arc<RingPresentation>, shifts: Vec<i64>) -> Self {
        Self::new(ring, shifts, Vec::new(), 0).expect("no relations")
    }

    /// `K = R/m`: one generator in degree zero, the variables as relations.
    pub fn residue_field(ring: Arc<RingPresentation>) -> Self {
        let module = GradedFreeModule::new(vec![0]);
        let rels = {
            let ctx = ModuleCtx::new(ring.ring(), &module);
            (0..ring.nvars())
                .map(|k| ctx.from_polys(&[(0, &ring.ring().var(k))]))
                .collect()
        };
        Self::new(ring, vec![0], rels, 0).expect("linear relations are homogeneous")
    }

    /// `m^s(s)`: the degree-`s` monomials of `R` as generators (internal
    /// degree `s`, twist `s`), with their minimal syzygies over `R` as
    /// relations, computed up to internal degree `degree_cap`.
    pub fn power_of_maximal_ideal(
        ring: Arc<RingPresentation>,
        s: i64,
        degree_cap: i64,
    ) -> Result<Self> {
        if s < 1 {
            return Err(Error::usage("power of the maximal ideal needs s >= 1"));
        }
        let basis = ring.k_basis(s);
        let target = GradedFreeModule::new(vec![0]);
        let r = ring.ring();
        let vectors: Vec<FreeVector> = {
            let ctx = ModuleCtx::new(r, &target);
            basis
                .iter()
                .map(|m| {
                    ctx.from_terms([Term {
                        mon: m.clone(),
                        pos: 0,
                        coeff: 1,
                    }])
                })
                .collect()
        };
        let degrees = vec![s; vectors.len()];
        let syz = syzygies(
            r,
            &target,
            &vectors,
            &degrees,
            ring.ideal_basis_polys(),
            degree_cap,
        )?;
        let mg = minimal_generators(
            r,
            &syz.module,
            &syz.generators,
            ring.ideal_basis_polys(),
            degree_cap,
        )?;
        let mut out = Self::new(ring, degrees, mg.reduced, s)?;
        if syz.truncated {
            out.relations_valid_through = Some(degree_cap);
        }
        Ok(out)
    }

    /// The same presentation over an identical ring object.
    pub fn rebase(&self, ring: Arc<RingPresentation>) -> Result<Self> {
        if ring.describe() != self.ring.describe() {
            return Err(Error::usage("cannot move a module to a different ring"));
        }
        let mut out = self.clone();
        out.ring = ring;
        Ok(out)
    }

    /// `M(d)`, realized by adding `d` to the twist.
    pub fn twisted(&self, d: i64) -> Self {
        let mut out = self.clone();
        out.twist += d;
        out
    }

    /// Marks the relation list as complete only through internal degree `b`.
    pub fn with_relations_valid_through(mut self, b: Option<i64>) -> Self {
        self.relations_valid_through = b;
        self
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn free_module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn ctx(&self) -> ModuleCtx<'_> {
        ModuleCtx::new(self.ring.ring(), &self.module)
    }

    /// Internal generator degrees.
    pub fn shifts(&self) -> &[i64] {
        self.module.shifts()
    }

    /// Generator degrees in the module, i.e. internal degree minus twist.
    pub fn generator_degrees(&self) -> Vec<i64> {
        self.module
            .shifts()
            .iter()
            .map(|s| s - self.twist)
            .collect()
    }

    pub fn relations(&self) -> &[FreeVector] {
        &self.relations
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn relations_valid_through(&self) -> Option<i64> {
        self.relations_valid_through
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    /// Removes generators killed by relations with a unit entry, repeatedly,
    /// so that every remaining relation lies in `m F`.
    pub fn prune_units(&self) -> Self {
        let ring = self.ring.ring();
        let mut shifts = self.module.shifts().to_vec();
        let mut rels = self.relations.clone();
        loop {
            let module = GradedFreeModule::new(shifts.clone());
            let ctx = ModuleCtx::new(ring, &module);
            let unit = rels.iter().enumerate().find_map(|(k, r)| {
                r.terms()
                    .iter()
                    .find(|t| t.mon.degree() == 0)
                    .map(|t| (k, t.pos as usize, t.coeff))
            });
            let Some((k, pos, c)) = unit else { break };
            let pivot = ctx.scale(&rels[k], ring.field().inv(c));
            let mut next = Vec::with_capacity(rels.len());
            for (j, r) in rels.iter().enumerate() {
                if j == k {
                    continue;
                }
                let f = r.component(pos);
                let r = if f.is_zero() {
                    r.clone()
                } else {
                    ctx.sub(r, &ctx.mul_poly(&pivot, &f))
                };
                debug_assert!(r.component(pos).is_zero());
                next.push(r);
            }
            shifts.remove(pos);
            let small = GradedFreeModule::new(shifts.clone());
            let sctx = ModuleCtx::new(ring, &small);
            rels = next
                .into_iter()
                .filter(|r| !r.is_zero())
                .map(|r| {
                    sctx.from_terms(r.into_terms().into_iter().map(|t| Term {
                        pos: if t.pos as usize > pos {
                            t.pos - 1
                        } else {
                            t.pos
                        },
                        ..t
                    }))
                })
                .collect();
        }
        ModulePresentation {
            ring: self.ring.clone(),
            module: GradedFreeModule::new(shifts),
            relations: rels,
            twist: self.twist,
            relations_valid_through: self.relations_valid_through,
        }
    }

    /// Minimal presentation: unit relations pruned, relations reduced to a
    /// minimal generating set modulo the ideal.
    pub fn minimize(&self) -> Result<Self> {
        let mut out = self.prune_units();
        let cap = out
            .relations
            .iter()
            .map(|r| out.ctx().homogeneous_degree(r).unwrap())
            .max();
        if let Some(cap) = cap {
            let mg = minimal_generators(
                out.ring.ring(),
                &out.module,
                &out.relations,
                out.ring.ideal_basis_polys(),
                cap,
            )?;
            out.relations = mg.reduced;
        }
        Ok(out)
    }

    /// Gröbner basis of `relations + I*F` complete through internal degree
    /// `internal_cap`.
    pub fn quotient_basis(&self, internal_cap: i64) -> Result<GroebnerBasis> {
        if let Some(b) = self.relations_valid_through {
            if internal_cap > b {
                return Err(Error::usage(format!(
                    "relations are only known through internal degree {b}"
                )));
            }
        }
        let ring = self.ring.ring();
        let seeds = ideal_seeds(&self.ring, &self.module);
        let run = buchberger_seeded(ring, &self.module, &seeds, &self.relations, internal_cap)?;
        Ok(run.basis)
    }

    /// Standard monomials of the module in degree `e` (internal degree
    /// `e + twist`).
    pub fn k_basis(&self, e: i64) -> Result<Vec<(Monomial, usize)>> {
        let internal = e + self.twist;
        Ok(standard_monomials(
            &self.quotient_basis(internal)?,
            internal,
        ))
    }

    pub fn hilbert_function(&self, e: i64) -> Result<usize> {
        Ok(self.k_basis(e)?.len())
    }
}
