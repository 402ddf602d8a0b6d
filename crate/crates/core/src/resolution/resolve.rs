use std::sync::Arc;

use serde::Serialize;

use super::betti::BettiTable;
use super::extended::{Extended, RateValue, Rational};
use super::module::ModulePresentation;
use super::ring::RingPresentation;
use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx};
use crate::error::{Error, Result};
use crate::groebner::{minimal_generators, syzygies};

/// Homological cutoff `N` and degree cutoff `D` (module degrees, not internal).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cutoffs {
    #[serde(rename = "N")]
    pub homological: usize,
    #[serde(rename = "D")]
    pub degree: i64,
}

pub const DEFAULT_HOMOLOGICAL_CUTOFF: usize = 6;

impl Cutoffs {
    pub fn new(homological: usize, degree: i64) -> Self {
        Cutoffs {
            homological,
            degree,
        }
    }

    /// `D = 3N + m(I)`, with `m(I)` read as 1 for a polynomial ring.
    pub fn default_degree(ring: &RingPresentation, homological: usize) -> i64 {
        3 * homological as i64 + ring.max_generator_degree().unwrap_or(1)
    }

    pub fn with_default_degree(ring: &RingPresentation, homological: usize) -> Self {
        Cutoffs::new(homological, Self::default_degree(ring, homological))
    }
}

/// The first `N` steps of a minimal graded free resolution.
#[derive(Clone, Debug)]
pub struct ResolutionSlice {
    ring: Arc<RingPresentation>,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<Vec<FreeVector>>,
    twist: i64,
}

impl ResolutionSlice {
    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// `F_i` with internal shifts.
    pub fn free_module(&self, i: usize) -> &GradedFreeModule {
        &self.modules[i]
    }

    /// Generator degrees of `F_i` in module degrees.
    pub fn degrees(&self, i: usize) -> Vec<i64> {
        self.modules[i]
            .shifts()
            .iter()
            .map(|s| s - self.twist)
            .collect()
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    /// Images of the basis of `F_i` in `F_{i-1}`, for `i >= 1`.
    pub fn differential(&self, i: usize) -> &[FreeVector] {
        &self.differentials[i - 1]
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .flatten()
            .all(|v| v.terms().iter().all(|t| t.mon.degree() > 0))
    }

    /// `d_{i-1} ∘ d_i = 0` modulo the ideal for every computed pair.
    pub fn composes_to_zero(&self) -> Result<bool> {
        let ring = self.ring.ring();
        for i in 2..self.modules.len() {
            let target = &self.modules[i - 2];
            let ctx = ModuleCtx::new(ring, target);
            let prev = &self.differentials[i - 2];
            for v in &self.differentials[i - 1] {
                let mut acc = FreeVector::zero();
                for pos in v.positions() {
                    acc = ctx.add(&acc, &ctx.mul_poly(&prev[pos], &v.component(pos)));
                }
                for pos in acc.positions() {
                    if !self.ring.normal_form(&acc.component(pos))?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn degrees_of(ctx: &ModuleCtx<'_>, vs: &[FreeVector]) -> Vec<i64> {
    vs.iter()
        .map(|v| ctx.homogeneous_degree(v).expect("homogeneous"))
        .collect()
}

/// Minimal graded free resolution of `m` through homological degree `N`,
/// exact in module degrees `j <= D`. A column whose computation hit the
/// degree cutoff (or depends on one that did) is flagged truncated.
pub fn resolve_minimal(
    m: &ModulePresentation,
    cutoffs: Cutoffs,
) -> Result<(ResolutionSlice, BettiTable)> {
    let pruned = m.prune_units();
    let twist = pruned.twist();
    let t0 = pruned.shifts().iter().max().map(|s| s - twist);
    if let Some(t0) = t0 {
        if cutoffs.degree < t0 {
            return Err(Error::usage(format!(
                "degree cutoff {} is below the top generator degree {t0}",
                cutoffs.degree
            )));
        }
    }
    let ring_pres = pruned.ring().clone();
    let ring = ring_pres.ring().clone();
    let ideal = ring_pres.ideal_basis_polys();
    let n = cutoffs.homological;

    let mut cap = cutoffs.degree + twist;
    let mut upstream_truncated = false;
    if let Some(b) = pruned.relations_valid_through() {
        if b < cap {
            cap = b;
            upstream_truncated = true;
        }
    }

    let mut modules = vec![pruned.free_module().clone()];
    let mut differentials: Vec<Vec<FreeVector>> = Vec::new();
    let mut truncated = vec![false];

    if n >= 1 {
        let ctx = pruned.ctx();
        let kept: Vec<FreeVector> = pruned
            .relations()
            .iter()
            .filter(|r| ctx.homogeneous_degree(r).unwrap() <= cap)
            .cloned()
            .collect();
        let dropped = kept.len() < pruned.relations().len();
        let mg = minimal_generators(&ring, pruned.free_module(), &kept, ideal, cap)?;
        let gens = mg.reduced;
        let degs = degrees_of(&ctx, &gens);
        modules.push(GradedFreeModule::new(degs));
        differentials.push(gens);
        upstream_truncated |= dropped;
        truncated.push(upstream_truncated);
    }

    for i in 2..=n {
        let prev_module = &modules[i - 2];
        let prev = &differentials[i - 2];
        let source = &modules[i - 1];
        if prev.is_empty() {
            modules.push(GradedFreeModule::new(Vec::new()));
            differentials.push(Vec::new());
            truncated.push(upstream_truncated);
            continue;
        }
        let syz = syzygies(&ring, prev_module, prev, source.shifts(), ideal, cap)?;
        let mg = minimal_generators(&ring, &syz.module, &syz.generators, ideal, cap)?;
        let gens = mg.reduced;
        let degs = degrees_of(&ModuleCtx::new(&ring, source), &gens);
        upstream_truncated |= syz.truncated;
        modules.push(GradedFreeModule::new(degs));
        differentials.push(gens);
        truncated.push(upstream_truncated);
    }

    let degrees: Vec<Vec<i64>> = modules
        .iter()
        .map(|f| f.shifts().iter().map(|s| s - twist).collect())
        .collect();
    let table = BettiTable::from_degrees(&degrees, truncated, cutoffs.degree);
    Ok((
        ResolutionSlice {
            ring: ring_pres,
            modules,
            differentials,
            twist,
        },
        table,
    ))
}

/// Backelin rate over the window: `max (t_i(K) - 1)/(i - 1)` for
/// `2 <= i <= N + 1`.
#[derive(Clone, Debug)]
pub struct RatValue {
    pub value: RateValue,
    /// The window hit a degree cutoff; the value is only a lower bound.
    pub lower_bound: bool,
    /// Betti table of the residue field through `N + 1`.
    pub table: BettiTable,
}

pub fn rat_of_ring(ring: &Arc<RingPresentation>, cutoffs: Cutoffs) -> Result<RatValue> {
    let k = ModulePresentation::residue_field(ring.clone());
    let window = Cutoffs::new(cutoffs.homological + 1, cutoffs.degree);
    let (_, table) = resolve_minimal(&k, window)?;
    Ok(rat_from_residue_table(table))
}

/// Backelin rate read off a Betti table of the residue field.
pub fn rat_from_residue_table(table: BettiTable) -> RatValue {
    let value = (2..=table.homological_cutoff())
        .map(|i| table.t(i).map(|t| Rational::new(t - 1, i as i64 - 1)))
        .max()
        .unwrap_or(Extended::NegInf);
    RatValue {
        value,
        lower_bound: table.is_truncated(),
        table,
    }
}
