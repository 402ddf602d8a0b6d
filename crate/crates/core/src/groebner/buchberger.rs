use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::reduce::{reduce, LeadIndex};
use super::GroebnerBasis;
use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx, Monomial, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Result of a Buchberger run that also sorted out which input generators are
/// needed.
#[derive(Clone, Debug)]
pub struct BuchbergerRun {
    pub basis: GroebnerBasis,
    /// Indices of input generators that were not in the submodule generated by
    /// the seeds and the earlier generators (graded Nakayama minimality).
    pub minimal_indices: Vec<usize>,
    /// The reduced forms of those generators, same order.
    pub minimal_reduced: Vec<FreeVector>,
}

/// Homogeneous Buchberger with the normal selection strategy (lowest degree
/// first) and the Gebauer–Möller pair criteria.
///
/// `seeds` must already be a Gröbner basis of the submodule they generate;
/// pairs among them are never formed. `generators` are processed at their own
/// degree after all S-pairs of that degree, so a generator survives reduction
/// exactly when it is not in the submodule generated by everything of lower
/// degree.
pub struct Engine<'a> {
    ctx: ModuleCtx<'a>,
    cap: i64,
    elems: Vec<FreeVector>,
    degs: Vec<i64>,
    seed: Vec<bool>,
    index: LeadIndex,
    pairs: HashMap<u32, Vec<(i64, Pair)>>,
    product_criterion: bool,
}

impl<'a> Engine<'a> {
    pub fn new(ctx: ModuleCtx<'a>, cap: i64) -> Self {
        Engine {
            product_criterion: ctx.module.rank() == 1,
            ctx,
            cap,
            elems: Vec::new(),
            degs: Vec::new(),
            seed: Vec::new(),
            index: LeadIndex::default(),
            pairs: HashMap::new(),
        }
    }

    fn degree_of(&self, v: &FreeVector) -> Result<i64> {
        self.ctx
            .homogeneous_degree(v)
            .ok_or_else(|| Error::usage(format!("inhomogeneous input {}", self.ctx.fmt(v))))
    }

    fn push_seed(&mut self, v: FreeVector) -> Result<()> {
        if v.is_zero() {
            return Ok(());
        }
        let d = self.degree_of(&v)?;
        let v = self.ctx.make_monic(&v);
        let k = self.elems.len();
        self.index.insert(k, v.lead().unwrap());
        self.elems.push(v);
        self.degs.push(d);
        self.seed.push(true);
        Ok(())
    }

    fn lead_mon(&self, k: usize) -> &Monomial {
        &self.elems[k].lead().unwrap().mon
    }

    fn pair_degree(&self, lcm: &Monomial, pos: u32) -> i64 {
        self.ctx.term_degree(lcm, pos)
    }

    /// Adds a reduced nonzero element and updates the pair set.
    fn insert(&mut self, v: FreeVector, deg: i64) {
        let v = self.ctx.make_monic(&v);
        let k = self.elems.len();
        let pos = v.lead().unwrap().pos;
        let lm_h = v.lead().unwrap().mon.clone();
        let partners: Vec<usize> = self.index.at_position(pos).to_vec();

        // candidate new pairs (g, h)
        let mut cand: Vec<(Pair, bool)> = partners
            .iter()
            .map(|&g| {
                let lg = self.lead_mon(g);
                (
                    Pair {
                        i: g,
                        j: k,
                        lcm: lg.lcm(&lm_h),
                    },
                    lg.is_coprime(&lm_h),
                )
            })
            .collect();

        // M: drop (g,h) when another new pair's lcm properly divides its lcm
        let keep: Vec<bool> = (0..cand.len())
            .map(|a| {
                !cand.iter().enumerate().any(|(b, (pb, _))| {
                    b != a && pb.lcm.divides(&cand[a].0.lcm) && pb.lcm != cand[a].0.lcm
                })
            })
            .collect();
        let mut it = keep.iter();
        cand.retain(|_| *it.next().unwrap());

        // F (and product criterion): one representative per lcm
        let mut groups: BTreeMap<Vec<u16>, Vec<(Pair, bool)>> = BTreeMap::new();
        for c in cand {
            groups
                .entry(c.0.lcm.exponents().to_vec())
                .or_default()
                .push(c);
        }
        let mut fresh = Vec::new();
        for (_, group) in groups {
            if self.product_criterion && group.iter().any(|(_, coprime)| *coprime) {
                continue;
            }
            fresh.push(group.into_iter().next().unwrap().0);
        }

        // B: old pairs whose lcm is a multiple of lm(h) in a chain through h
        if let Some(old) = self.pairs.get_mut(&pos) {
            let elems = &self.elems;
            old.retain(|(_, p)| {
                if !lm_h.divides(&p.lcm) {
                    return true;
                }
                let li = elems[p.i].lead().unwrap().mon.lcm(&lm_h);
                let lj = elems[p.j].lead().unwrap().mon.lcm(&lm_h);
                li == p.lcm || lj == p.lcm
            });
        }

        let entries: Vec<(i64, Pair)> = fresh
            .into_iter()
            .map(|p| (self.pair_degree(&p.lcm, pos), p))
            .collect();
        self.pairs.entry(pos).or_default().extend(entries);

        self.index.insert(k, v.lead().unwrap());
        self.elems.push(v);
        self.degs.push(deg);
        self.seed.push(false);
    }

    fn s_vector(&self, p: &Pair) -> FreeVector {
        let ctx = &self.ctx;
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let ma = p.lcm.div(&a.lead().unwrap().mon).unwrap();
        let mb = p.lcm.div(&b.lead().unwrap().mon).unwrap();
        let sa = ctx.mul_term(a, &ma, 1);
        ctx.axpy(&sa, ctx.ring.field().neg(1), &mb, b)
    }

    fn min_pair_degree(&self) -> Option<i64> {
        self.pairs
            .values()
            .flat_map(|v| v.iter().map(|(d, _)| *d))
            .min()
    }

    fn take_pairs(&mut self, deg: i64) -> Vec<(u32, Pair)> {
        let mut out = Vec::new();
        let mut positions: Vec<u32> = self.pairs.keys().copied().collect();
        positions.sort_unstable();
        for pos in positions {
            let list = self.pairs.get_mut(&pos).unwrap();
            let mut keep = Vec::with_capacity(list.len());
            for (d, p) in list.drain(..) {
                if d == deg {
                    out.push((pos, p));
                } else {
                    keep.push((d, p));
                }
            }
            *list = keep;
        }
        out.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then(a.1.j.cmp(&b.1.j))
                .then(a.1.i.cmp(&b.1.i))
        });
        out
    }

    fn reduce(&self, v: FreeVector) -> FreeVector {
        reduce(&self.ctx, &self.elems, &self.index, v, false)
    }

    /// Runs to completion or to the degree cap. Returns the truncation flag and
    /// the minimal generators found among `generators`.
    fn run(&mut self, generators: &[FreeVector]) -> Result<(bool, Vec<usize>, Vec<FreeVector>)> {
        let mut gens: Vec<(i64, usize)> = Vec::new();
        for (k, g) in generators.iter().enumerate() {
            if !g.is_zero() {
                gens.push((self.degree_of(g)?, k));
            }
        }
        gens.sort();
        let mut next_gen = 0usize;
        let mut minimal = Vec::new();
        let mut minimal_reduced = Vec::new();
        loop {
            let pd = self.min_pair_degree();
            let gd = gens.get(next_gen).map(|g| g.0);
            let deg = match (pd, gd) {
                (None, None) => return Ok((false, minimal, minimal_reduced)),
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            if deg > self.cap {
                return Ok((true, minimal, minimal_reduced));
            }
            for (_, p) in self.take_pairs(deg) {
                let s = self.s_vector(&p);
                let r = self.reduce(s);
                if !r.is_zero() {
                    self.insert(r, deg);
                }
            }
            while next_gen < gens.len() && gens[next_gen].0 == deg {
                let k = gens[next_gen].1;
                next_gen += 1;
                let r = self.reduce(generators[k].clone());
                if !r.is_zero() {
                    minimal.push(k);
                    minimal_reduced.push(r.clone());
                    self.insert(r, deg);
                }
            }
        }
    }

    /// Drops elements whose leading term is divisible by another element's.
    fn finish(self, ring: &Arc<PolyRing>, truncated: bool) -> GroebnerBasis {
        let n = self.elems.len();
        let mut alive = vec![true; n];
        for a in 0..n {
            let ta = self.elems[a].lead().unwrap();
            for &b in self.index.at_position(ta.pos) {
                if b == a || !alive[b] {
                    continue;
                }
                let lb = self.lead_mon(b);
                if lb.divides(&ta.mon) && (lb != &ta.mon || b < a) {
                    alive[a] = false;
                    break;
                }
            }
        }
        let gens: Vec<FreeVector> = self
            .elems
            .into_iter()
            .zip(alive)
            .filter(|(_, a)| *a)
            .map(|(v, _)| v)
            .collect();
        GroebnerBasis::from_parts(
            ring.clone(),
            self.ctx.module.clone(),
            gens,
            truncated,
            self.cap,
        )
    }
}

/// Gröbner basis of the submodule generated by `gens`, complete for all
/// S-pairs of internal degree at most `degree_cap`.
pub fn buchberger(
    ring: &Arc<PolyRing>,
    module: &GradedFreeModule,
    gens: &[FreeVector],
    degree_cap: i64,
) -> Result<GroebnerBasis> {
    Ok(buchberger_seeded(ring, module, &[], gens, degree_cap)?.basis)
}

/// Buchberger run starting from `seeds` (a Gröbner basis of what they
/// generate) and adding `gens` degree by degree.
pub fn buchberger_seeded(
    ring: &Arc<PolyRing>,
    module: &GradedFreeModule,
    seeds: &[FreeVector],
    gens: &[FreeVector],
    degree_cap: i64,
) -> Result<BuchbergerRun> {
    let ctx = ModuleCtx::new(ring, module);
    let mut engine = Engine::new(ctx, degree_cap);
    for s in seeds {
        engine.push_seed(s.clone())?;
    }
    let (truncated, minimal_indices, minimal_reduced) = engine.run(gens)?;
    Ok(BuchbergerRun {
        basis: engine.finish(ring, truncated),
        minimal_indices,
        minimal_reduced,
    })
}
