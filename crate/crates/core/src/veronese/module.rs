use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::ring::VeroneseMap;
use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx, Monomial, Polynomial, Term};
use crate::error::{Error, Result};
use crate::groebner::linalg::{RowEchelon, SparseRow};
use crate::groebner::{buchberger_seeded, minimal_generators, standard_monomials, GroebnerBasis};
use crate::resolution::ModulePresentation;

/// Coordinates of normal forms with respect to the standard monomials of one
/// internal degree.
struct GradedPiece {
    index: HashMap<(Monomial, u32), usize>,
}

impl GradedPiece {
    fn new(basis: &GroebnerBasis, degree: i64) -> Self {
        let index = standard_monomials(basis, degree)
            .into_iter()
            .enumerate()
            .map(|(k, (m, p))| ((m, p as u32), k))
            .collect();
        GradedPiece { index }
    }

    fn dim(&self) -> usize {
        self.index.len()
    }

    fn row(&self, basis: &GroebnerBasis, v: &FreeVector) -> Result<SparseRow> {
        let nf = basis.normal_form(v)?;
        let mut row: SparseRow = nf
            .terms()
            .iter()
            .map(|t| {
                let k = self
                    .index
                    .get(&(t.mon.clone(), t.pos))
                    .copied()
                    .ok_or_else(|| {
                        Error::invariant("normal form outside the standard monomials")
                    })?;
                Ok((k, t.coeff))
            })
            .collect::<Result<_>>()?;
        row.sort_unstable();
        Ok(row)
    }
}

/// `M^(c,d) = ⊕_i M_{ic+d}` as a module over `R^(c) = K[y]/J`, with
/// relations complete through degree `relation_cap` of `M^(c,d)`.
///
/// Generators are a graded Nakayama basis chosen among `x^a e_l` with
/// `|a| < c`; relations are the `y`-only part of an elimination Gröbner basis
/// of the module of `(g, e_g)` and the relations of `M` in the ring on `x`
/// and `y`.
pub fn veronese_module(
    m: &ModulePresentation,
    v: &VeroneseMap,
    d: i64,
    relation_cap: i64,
) -> Result<ModulePresentation> {
    let c = v.level();
    if !(0..c).contains(&d) {
        return Err(Error::usage(format!("piece index {d} outside 0..{c}")));
    }
    if !Arc::ptr_eq(m.ring(), v.source()) && m.ring().ideal() != v.source().ideal() {
        return Err(Error::usage(
            "module and Veronese map live over different rings",
        ));
    }
    let source = v.source();
    let sring = source.ring();
    let twist = m.twist();
    let n = sring.nvars();
    let r = m.rank();

    let mut candidates: BTreeMap<i64, Vec<(Monomial, usize)>> = BTreeMap::new();
    for (l, &s) in m.shifts().iter().enumerate() {
        for a in 0..c {
            if (s - twist + a - d).rem_euclid(c) == 0 {
                for mon in source.k_basis(a) {
                    candidates.entry(s + a).or_default().push((mon, l));
                }
            }
        }
    }
    let top = candidates.keys().next_back().copied();
    let Some(top) = top else {
        return ModulePresentation::new(v.target().clone(), Vec::new(), Vec::new(), 0);
    };
    let low = *candidates.keys().next().unwrap();
    let verify_hi = match m.relations_valid_through() {
        Some(b) => (top + 2 * c).min(b).max(top),
        None => top + 2 * c,
    };
    let quotient = m.quotient_basis(verify_hi)?;
    let ctx = m.ctx();
    let c_monomials = source.k_basis(c);

    let mut gens: Vec<(FreeVector, i64)> = Vec::new();
    for (&e, cands) in &candidates {
        let piece = GradedPiece::new(&quotient, e);
        if piece.dim() == 0 {
            continue;
        }
        let mut echelon = RowEchelon::new(*sring.field());
        for (b, pos) in standard_monomials(&quotient, e - c) {
            for y in &c_monomials {
                let w = ctx.from_terms([Term {
                    mon: b.mul(y),
                    pos: pos as u32,
                    coeff: 1,
                }]);
                echelon.insert(&piece.row(&quotient, &w)?);
                if echelon.rank() == piece.dim() {
                    break;
                }
            }
        }
        for (mon, l) in cands {
            if echelon.rank() == piece.dim() {
                break;
            }
            let g = ctx.from_terms([Term {
                mon: mon.clone(),
                pos: *l as u32,
                coeff: 1,
            }]);
            if echelon.insert(&piece.row(&quotient, &g)?) {
                gens.push((g, e));
            }
        }
    }

    let target = v.target().clone();
    let tring = target.ring();
    let degrees: Vec<i64> = gens.iter().map(|(_, e)| (e - twist - d) / c).collect();
    let out_module = GradedFreeModule::new(degrees.clone());

    let mixed = v.mixed_ring();
    let mshifts: Vec<i64> = m
        .shifts()
        .iter()
        .copied()
        .chain(gens.iter().map(|(_, e)| *e))
        .collect();
    let big = GradedFreeModule::with_dominant_block(mshifts, r);
    let bctx = ModuleCtx::new(mixed, &big);
    let my = v.representatives().len();
    let lift_x = |t: &Term| Term {
        mon: t.mon.with_suffix(my),
        pos: t.pos,
        coeff: t.coeff,
    };
    let mut inputs: Vec<FreeVector> = Vec::new();
    let one = Monomial::one(mixed.nvars());
    for (k, (g, _)) in gens.iter().enumerate() {
        let mut terms: Vec<Term> = g.terms().iter().map(lift_x).collect();
        terms.push(Term {
            mon: one.clone(),
            pos: (r + k) as u32,
            coeff: 1,
        });
        inputs.push(bctx.from_terms(terms));
    }
    for u in m.relations() {
        inputs.push(bctx.from_terms(u.terms().iter().map(lift_x)));
    }
    let mut seeds: Vec<FreeVector> = Vec::new();
    for l in 0..r {
        for f in v.mixed_basis() {
            seeds.push(bctx.from_polys(&[(l, f)]));
        }
    }
    let j_lifted: Vec<Polynomial> = target
        .ideal_basis_polys()
        .iter()
        .map(|f| {
            mixed.from_terms(
                f.terms()
                    .iter()
                    .map(|(mon, k)| (mon.with_prefix(n), *k))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    for k in 0..gens.len() {
        for f in &j_lifted {
            seeds.push(bctx.from_polys(&[(r + k, f)]));
        }
    }
    let mixed_cap = c * relation_cap + twist + d;
    let run = buchberger_seeded(mixed, &big, &seeds, &inputs, mixed_cap)?;
    let order = mixed.order();
    let octx = ModuleCtx::new(tring, &out_module);
    let mut rels: Vec<FreeVector> = Vec::new();
    for g in run.basis.generators() {
        let lead = g.lead().unwrap();
        if (lead.pos as usize) < r || order.elim_degree(&lead.mon) != 0 {
            continue;
        }
        debug_assert!(g
            .terms()
            .iter()
            .all(|t| t.pos as usize >= r && order.elim_degree(&t.mon) == 0));
        rels.push(octx.from_terms(g.terms().iter().map(|t| Term {
            mon: t.mon.drop_prefix(n),
            pos: t.pos - r as u32,
            coeff: t.coeff,
        })));
    }
    let mg = minimal_generators(
        tring,
        &out_module,
        &rels,
        target.ideal_basis_polys(),
        relation_cap,
    )?;
    let mut valid = (run.basis.is_truncated() || v.is_truncated()).then_some(relation_cap);
    if let Some(b) = m.relations_valid_through() {
        let inherited = (b - twist - d).div_euclid(c);
        valid = Some(valid.map_or(inherited, |v| v.min(inherited)));
    }
    let out = ModulePresentation::new(target, degrees, mg.reduced, 0)?
        .with_relations_valid_through(valid);

    let lo = (low - twist - d).div_euclid(c);
    let hi = ((verify_hi - twist - d).div_euclid(c)).min(valid.unwrap_or(relation_cap));
    for i in lo..=hi {
        let lhs = out.hilbert_function(i)?;
        let rhs = standard_monomials(&quotient, i * c + d + twist).len();
        if lhs != rhs {
            return Err(Error::invariant(format!(
                "Veronese module Hilbert function mismatch in degree {i}: {lhs} != {rhs}"
            )));
        }
    }
    Ok(out)
}

/// The `c` pieces `M^(c,0), …, M^(c,c-1)`.
pub fn restrict_module_to_veronese(
    m: &ModulePresentation,
    v: &VeroneseMap,
    relation_cap: i64,
) -> Result<Vec<ModulePresentation>> {
    (0..v.level())
        .map(|d| veronese_module(m, v, d, relation_cap))
        .collect()
}
