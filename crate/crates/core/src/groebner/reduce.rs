use std::collections::HashMap;

use crate::arith::{FreeVector, ModuleCtx, Monomial, Term};

#[inline]
pub(crate) fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

/// Leading terms of a set of module elements, bucketed by position.
#[derive(Clone, Debug, Default)]
pub(crate) struct LeadIndex {
    by_pos: HashMap<u32, Vec<usize>>,
    leads: Vec<Option<(Monomial, u64)>>,
}

impl LeadIndex {
    pub fn insert(&mut self, idx: usize, lead: &Term) {
        if self.leads.len() <= idx {
            self.leads.resize(idx + 1, None);
        }
        self.leads[idx] = Some((lead.mon.clone(), divmask(&lead.mon)));
        self.by_pos.entry(lead.pos).or_default().push(idx);
    }

    pub fn at_position(&self, pos: u32) -> &[usize] {
        self.by_pos.get(&pos).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// First indexed element whose leading term divides `mon` at `pos`.
    #[inline]
    pub fn find_divisor(&self, mon: &Monomial, pos: u32) -> Option<(usize, &Monomial)> {
        let list = self.by_pos.get(&pos)?;
        let mask = divmask(mon);
        for &k in list {
            if let Some((lm, lmask)) = &self.leads[k] {
                if lmask & !mask == 0 && lm.divides(mon) {
                    return Some((k, lm));
                }
            }
        }
        None
    }
}

/// `a + c*m*b` on raw sorted term slices.
pub(crate) fn axpy_terms(
    ctx: &ModuleCtx,
    a: &[Term],
    c: u32,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    use std::cmp::Ordering;
    let fld = ctx.ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].mon.mul(m);
        let at = &a[i];
        match ctx.cmp_terms(&at.mon, at.pos, &bm, b[j].pos) {
            Ordering::Greater => {
                out.push(at.clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    mon: bm,
                    pos: b[j].pos,
                    coeff: fld.mul(b[j].coeff, c),
                });
                j += 1;
            }
            Ordering::Equal => {
                let s = fld.add(at.coeff, fld.mul(b[j].coeff, c));
                if s != 0 {
                    out.push(Term {
                        mon: bm,
                        pos: at.pos,
                        coeff: s,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|t| Term {
        mon: t.mon.mul(m),
        pos: t.pos,
        coeff: fld.mul(t.coeff, c),
    }));
    out
}

/// Full reduction of `v` by the monic elements `elems` (indexed by `index`).
/// When `top_only` is set, stops at the first irreducible leading term.
pub(crate) fn reduce(
    ctx: &ModuleCtx,
    elems: &[FreeVector],
    index: &LeadIndex,
    v: FreeVector,
    top_only: bool,
) -> FreeVector {
    let fld = ctx.ring.field();
    let mut rest: Vec<Term> = v.into_terms();
    let mut start = 0usize;
    let mut done: Vec<Term> = Vec::new();
    while start < rest.len() {
        let t = &rest[start];
        match index.find_divisor(&t.mon, t.pos) {
            Some((k, lm)) => {
                let q = t.mon.div(lm).expect("divisor");
                let c = fld.neg(t.coeff);
                // elems[k] is monic: its leading term cancels rest[start]
                rest = axpy_terms(ctx, &rest[start + 1..], c, &q, &elems[k].terms()[1..]);
                start = 0;
            }
            None => {
                if top_only {
                    done.extend(rest.drain(start..));
                    break;
                }
                done.push(rest[start].clone());
                start += 1;
            }
        }
    }
    FreeVector::from_sorted_unchecked(done)
}
