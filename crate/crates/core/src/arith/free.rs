use std::cmp::Ordering;

use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};

/// `⊕ R(-shift_k)`. The first `dominant` basis elements form a block that is
/// larger than every other basis element at equal internal degree; this is
/// how syzygy and elimination computations separate image and tag parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    shifts: Vec<i64>,
    dominant: usize,
}

impl GradedFreeModule {
    pub fn new(shifts: Vec<i64>) -> Self {
        GradedFreeModule {
            shifts,
            dominant: 0,
        }
    }

    pub fn with_dominant_block(shifts: Vec<i64>, dominant: usize) -> Self {
        assert!(dominant <= shifts.len());
        GradedFreeModule { shifts, dominant }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn shift(&self, pos: usize) -> i64 {
        self.shifts[pos]
    }

    pub fn dominant(&self) -> usize {
        self.dominant
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mon: Monomial,
    pub pos: u32,
    pub coeff: u32,
}

/// Element of a graded free module; terms strictly descending in the module
/// order of its context, nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeVector {
    terms: Vec<Term>,
}

impl FreeVector {
    pub fn zero() -> Self {
        FreeVector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<Term>) -> Self {
        FreeVector { terms }
    }

    /// Component at `pos` as a polynomial (terms keep their relative order).
    pub fn component(&self, pos: usize) -> Polynomial {
        Polynomial::from_sorted_unchecked(
            self.terms
                .iter()
                .filter(|t| t.pos as usize == pos)
                .map(|t| (t.mon.clone(), t.coeff))
                .collect(),
        )
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        let mut seen: Vec<usize> = self.terms.iter().map(|t| t.pos as usize).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.into_iter()
    }
}

/// Ring and free module together: the order and arithmetic on `FreeVector`s.
///
/// Module order: internal degree (weighted monomial degree plus shift), then
/// dominant block before the rest, then degree in the eliminated variables,
/// then the ring's monomial order, then lower position index first.
#[derive(Clone, Copy)]
pub struct ModuleCtx<'a> {
    pub ring: &'a PolyRing,
    pub module: &'a GradedFreeModule,
}

impl<'a> ModuleCtx<'a> {
    pub fn new(ring: &'a PolyRing, module: &'a GradedFreeModule) -> Self {
        ModuleCtx { ring, module }
    }

    #[inline]
    pub fn term_degree(&self, mon: &Monomial, pos: u32) -> i64 {
        self.ring.order().weighted_degree(mon) as i64 + self.module.shifts[pos as usize]
    }

    #[inline]
    pub fn cmp_terms(&self, am: &Monomial, ap: u32, bm: &Monomial, bp: u32) -> Ordering {
        let order = self.ring.order();
        let dom = self.module.dominant as u32;
        self.term_degree(am, ap)
            .cmp(&self.term_degree(bm, bp))
            .then_with(|| (ap < dom).cmp(&(bp < dom)))
            .then_with(|| {
                if order.eliminated() > 0 {
                    order.elim_degree(am).cmp(&order.elim_degree(bm))
                } else {
                    Ordering::Equal
                }
            })
            .then_with(|| order.cmp(am, bm))
            .then_with(|| bp.cmp(&ap))
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = Term>) -> FreeVector {
        let fld = self.ring.field();
        let mut v: Vec<Term> = terms
            .into_iter()
            .map(|mut t| {
                t.coeff %= fld.characteristic();
                t
            })
            .filter(|t| t.coeff != 0)
            .collect();
        v.sort_by(|a, b| self.cmp_terms(&b.mon, b.pos, &a.mon, a.pos));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mon == t.mon => {
                    last.coeff = fld.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        FreeVector { terms: out }
    }

    pub fn from_polys(&self, comps: &[(usize, &Polynomial)]) -> FreeVector {
        self.from_terms(comps.iter().flat_map(|(pos, p)| {
            p.terms().iter().map(move |(m, c)| Term {
                mon: m.clone(),
                pos: *pos as u32,
                coeff: *c,
            })
        }))
    }

    pub fn basis_vector(&self, pos: usize) -> FreeVector {
        FreeVector {
            terms: vec![Term {
                mon: Monomial::one(self.ring.nvars()),
                pos: pos as u32,
                coeff: 1,
            }],
        }
    }

    /// Internal degree when `v` is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, v: &FreeVector) -> Option<i64> {
        let lead = v.lead()?;
        let d = self.term_degree(&lead.mon, lead.pos);
        v.terms
            .iter()
            .all(|t| self.term_degree(&t.mon, t.pos) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self, v: &FreeVector) -> bool {
        v.is_zero() || self.homogeneous_degree(v).is_some()
    }

    pub fn add(&self, a: &FreeVector, b: &FreeVector) -> FreeVector {
        self.axpy(a, 1, &Monomial::one(self.ring.nvars()), b)
    }

    pub fn sub(&self, a: &FreeVector, b: &FreeVector) -> FreeVector {
        let neg = self.ring.field().neg(1);
        self.axpy(a, neg, &Monomial::one(self.ring.nvars()), b)
    }

    pub fn scale(&self, v: &FreeVector, c: u32) -> FreeVector {
        let fld = self.ring.field();
        let c = c % fld.characteristic();
        if c == 0 {
            return FreeVector::zero();
        }
        FreeVector {
            terms: v
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    pos: t.pos,
                    coeff: fld.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, v: &FreeVector, m: &Monomial, c: u32) -> FreeVector {
        let fld = self.ring.field();
        let c = c % fld.characteristic();
        if c == 0 {
            return FreeVector::zero();
        }
        FreeVector {
            terms: v
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.mul(m),
                    pos: t.pos,
                    coeff: fld.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, v: &FreeVector, f: &Polynomial) -> FreeVector {
        let mut acc = FreeVector::zero();
        for (m, c) in f.terms() {
            acc = self.axpy(&acc, *c, m, v);
        }
        acc
    }

    /// `a + c*m*b` by merging sorted term lists.
    pub fn axpy(&self, a: &FreeVector, c: u32, m: &Monomial, b: &FreeVector) -> FreeVector {
        let fld = self.ring.field();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut bi = b.terms.iter().map(|t| Term {
            mon: t.mon.mul(m),
            pos: t.pos,
            coeff: fld.mul(t.coeff, c),
        });
        let mut cur = bi.next();
        while let Some(bt) = cur.take() {
            if i >= a.terms.len() {
                if bt.coeff != 0 {
                    out.push(bt);
                }
                out.extend(bi.by_ref().filter(|t| t.coeff != 0));
                break;
            }
            let at = &a.terms[i];
            match self.cmp_terms(&at.mon, at.pos, &bt.mon, bt.pos) {
                Ordering::Greater => {
                    out.push(at.clone());
                    i += 1;
                    cur = Some(bt);
                }
                Ordering::Less => {
                    if bt.coeff != 0 {
                        out.push(bt);
                    }
                    cur = bi.next();
                }
                Ordering::Equal => {
                    let s = fld.add(at.coeff, bt.coeff);
                    if s != 0 {
                        out.push(Term {
                            mon: bt.mon,
                            pos: bt.pos,
                            coeff: s,
                        });
                    }
                    i += 1;
                    cur = bi.next();
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        FreeVector { terms: out }
    }

    pub fn make_monic(&self, v: &FreeVector) -> FreeVector {
        match v.lead() {
            None => FreeVector::zero(),
            Some(t) => self.scale(v, self.ring.field().inv(t.coeff)),
        }
    }

    /// Re-sorts `v` (whose terms may have been produced under another order).
    pub fn resort(&self, v: FreeVector) -> FreeVector {
        self.from_terms(v.terms)
    }

    pub fn fmt(&self, v: &FreeVector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let comps: Vec<String> = (0..self.module.rank())
            .map(|p| {
                let c = self.ring.from_terms(v.component(p).into_terms());
                self.ring.fmt(&c)
            })
            .collect();
        format!("({})", comps.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::PrimeField;

    fn setup() -> (PolyRing, GradedFreeModule) {
        let r = PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into()]);
        (r, GradedFreeModule::new(vec![0, 1]))
    }

    #[test]
    fn internal_degree_includes_shift() {
        let (r, f) = setup();
        let ctx = ModuleCtx::new(&r, &f);
        let (x, y) = (r.var(0), r.var(1));
        let xy = r.mul(&x, &y);
        // (x*y, x): degrees 2 and 1 + 1
        let v = ctx.from_polys(&[(0, &xy), (1, &x)]);
        assert_eq!(ctx.homogeneous_degree(&v), Some(2));
        let w = ctx.from_polys(&[(0, &x), (1, &x)]);
        assert_eq!(ctx.homogeneous_degree(&w), None);
        // ties at equal monomial broken by lower position first
        let e = ctx.from_polys(&[(1, &y), (0, &xy)]);
        assert_eq!(e.lead().unwrap().pos, 0);
    }

    #[test]
    fn axpy_cancels() {
        let (r, f) = setup();
        let ctx = ModuleCtx::new(&r, &f);
        let x = r.var(0);
        let v = ctx.from_polys(&[(0, &x)]);
        let neg = r.field().neg(1);
        let z = ctx.axpy(&v, neg, &Monomial::one(2), &v);
        assert!(z.is_zero());
        assert_eq!(ctx.fmt(&ctx.add(&v, &v)), "(2*x, 0)");
    }
}
