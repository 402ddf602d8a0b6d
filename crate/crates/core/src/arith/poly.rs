use std::cmp::Ordering;
use std::collections::HashMap;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Sparse polynomial: terms strictly descending in the ring's monomial order,
/// no zero coefficients. The empty term list is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree of the leading monomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(|m| m.degree())
    }

    /// Builds a polynomial from terms already sorted strictly descending with
    /// nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, u32)>) -> Self {
        Polynomial { terms }
    }
}

/// `K[x_0, ..., x_{n-1}]` with a fixed field and monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>) -> Self {
        Self::with_order(field, names, MonomialOrder::degrevlex())
    }

    pub fn with_order(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Self {
        if let Some(w) = order.weights() {
            assert_eq!(w.len(), names.len(), "one weight per variable");
        }
        PolyRing {
            field,
            names,
            order,
        }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> Polynomial {
        self.monomial(Monomial::one(self.nvars()), c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i), 1)
    }

    pub fn monomial(&self, m: Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    /// Sorts, merges duplicate monomials and drops zeros.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Polynomial {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let c = c % self.field.characteristic();
            let e = acc.entry(m).or_insert(0);
            *e = self.field.add(*e, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Polynomial { terms }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, g, 1)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, g, self.field.neg(1))
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), self.field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &g.terms {
            acc = self.add(&acc, &self.mul_term(f, m, *c));
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// `f + c*g`, merging the sorted term lists.
    fn combine(&self, f: &Polynomial, g: &Polynomial, c: u32) -> Polynomial {
        let fld = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let (a, b) = (&f.terms[i], &g.terms[j]);
            match self.order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), fld.mul(b.1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = fld.add(a.1, fld.mul(b.1, c));
                    if s != 0 {
                        out.push((a.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        out.extend(
            g.terms[j..]
                .iter()
                .map(|(m, b)| (m.clone(), fld.mul(*b, c))),
        );
        Polynomial { terms: out }
    }

    /// Weighted degree if `f` is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Option<u32> {
        let d = self.order.weighted_degree(f.leading_monomial()?);
        f.terms
            .iter()
            .all(|(m, _)| self.order.weighted_degree(m) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.homogeneous_degree(f).is_some()
    }

    /// Monic multiple of `f` (zero stays zero).
    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(f, self.field.inv(*c)),
        }
    }

    /// Checks that terms are strictly sorted with nonzero coefficients.
    pub fn check_invariants(&self, f: &Polynomial) -> Result<()> {
        for w in f.terms.windows(2) {
            if self.order.cmp(&w[0].0, &w[1].0) != Ordering::Greater {
                return Err(Error::invariant("polynomial terms not strictly descending"));
            }
        }
        if f.terms
            .iter()
            .any(|t| t.1 == 0 || t.1 >= self.field.characteristic())
        {
            return Err(Error::invariant("polynomial coefficient out of range"));
        }
        if f.terms.iter().any(|t| t.0.nvars() != self.nvars()) {
            return Err(Error::invariant("monomial arity does not match ring"));
        }
        Ok(())
    }

    pub fn fmt(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let sc = self.field.signed(*c);
            let (neg, abs) = (sc < 0, sc.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.fmt_with(&self.names);
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs == 1 {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

/// Diagnostic-carrying check that ideal generators define a standard graded
/// quotient: every generator homogeneous of degree at least two.
pub fn is_standard_graded_presentation(
    ring: &PolyRing,
    gens: &[Polynomial],
) -> (bool, Option<String>) {
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        match ring.homogeneous_degree(g) {
            None => {
                return (
                    false,
                    Some(format!(
                        "generator {k} ({}) is not homogeneous",
                        ring.fmt(g)
                    )),
                )
            }
            Some(d) if d < 2 => {
                return (
                    false,
                    Some(format!(
                        "generator {k} ({}) has degree {d}; degree at least 2 required",
                        ring.fmt(g)
                    )),
                )
            }
            _ => {}
        }
    }
    (true, None)
}
