use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 12]>;

/// Exponent vector with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops the first `k` variables. The caller guarantees their exponents are zero
    /// or wants them discarded.
    pub fn drop_prefix(&self, k: usize) -> Monomial {
        Monomial::from_exponents(&self.exps[k..])
    }

    /// Embeds into a larger variable set with `prefix` zero exponents in front.
    pub fn with_prefix(&self, prefix: usize) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, prefix);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Embeds into a larger variable set with `suffix` zero exponents appended.
    pub fn with_suffix(&self, suffix: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, suffix));
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, name) in self.exps.iter().zip(names) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Graded reverse lexicographic order, optionally with positive variable weights
/// and an elimination block.
///
/// Comparison is by weighted degree, then (for elimination orders) by the total
/// degree in the first `eliminate` variables, then reverse lexicographically.
/// Variable 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MonomialOrder {
    weights: Option<Arc<[u32]>>,
    eliminate: usize,
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder::default()
    }

    /// Order eliminating the first `eliminate` variables; `weights` has one entry
    /// per variable.
    pub fn elimination(eliminate: usize, weights: Vec<u32>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let weights = if weights.iter().all(|&w| w == 1) {
            None
        } else {
            Some(Arc::from(weights))
        };
        MonomialOrder { weights, eliminate }
    }

    pub fn eliminated(&self) -> usize {
        self.eliminate
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    /// Plain degrevlex with unit weights.
    pub fn is_standard(&self) -> bool {
        self.weights.is_none() && self.eliminate == 0
    }

    #[inline]
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        match &self.weights {
            None => m.deg,
            Some(w) => m
                .exps
                .iter()
                .zip(w.iter())
                .map(|(&e, &w)| e as u32 * w)
                .sum(),
        }
    }

    #[inline]
    pub fn elim_degree(&self, m: &Monomial) -> u32 {
        m.exps[..self.eliminate].iter().map(|&e| e as u32).sum()
    }

    pub fn name(&self) -> &'static str {
        if self.eliminate > 0 {
            "elimination"
        } else {
            "degrevlex"
        }
    }

    /// Checked comparison; mismatched exponent lengths are a usage error.
    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::usage(format!(
                "cannot compare monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weighted_degree(a)
            .cmp(&self.weighted_degree(b))
            .then_with(|| {
                if self.eliminate > 0 {
                    self.elim_degree(a).cmp(&self.elim_degree(b))
                } else {
                    Ordering::Equal
                }
            })
            .then_with(|| revlex(a, b))
    }
}

/// Reverse lexicographic tie break: the monomial with the smaller exponent in
/// the last differing variable is the larger one.
#[inline]
pub fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// All exponent vectors of total degree `deg` in `nvars` variables, in
/// lexicographic descending order (`x0^deg` first).
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u16; nvars];
    fill(&mut cur, 0, deg, &mut out);
    out
}

fn fill(cur: &mut [u16], i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = left as u16;
        out.push(Monomial::from_exponents(cur));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e as u16;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::degrevlex();
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[2, 0])), Ordering::Equal);
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[0, 2])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Less);
        // x*y > y^2 with x > y
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // x*z < y^2 in degrevlex on three variables
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn mismatched_lengths_are_usage_errors() {
        let o = MonomialOrder::degrevlex();
        assert!(o.try_cmp(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn elimination_order_puts_block_first() {
        // x weight 1, y weight 2; x^2 and y have the same weighted degree
        let o = MonomialOrder::elimination(1, vec![1, 2]);
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn monomial_enumeration_is_lex_descending() {
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(3, 0), vec![m(&[0, 0, 0])]);
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 0])), Some(m(&[1, 1])));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 3])));
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..5, 3).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn order_is_total_and_degree_refining(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let o = MonomialOrder::degrevlex();
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
            }
            if a.degree() < b.degree() {
                prop_assert_eq!(o.cmp(&a, &b), Ordering::Less);
            }
            if o.cmp(&a, &b) == Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
            // multiplicative
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), o.cmp(&a, &b));
        }
    }
}
