use crate::error::{Error, Result};
use crate::resolution::{ceil_div, ceil_ratio, Extended, RateValue, Rational, TValue};

/// An ordered sequence of positive parts summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// All `2^(n-1)` compositions of `n >= 1` with positive parts, in
    /// lexicographic order of their binary cut patterns; `n = 0` yields the
    /// empty composition.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        (0u64..1 << (n - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut run = 1;
                for k in 0..n - 1 {
                    if cuts >> k & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition(parts)
            })
            .collect()
    }
}

/// `max_{0<=i<=n} t_{n-i}(L_i)` for a complex whose `i`-th term has t-values
/// `t_matrix[i]`; missing entries count as minus infinity.
pub fn complex_degree_bound(t_matrix: &[Vec<TValue>], n: usize) -> TValue {
    (0..=n)
        .map(|i| {
            t_matrix
                .get(i)
                .and_then(|col| col.get(n - i).copied())
                .unwrap_or(Extended::NegInf)
        })
        .max()
        .unwrap_or(Extended::NegInf)
}

/// `max Σ_j ⌈t_{α_j}/c⌉` over compositions `α` of `n`, where `t` lists the
/// t-values of `m(1)` starting at index 0.
pub fn versyz_rhs(n: usize, c: i64, t: &[TValue]) -> Result<i64> {
    if c < 1 {
        return Err(Error::usage("Veronese level must be at least 1"));
    }
    if t.len() <= n {
        return Err(Error::usage(format!("t-values needed through index {n}")));
    }
    if t[0] != Extended::Finite(0) {
        return Err(Error::usage("the sequence must start with t_0 = 0"));
    }
    let ceil: Vec<Option<i64>> = t
        .iter()
        .map(|v| v.finite().map(|x| ceil_div(x, c)))
        .collect();
    let mut best: Option<i64> = None;
    for comp in Composition::all(n) {
        let mut sum = 0;
        for &a in comp.parts() {
            sum += ceil[a].ok_or(Error::NegInfCeiling)?;
        }
        best = Some(best.map_or(sum, |b| b.max(sum)));
    }
    Ok(best.unwrap_or(0))
}

/// `⌈max{rate, rat}/c⌉ + max{0, ⌈t0/c⌉}`.
pub fn mainthm_rhs(rate: RateValue, rat: RateValue, t0: TValue, c: i64) -> Result<Rational> {
    let top = rate.max(rat).finite().ok_or(Error::NegInfCeiling)?;
    let tail = t0.finite().map_or(0, |t| ceil_div(t, c).max(0));
    Ok(Rational::from_integer(ceil_ratio(top / c) + tail))
}

/// `⌈rat/c⌉`.
pub fn backelin_rhs(rat: RateValue, c: i64) -> Result<i64> {
    let r = rat.finite().ok_or(Error::NegInfCeiling)?;
    Ok(ceil_ratio(r / c))
}

/// `max{⌈rate/c⌉, 1}`; minus infinity inside the maximum is harmless.
pub fn aramova_rhs(rate: RateValue, c: i64) -> i64 {
    rate.finite().map_or(1, |r| ceil_ratio(r / c).max(1))
}

/// `max{rate_S(M), rate_S(R)} + max{0, t0}`.
pub fn surjection_rate_rhs(rate_s_m: RateValue, rate_s_r: RateValue, t0: TValue) -> RateValue {
    let tail = t0.finite().map_or(0, |t| t.max(0));
    rate_s_m.max(rate_s_r).map(|r| r + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fin(v: &[i64]) -> Vec<TValue> {
        v.iter().map(|&x| Extended::Finite(x)).collect()
    }

    fn q(a: i64, b: i64) -> RateValue {
        Extended::Finite(Rational::new(a, b))
    }

    #[test]
    fn compositions_are_complete() {
        let parts: Vec<Vec<usize>> = Composition::all(3)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(parts.len(), 4);
        for want in [vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]] {
            assert!(parts.contains(&want));
        }
        assert!(Composition::all(6).iter().all(|c| c.total() == 6));
    }

    #[test]
    fn versyz_examples() {
        assert_eq!(versyz_rhs(1, 2, &fin(&[0, 3])).unwrap(), 2);
        assert_eq!(versyz_rhs(2, 2, &fin(&[0, 1, 3])).unwrap(), 2);
        assert_eq!(versyz_rhs(3, 2, &fin(&[0, 1, 3, 4])).unwrap(), 3);
        assert_eq!(versyz_rhs(0, 2, &fin(&[0])).unwrap(), 0);
        let t = vec![Extended::Finite(0), Extended::Finite(1), Extended::NegInf];
        assert_eq!(versyz_rhs(2, 2, &t), Err(Error::NegInfCeiling));
    }

    #[test]
    fn closed_forms() {
        let one = q(1, 1);
        assert_eq!(
            mainthm_rhs(q(3, 2), q(2, 1), Extended::Finite(0), 2).unwrap(),
            Rational::from_integer(1)
        );
        assert_eq!(
            mainthm_rhs(one, one, Extended::Finite(3), 2).unwrap(),
            Rational::from_integer(3)
        );
        assert_eq!(
            mainthm_rhs(q(5, 2), one, Extended::Finite(0), 1).unwrap(),
            Rational::from_integer(3)
        );
        assert_eq!(
            mainthm_rhs(Extended::NegInf, Extended::NegInf, Extended::Finite(0), 1),
            Err(Error::NegInfCeiling)
        );
        assert_eq!(backelin_rhs(q(2, 1), 2).unwrap(), 1);
        assert_eq!(backelin_rhs(q(3, 1), 2).unwrap(), 2);
        for c in 1..6 {
            assert_eq!(backelin_rhs(one, c).unwrap(), 1);
        }
        assert_eq!(surjection_rate_rhs(one, one, Extended::Finite(0)), one);
        assert_eq!(
            surjection_rate_rhs(q(3, 2), q(2, 1), Extended::Finite(0)),
            q(2, 1)
        );
        assert_eq!(surjection_rate_rhs(one, one, Extended::Finite(2)), q(3, 1));
        assert_eq!(aramova_rhs(Extended::NegInf, 2), 1);
        assert_eq!(aramova_rhs(q(5, 1), 2), 3);
    }

    #[test]
    fn complex_bound_examples() {
        let t = vec![fin(&[0, 1]), fin(&[1]), fin(&[1])];
        assert_eq!(complex_degree_bound(&t, 0), Extended::Finite(0));
        assert_eq!(complex_degree_bound(&t, 1), Extended::Finite(1));
        let free = vec![
            vec![Extended::Finite(0), Extended::NegInf],
            vec![Extended::Finite(2), Extended::NegInf],
        ];
        assert_eq!(complex_degree_bound(&free, 1), Extended::Finite(2));
    }

    fn tseq() -> impl Strategy<Value = Vec<i64>> {
        (1usize..6)
            .prop_flat_map(|n| proptest::collection::vec(0i64..12, n))
            .prop_map(|mut v| {
                v.insert(0, 0);
                v
            })
    }

    proptest! {
        #[test]
        fn versyz_monotone(t in tseq(), k in 0usize..8, c in 1i64..5) {
            let n = t.len() - 1;
            let base = versyz_rhs(n, c, &fin(&t)).unwrap();
            let idx = 1 + k % n;
            let mut bumped = t.clone();
            bumped[idx] += 1;
            prop_assert!(versyz_rhs(n, c, &fin(&bumped)).unwrap() >= base);
            prop_assert!(versyz_rhs(n, c + 1, &fin(&t)).unwrap() <= base);
        }

        #[test]
        fn mainthm_at_level_one(a in -20i64..40, b in 1i64..6, r in -20i64..40, t0 in -5i64..10) {
            let rate = q(a, b);
            let rat = q(r, 3);
            let got = mainthm_rhs(rate, rat, Extended::Finite(t0), 1).unwrap();
            let expected = ceil_ratio(rate.max(rat).finite().unwrap()) + t0.max(0);
            prop_assert_eq!(got, Rational::from_integer(expected));
        }
    }
}
