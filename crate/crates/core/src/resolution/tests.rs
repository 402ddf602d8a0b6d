use std::sync::Arc;

use super::*;
use crate::arith::{PolyRing, PrimeField};
use crate::session::parse_polynomial;

fn ring(names: &[&str], ideal: &[&str]) -> Arc<RingPresentation> {
    let r = Arc::new(PolyRing::new(
        PrimeField::default(),
        names.iter().map(|s| s.to_string()).collect(),
    ));
    let gens = ideal
        .iter()
        .map(|s| parse_polynomial(&r, s).unwrap())
        .collect();
    Arc::new(RingPresentation::new(r, gens).unwrap())
}

fn fin(v: &[i64]) -> Vec<TValue> {
    v.iter().map(|&x| Extended::Finite(x)).collect()
}

fn residue(r: &Arc<RingPresentation>, n: usize) -> (ResolutionSlice, BettiTable) {
    let k = ModulePresentation::residue_field(r.clone());
    resolve_minimal(&k, Cutoffs::with_default_degree(r, n)).unwrap()
}

#[test]
fn koszul_complex_on_two_variables() {
    let r = ring(&["x", "y"], &[]);
    let (slice, b) = residue(&r, 2);
    assert_eq!((b.total(0), b.total(1), b.total(2)), (1, 2, 1));
    assert_eq!(b.t_values(), fin(&[0, 1, 2]));
    assert_eq!(b.regularity_truncated(), Extended::Finite(0));
    assert_eq!(
        b.rate_truncated(),
        Extended::Finite(Rational::from_integer(1))
    );
    assert!(!b.is_truncated());
    assert!(slice.is_minimal());
    assert!(slice.composes_to_zero().unwrap());
}

#[test]
fn dual_numbers_are_periodic() {
    let r = ring(&["x"], &["x^2"]);
    let (slice, b) = residue(&r, 5);
    assert_eq!(b.t_values(), fin(&[0, 1, 2, 3, 4, 5]));
    assert!((0..=5).all(|i| b.total(i) == 1));
    assert!(slice.composes_to_zero().unwrap());
    let rat = rat_of_ring(&r, Cutoffs::with_default_degree(&r, 5)).unwrap();
    assert_eq!(rat.value, Extended::Finite(Rational::from_integer(1)));
}

#[test]
fn cubic_hypersurface_residue_field() {
    let r = ring(&["x"], &["x^3"]);
    let (slice, b) = residue(&r, 5);
    assert_eq!(b.t_values(), fin(&[0, 1, 3, 4, 6, 7]));
    assert_eq!(b.regularity_truncated(), Extended::Finite(2));
    assert_eq!(b.rate_truncated(), Extended::Finite(Rational::new(3, 2)));
    assert!(slice.is_minimal());
    let rat = rat_of_ring(&r, Cutoffs::with_default_degree(&r, 5)).unwrap();
    assert_eq!(rat.value, Extended::Finite(Rational::from_integer(2)));
    assert!(!rat.lower_bound);
}

#[test]
fn free_module_has_no_syzygies() {
    let r = ring(&["x", "y"], &["x*y"]);
    let f = ModulePresentation::free(r.clone(), vec![3]);
    let (_, b) = resolve_minimal(&f, Cutoffs::new(3, 10)).unwrap();
    assert_eq!(b.regularity_truncated(), Extended::Finite(3));
    assert_eq!(b.rate_truncated(), Extended::NegInf);
    assert_eq!(b.t(1), Extended::NegInf);
    assert!(!b.is_truncated());
}

#[test]
fn low_degree_cutoff_flags_columns() {
    let r = ring(&["x"], &["x^3"]);
    let k = ModulePresentation::residue_field(r);
    let (_, b) = resolve_minimal(&k, Cutoffs::new(4, 3)).unwrap();
    assert_eq!(b.t(2), Extended::Finite(3));
    assert!(b.is_column_truncated(3));
    assert!(!b.is_column_truncated(0));
}

#[test]
fn degree_cutoff_below_generators_is_rejected() {
    let r = ring(&["x"], &[]);
    let f = ModulePresentation::free(r, vec![4]);
    assert!(matches!(
        resolve_minimal(&f, Cutoffs::new(2, 3)),
        Err(crate::Error::Usage(_))
    ));
}

#[test]
fn twisted_module_shifts_degrees() {
    let r = ring(&["x", "y"], &[]);
    let k = ModulePresentation::residue_field(r).twisted(-2);
    let (slice, b) = resolve_minimal(&k, Cutoffs::new(2, 10)).unwrap();
    assert_eq!(b.t_values(), fin(&[2, 3, 4]));
    assert_eq!(slice.degrees(1), vec![3, 3]);
}

#[test]
fn power_ideal_matches_maximal_ideal_shift() {
    let r = ring(&["x", "y"], &["x^2", "y^3"]);
    let m1 = ModulePresentation::power_of_maximal_ideal(r.clone(), 1, 30).unwrap();
    let (_, bm) = resolve_minimal(&m1, Cutoffs::new(4, 16)).unwrap();
    let (_, bk) = residue(&r, 5);
    for i in 0..=4 {
        assert_eq!(bk.t(i + 1), bm.t(i).map(|t| t + 1), "index {i}");
    }
}
