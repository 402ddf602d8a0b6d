#![allow(dead_code)]

use std::sync::Arc;

use syzrate_core::arith::{PolyRing, PrimeField};
use syzrate_core::resolution::RingPresentation;
use syzrate_core::session::parse_polynomial;

pub fn ring(vars: &[&str], ideal: &[&str]) -> Arc<RingPresentation> {
    let r = Arc::new(PolyRing::new(
        PrimeField::default(),
        vars.iter().map(|s| s.to_string()).collect(),
    ));
    let gens = ideal
        .iter()
        .map(|g| parse_polynomial(&r, g).unwrap())
        .collect();
    Arc::new(RingPresentation::new(r, gens).unwrap())
}

/// The eight test rings with their largest generator degree `m(I)`.
pub fn corpus() -> Vec<(Arc<RingPresentation>, i64)> {
    let cases: [(&[&str], &[&str], i64); 8] = [
        (&["x"], &["x^3"], 3),
        (&["x"], &["x^4"], 4),
        (&["x", "y"], &["x^2"], 2),
        (&["x", "y"], &["x^3"], 3),
        (&["x", "y"], &["x^2", "x*y"], 2),
        (&["x", "y"], &["x^2", "y^3"], 3),
        (&["x", "y", "z"], &["x^2 + y*z"], 2),
        (&["x", "y"], &["x*y"], 2),
    ];
    cases.iter().map(|(v, i, m)| (ring(v, i), *m)).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
