//! Resolutions checked degree by degree with plain linear algebra over F_p.

mod common;

use syzrate_core::arith::{FreeVector, GradedFreeModule, ModuleCtx, Monomial};
use syzrate_core::groebner::linalg::RowEchelon;
use syzrate_core::resolution::{
    resolve_minimal, Cutoffs, ModulePresentation, ResolutionSlice, RingPresentation,
};

/// Basis of `(F)_e`: standard monomials of degree `e - shift` on each generator.
fn graded_basis(r: &RingPresentation, f: &GradedFreeModule, e: i64) -> Vec<(Monomial, usize)> {
    let mut out = Vec::new();
    for (k, &s) in f.shifts().iter().enumerate() {
        for m in r.k_basis(e - s) {
            out.push((m, k));
        }
    }
    out
}

fn coordinates(
    r: &RingPresentation,
    v: &FreeVector,
    basis: &[(Monomial, usize)],
) -> Vec<(usize, u32)> {
    let mut row = Vec::new();
    for pos in v.positions() {
        let nf = r.normal_form(&v.component(pos)).unwrap();
        for (m, c) in nf.terms() {
            let col = basis
                .iter()
                .position(|(b, k)| *k == pos && b == m)
                .expect("normal form lies in the standard basis");
            row.push((col, *c));
        }
    }
    row.sort();
    row
}

/// Rank of `d_i` restricted to internal degree `e`.
fn rank(slice: &ResolutionSlice, i: usize, e: i64) -> usize {
    let r = slice.ring();
    let ring = r.ring();
    let source = slice.free_module(i);
    let target = slice.free_module(i - 1);
    let ctx = ModuleCtx::new(ring, target);
    let tb = graded_basis(r, target, e);
    let mut ech = RowEchelon::new(*ring.field());
    for (m, k) in graded_basis(r, source, e) {
        let img = ctx.mul_term(&slice.differential(i)[k], &m, 1);
        ech.insert(&coordinates(r, &img, &tb));
    }
    ech.rank()
}

fn assert_exact(m: &ModulePresentation, n: usize, d: i64) {
    let (slice, table) = resolve_minimal(m, Cutoffs::new(n, d)).unwrap();
    assert!(slice.is_minimal());
    assert!(slice.composes_to_zero().unwrap());
    let r = slice.ring().clone();
    let tw = slice.twist();
    for e in (tw - 1)..=(d + tw) {
        let f0 = graded_basis(&r, slice.free_module(0), e).len();
        let r1 = if slice.len() > 1 {
            rank(&slice, 1, e)
        } else {
            0
        };
        assert_eq!(
            f0 - r1,
            m.hilbert_function(e - tw).unwrap(),
            "{} in degree {e}",
            r.describe()
        );
        for i in 1..slice.len().saturating_sub(1) {
            if table.is_column_truncated(i + 1) {
                continue;
            }
            let dim = graded_basis(&r, slice.free_module(i), e).len();
            assert_eq!(
                dim - rank(&slice, i, e),
                rank(&slice, i + 1, e),
                "{} at F_{i}, degree {e}",
                r.describe()
            );
        }
    }
}

#[test]
fn residue_field_resolutions_are_exact() {
    for (r, _) in common::corpus() {
        assert_exact(&ModulePresentation::residue_field(r), 4, 6);
    }
}

#[test]
fn power_and_twisted_modules_are_exact() {
    for (r, _) in common::corpus().into_iter().take(6) {
        let p = ModulePresentation::power_of_maximal_ideal(r.clone(), 2, 12).unwrap();
        assert_exact(&p, 3, 6);
        assert_exact(&ModulePresentation::free(r, vec![2]).twisted(1), 2, 5);
    }
}

#[test]
fn cokernel_resolution_is_exact() {
    let r = common::ring(&["x", "y", "z"], &["x^2 + y*z"]);
    let ring = r.ring();
    let f = GradedFreeModule::new(vec![0, 1]);
    let ctx = ModuleCtx::new(ring, &f);
    let p = |s| syzrate_core::session::parse_polynomial(ring, s).unwrap();
    let rels = vec![
        ctx.from_polys(&[(0, &p("x"))]),
        ctx.from_polys(&[(0, &p("y^2")), (1, &p("z"))]),
    ];
    let m = ModulePresentation::new(r, vec![0, 1], rels, 0).unwrap();
    assert_exact(&m, 4, 6);
}
