use super::GroebnerBasis;
use crate::arith::{monomials_of_degree, Monomial};

/// Standard monomials of internal degree `degree`: terms `m*e_k` of the free
/// module not divisible by any leading term of `gb`. Ordered by position, then
/// lexicographically descending. Only meaningful up to the basis' degree cap.
pub fn standard_monomials(gb: &GroebnerBasis, degree: i64) -> Vec<(Monomial, usize)> {
    let n = gb.ring().nvars();
    let mut out = Vec::new();
    for (pos, &shift) in gb.module().shifts().iter().enumerate() {
        let d = degree - shift;
        if d < 0 {
            continue;
        }
        for m in monomials_of_degree(n, d as u32) {
            if !gb.lead_divides(&m, pos) {
                out.push((m, pos));
            }
        }
    }
    out
}
