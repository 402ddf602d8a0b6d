use std::sync::Arc;

use crate::arith::{
    is_standard_graded_presentation, FreeVector, GradedFreeModule, ModuleCtx, Monomial, PolyRing,
    Polynomial, PrimeField,
};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_seeded, minimal_generators, standard_monomials, GroebnerBasis};

/// Degree cap for the Gröbner basis of a defining ideal. Rings whose basis
/// does not close below it are rejected.
pub const IDEAL_BASIS_CAP: i64 = 256;

/// A standard graded algebra `S/I` over a prime field.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    ideal: Vec<Polynomial>,
    basis: GroebnerBasis,
    basis_polys: Vec<Polynomial>,
}

impl RingPresentation {
    /// Validates the generators, reduces them to a minimal monic set and
    /// computes a complete Gröbner basis.
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        if !ring.order().is_standard() {
            return Err(Error::usage(
                "rings must carry the graded reverse lexicographic order",
            ));
        }
        let (ok, why) = is_standard_graded_presentation(&ring, &gens);
        if !ok {
            return Err(Error::usage(why.unwrap_or_default()));
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let module = GradedFreeModule::new(vec![0]);
        let ctx = ModuleCtx::new(&ring, &module);
        let vs: Vec<FreeVector> = gens.iter().map(|g| ctx.from_polys(&[(0, g)])).collect();
        let mg = minimal_generators(&ring, &module, &vs, &[], IDEAL_BASIS_CAP)?;
        if mg.truncated {
            return Err(Error::usage(format!(
                "Gröbner basis of the ideal does not close below degree {IDEAL_BASIS_CAP}"
            )));
        }
        let ideal: Vec<Polynomial> = mg
            .indices
            .iter()
            .map(|&k| ring.make_monic(&gens[k]))
            .collect();
        let basis = mg.basis;
        let basis_polys = basis.polynomials();
        Ok(RingPresentation {
            ring,
            ideal,
            basis,
            basis_polys,
        })
    }

    pub fn polynomial_ring(field: PrimeField, names: Vec<String>) -> Result<Self> {
        Self::new(Arc::new(PolyRing::new(field, names)), Vec::new())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Minimal monic generators of the defining ideal.
    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn ideal_basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// The Gröbner basis of the ideal as polynomials.
    pub fn ideal_basis_polys(&self) -> &[Polynomial] {
        &self.basis_polys
    }

    /// Largest degree of a minimal generator of the ideal; `None` for a
    /// polynomial ring.
    pub fn max_generator_degree(&self) -> Option<i64> {
        self.ideal
            .iter()
            .filter_map(|g| g.degree())
            .map(i64::from)
            .max()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.ideal.is_empty()
    }

    /// `F_p[x,y]/(…)` style description.
    pub fn describe(&self) -> String {
        let base = format!(
            "F_{}[{}]",
            self.ring.field().characteristic(),
            self.ring.names().join(",")
        );
        if self.ideal.is_empty() {
            base
        } else {
            let gens: Vec<String> = self.ideal.iter().map(|g| self.ring.fmt(g)).collect();
            format!("{base}/({})", gens.join(", "))
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.basis.normal_form_poly(f)
    }

    /// Monomials outside the initial ideal in degree `e`, lex-descending.
    pub fn k_basis(&self, e: i64) -> Vec<Monomial> {
        standard_monomials(&self.basis, e)
            .into_iter()
            .map(|(m, _)| m)
            .collect()
    }

    pub fn hilbert_function(&self, e: i64) -> usize {
        if e < 0 {
            0
        } else {
            self.k_basis(e).len()
        }
    }

    /// Standard monomials of `module / (quotient + I*module)` in internal
    /// degree `degree`.
    pub fn quotient_k_basis(
        &self,
        module: &GradedFreeModule,
        quotient: &[FreeVector],
        degree: i64,
    ) -> Result<Vec<(Monomial, usize)>> {
        let seeds = ideal_seeds(self, module);
        let run = buchberger_seeded(&self.ring, module, &seeds, quotient, degree)?;
        Ok(standard_monomials(&run.basis, degree))
    }
}

pub(crate) fn ideal_seeds(r: &RingPresentation, module: &GradedFreeModule) -> Vec<FreeVector> {
    let ctx = ModuleCtx::new(&r.ring, module);
    let mut out = Vec::new();
    for pos in 0..module.rank() {
        for g in &r.basis_polys {
            out.push(ctx.from_polys(&[(pos, g)]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ring(names: &[&str], ideal: &[&[(u32, &[u16])]]) -> RingPresentation {
        let r = Arc::new(PolyRing::new(
            PrimeField::default(),
            names.iter().map(|s| s.to_string()).collect(),
        ));
        let gens = ideal
            .iter()
            .map(|terms| {
                r.from_terms(
                    terms
                        .iter()
                        .map(|(c, e)| (Monomial::from_exponents(e), *c))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        RingPresentation::new(r, gens).unwrap()
    }

    #[test]
    fn k_basis_examples() {
        let s = ring(&["x", "y"], &[]);
        assert_eq!(s.k_basis(1).len(), 2);
        assert_eq!(s.k_basis(0).len(), 1);
        let r = ring(&["x", "y"], &[&[(1, &[2, 0])], &[(1, &[1, 1])]]);
        let b = r.k_basis(2);
        assert_eq!(b, vec![Monomial::from_exponents(&[0, 2])]);
        assert_eq!(r.max_generator_degree(), Some(2));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let r = ring(
            &["x", "y"],
            &[&[(1, &[2, 0])], &[(5, &[3, 0])], &[(1, &[2, 1])]],
        );
        assert_eq!(r.ideal().len(), 1);
        assert_eq!(r.max_generator_degree(), Some(2));
    }

    #[test]
    fn linear_generators_rejected() {
        let r = Arc::new(PolyRing::new(PrimeField::default(), vec!["x".into()]));
        let x = r.var(0);
        assert!(matches!(
            RingPresentation::new(r, vec![x]),
            Err(Error::Usage(_))
        ));
    }
}
