use std::sync::Arc;

use super::quotient::module_saturate;
use crate::error::{Error, Result};
use crate::groebner::{Budget, IdealBasis, ModuleBasis};
use crate::orders::MonomialOrder;
use crate::polyring::{PolyRing, Polynomial};

/// The homogenization of an ideal or submodule computed by saturation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogenizationResult<B> {
    /// The input ring extended by the homogenizing variable (appended last).
    pub ring: Arc<PolyRing>,
    /// Generated by the homogenized input generators.
    pub j: B,
    /// `J : x0^∞`, as a reduced Gröbner basis under the extended ring's order.
    pub ih: B,
    /// Quotient steps that changed the ideal during saturation.
    pub saturation_steps: usize,
}

/// Homogenizes `⟨G⟩` as `⟨g^h : g ∈ G⟩ : x0^∞`, with `x0` a new weight-1
/// variable named `x0_name` appended to the ring, which is then ordered by
/// `order`.
pub fn homogenize_ideal(
    gens: &IdealBasis,
    x0_name: &str,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<HomogenizationResult<IdealBasis>> {
    let h = homogenize_module(&gens.to_module(), x0_name, order, budget)?;
    Ok(HomogenizationResult {
        ring: h.ring,
        j: h.j.to_ideal()?,
        ih: h.ih.to_ideal()?,
        saturation_steps: h.saturation_steps,
    })
}

/// Submodule version of [`homogenize_ideal`], homogenizing generators with
/// [`VectorPoly::homogenize`](crate::polyring::VectorPoly::homogenize).
pub fn homogenize_module(
    gens: &ModuleBasis,
    x0_name: &str,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<HomogenizationResult<ModuleBasis>> {
    let ring = gens.ring().extend_homogenizing(x0_name, order.clone())?;
    let x0 = ring.nvars() - 1;
    let homogenized = gens
        .gens()
        .iter()
        .map(|g| g.to_ring(&ring)?.homogenize(x0))
        .collect::<Result<Vec<_>>>()?;
    let j = ModuleBasis::new(&ring, gens.rank(), homogenized)?;
    let sat = module_saturate(&j, &Polynomial::var(&ring, x0), budget)?;
    Ok(HomogenizationResult {
        ring,
        j,
        ih: sat.basis,
        saturation_steps: sat.steps,
    })
}

/// Generators of `H ∩ B` for a homogeneous ideal `H`: every weight-1
/// variable is set to zero in each generator and the result is read in the
/// subring of the weight-0 variables (ordered by degrevlex).
pub fn degree_zero_part(h: &IdealBasis) -> Result<IdealBasis> {
    degree_zero_part_module(&h.to_module())?.to_ideal()
}

/// `H ∩ B^ℓ` for a graded submodule `H ⊆ S^ℓ`.
pub fn degree_zero_part_module(h: &ModuleBasis) -> Result<ModuleBasis> {
    let ring = h.ring();
    let graded = ring.graded_vars();
    let base = ring.subring(&ring.base_vars(), MonomialOrder::DegRevLex)?;
    let mut out = Vec::with_capacity(h.len());
    for g in h.gens() {
        // the generator itself if it has degree 0, zero if it is homogeneous
        // of positive degree, and its degree-0 homogeneous part otherwise
        let zero_part = g.substitute_zero(&graded);
        if !zero_part.is_zero() {
            out.push(zero_part.to_ring(&base).map_err(|e| match e {
                Error::Usage(m) => Error::Usage(format!("degree-zero part outside the base ring: {m}")),
                other => other,
            })?);
        }
    }
    ModuleBasis::new(&base, h.rank(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::io::parse_polynomial;

    fn weighted(vars: &[&str], weights: Vec<u8>) -> Arc<PolyRing> {
        PolyRing::new(
            FieldSpec::Rationals,
            vars.iter().map(|s| s.to_string()).collect(),
            weights,
            None,
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap()).collect()).unwrap()
    }

    fn strings(i: &IdealBasis) -> Vec<String> {
        i.gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn degree_zero_examples() {
        let s = weighted(&["b1", "b2", "b3", "t", "s"], vec![0, 0, 0, 1, 1]);
        let h = ideal(&s, &["b1*s - t", "b1*b2 - b3", "b1^2 - b2"]);
        assert_eq!(strings(&degree_zero_part(&h).unwrap()), ["b1*b2 - b3", "b1^2 - b2"]);

        let r = weighted(&["x1", "x2", "x0"], vec![1, 1, 1]);
        assert!(degree_zero_part(&ideal(&r, &["x0*x2", "x1^2"])).unwrap().is_empty());
        let five = degree_zero_part(&ideal(&r, &["5"])).unwrap();
        assert_eq!(strings(&five), ["5"]);
        assert!(five.ring().vars().is_empty());
    }

    #[test]
    fn non_homogeneous_generators_use_their_degree_zero_part() {
        let s = weighted(&["b", "x"], vec![0, 1]);
        let h = ideal(&s, &["x + b^2 - 1"]);
        assert_eq!(strings(&degree_zero_part(&h).unwrap()), ["b^2 - 1"]);
    }

    #[test]
    fn homogenize_rejects_existing_name() {
        let r = weighted(&["x", "x0"], vec![1, 1]);
        let i = ideal(&r, &["x"]);
        assert!(homogenize_ideal(&i, "x0", &MonomialOrder::DegRevLex, &Budget::default()).is_err());
    }

    #[test]
    fn empty_generators() {
        let r = weighted(&["x"], vec![1]);
        let h = homogenize_ideal(&IdealBasis::zero(&r), "x0", &MonomialOrder::DegRevLex, &Budget::default()).unwrap();
        assert!(h.ih.is_empty());
        assert_eq!(h.saturation_steps, 0);
    }
}
