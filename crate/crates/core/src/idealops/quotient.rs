use crate::error::{Error, Result};
use crate::groebner::{module_groebner_basis, tagged_kernel, Budget, IdealBasis, ModuleBasis};
use crate::orders::ModuleOrder;
use crate::polyring::{same_ring, Polynomial, VectorPoly};

/// Outcome of a saturation by iterated quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation<B> {
    /// Reduced Gröbner basis of the saturation under the ring's order.
    pub basis: B,
    /// Number of quotient steps that changed the ideal.
    pub steps: usize,
}

/// `I : f`, as the reduced Gröbner basis under the ring's order.
///
/// The first components of the syzygies of `[f, g₁, …, g_k]` generate the
/// quotient.
pub fn quotient(ideal: &IdealBasis, f: &Polynomial, budget: &Budget) -> Result<IdealBasis> {
    module_quotient(&ideal.to_module(), f, budget)?.to_ideal()
}

/// `M : f = {v ∈ R^ℓ : f·v ∈ M}`. These are the first ℓ entries of the
/// syzygies of `[f·e₁, …, f·e_ℓ, m₁, …, m_k]`; only those entries are
/// tracked, so the columns `(f·eⱼ | eⱼ)` and `(mᵢ | 0)` live in R^(2ℓ).
pub fn module_quotient(module: &ModuleBasis, f: &Polynomial, budget: &Budget) -> Result<ModuleBasis> {
    if f.is_zero() {
        return Err(Error::usage("quotient by the zero polynomial"));
    }
    let ring = module.ring();
    if !same_ring(f.ring(), ring) {
        return Err(Error::usage(format!("{f} does not belong to {ring}")));
    }
    let rank = module.rank();
    let top = ModuleOrder::top(ring.order().clone());
    let pot = ModuleOrder::pot(ring.order().clone());
    // Columns (mᵢ | 0) first: when the mᵢ are already a Gröbner basis under
    // position-over-term, their pairs need no reduction.
    let known = if module.is_reduced_gb(&pot) || (rank == 1 && module.is_reduced_gb(&top)) {
        module.len()
    } else {
        0
    };
    let mut heads: Vec<VectorPoly> = module.gens().to_vec();
    let mut tags: Vec<VectorPoly> = module.gens().iter().map(|_| VectorPoly::zero(ring, rank)).collect();
    for j in 0..rank {
        heads.push(VectorPoly::unit(ring, rank, j).scale_by(f)?);
        tags.push(VectorPoly::unit(ring, rank, j));
    }
    let kernel = tagged_kernel(&heads, &tags, known, budget)?;
    if rank == 1 {
        return Ok(ModuleBasis::certified(ring, rank, kernel, &top));
    }
    module_groebner_basis(&ModuleBasis::new(ring, rank, kernel)?, &top, budget)
}

/// `I : f^∞`, by iterating quotients until two consecutive reduced Gröbner
/// bases coincide.
pub fn saturate(ideal: &IdealBasis, f: &Polynomial, budget: &Budget) -> Result<Saturation<IdealBasis>> {
    let sat = module_saturate(&ideal.to_module(), f, budget)?;
    Ok(Saturation {
        basis: sat.basis.to_ideal()?,
        steps: sat.steps,
    })
}

pub fn module_saturate(module: &ModuleBasis, f: &Polynomial, budget: &Budget) -> Result<Saturation<ModuleBasis>> {
    if f.is_zero() {
        return Err(Error::usage("saturation by the zero polynomial"));
    }
    let order = ModuleOrder::top(module.ring().order().clone());
    let mut current = module_groebner_basis(module, &order, budget)?;
    let mut steps = 0;
    loop {
        let next = module_quotient(&current, f, budget)?;
        if next.gens() == current.gens() {
            return Ok(Saturation { basis: current, steps });
        }
        steps += 1;
        current = next;
    }
}
