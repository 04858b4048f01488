use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::homogenize::{degree_zero_part_module, homogenize_module};
use crate::error::{Error, Result};
use crate::groebner::{module_groebner_basis, Budget, IdealBasis, ModuleBasis};
use crate::orders::{ModuleOrder, MonomialOrder};
use crate::polyring::{PolyRing, VectorPoly};

/// Generators of an ideal or submodule of `B[x₁, …, x_n]^ℓ` together with the
/// variables `x₁, …, x_n` to eliminate.
///
/// The ring of a problem carries weight 1 on the elimination variables and
/// weight 0 on the base variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationProblem {
    gens: ModuleBasis,
    elim: Vec<usize>,
}

impl EliminationProblem {
    /// Eliminates the variables named in `elim` from the ideal generated by
    /// `gens`. The ring is reweighted; its order is kept.
    pub fn ideal<S: AsRef<str>>(gens: &IdealBasis, elim: &[S]) -> Result<Self> {
        Self::module(&gens.to_module(), elim)
    }

    pub fn module<S: AsRef<str>>(gens: &ModuleBasis, elim: &[S]) -> Result<Self> {
        let ring = gens.ring();
        if ring.homog_var().is_some() {
            return Err(Error::usage("elimination problems must not carry a homogenizing variable"));
        }
        let mut weights = vec![0u8; ring.nvars()];
        let mut idx = Vec::with_capacity(elim.len());
        for name in elim {
            let name = name.as_ref();
            let i = ring
                .var_index(name)
                .ok_or_else(|| Error::usage(format!("unknown elimination variable `{name}`")))?;
            if weights[i] == 1 {
                return Err(Error::usage(format!("elimination variable `{name}` listed twice")));
            }
            weights[i] = 1;
            idx.push(i);
        }
        idx.sort_unstable();
        let ring = ring.with_weights(weights)?;
        Ok(EliminationProblem {
            gens: gens.to_ring(&ring)?,
            elim: idx,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.gens.ring()
    }

    pub fn gens(&self) -> &ModuleBasis {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.rank()
    }

    /// Indices of the variables to eliminate, ascending.
    pub fn elim_vars(&self) -> &[usize] {
        &self.elim
    }

    pub fn base_vars(&self) -> Vec<usize> {
        self.ring().base_vars()
    }

    /// The ring of the answer: the base variables under degrevlex.
    pub fn base_ring(&self) -> Result<Arc<PolyRing>> {
        self.ring().subring(&self.base_vars(), MonomialOrder::DegRevLex)
    }
}

/// Settings of the saturation route.
#[derive(Clone, Debug)]
pub struct EliminationOptions {
    /// Order used for every Gröbner basis of the saturation route. The
    /// homogenizing variable is appended last.
    pub order: MonomialOrder,
    /// Name of the homogenizing variable; a fresh `x0` by default.
    pub homog_var: Option<String>,
    pub budget: Budget,
}

impl Default for EliminationOptions {
    fn default() -> Self {
        EliminationOptions {
            order: MonomialOrder::DegRevLex,
            homog_var: None,
            budget: Budget::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Saturation,
    Block,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Saturation => "saturation",
            Method::Block => "block",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "saturation" => Ok(Method::Saturation),
            "block" => Ok(Method::Block),
            _ => Err(Error::usage(format!("unknown method `{s}` (expected saturation or block)"))),
        }
    }
}

/// The eliminated submodule and some figures about how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOutcome {
    /// Reduced Gröbner basis of `I ∩ B` (or `M ∩ B^ℓ`) under degrevlex on the
    /// base variables.
    pub basis: ModuleBasis,
    /// Quotient steps that changed the ideal (always 0 for the block route).
    pub saturation_steps: usize,
    /// Size of the main Gröbner basis: `I^h` or the block-order basis.
    pub gb_size: usize,
    /// Largest total degree among the elements of that basis.
    pub max_degree: u32,
}

impl EliminationOutcome {
    /// The answer as an ideal; fails for rank > 1.
    pub fn ideal(&self) -> Result<IdealBasis> {
        self.basis.to_ideal()
    }
}

pub fn eliminate(problem: &EliminationProblem, method: Method, options: &EliminationOptions) -> Result<EliminationOutcome> {
    match method {
        Method::Saturation => eliminate_saturation(problem, options),
        Method::Block => eliminate_block(problem, &options.budget),
    }
}

/// Eliminates by homogenizing with a new variable `x0`, saturating by it and
/// keeping the degree-zero part. No elimination order is involved.
pub fn eliminate_saturation(problem: &EliminationProblem, options: &EliminationOptions) -> Result<EliminationOutcome> {
    let ring = problem.ring().with_order(options.order.clone())?;
    let gens = problem.gens().to_ring(&ring)?;
    let x0 = match &options.homog_var {
        Some(name) => name.clone(),
        None => ring.fresh_name("x0"),
    };
    let h = homogenize_module(&gens, &x0, &options.order, &options.budget)?;
    let zero_part = degree_zero_part_module(&h.ih)?;
    let basis = canonical(&zero_part, &options.budget)?;
    Ok(EliminationOutcome {
        basis,
        saturation_steps: h.saturation_steps,
        gb_size: h.ih.len(),
        max_degree: max_degree(h.ih.gens()),
    })
}

/// Eliminates through one reduced Gröbner basis under the block order with
/// the elimination variables first (degrevlex inside both blocks).
pub fn eliminate_block(problem: &EliminationProblem, budget: &Budget) -> Result<EliminationOutcome> {
    let ring = problem.ring();
    let mut perm = problem.elim_vars().to_vec();
    perm.extend(problem.base_vars());
    let order = MonomialOrder::elimination(problem.elim_vars().len());
    let block_ring = ring.subring(&perm, order.clone())?;
    let gens = problem.gens().to_ring(&block_ring)?;
    let gb = module_groebner_basis(&gens, &ModuleOrder::top(order), budget)?;
    let n = problem.elim_vars().len();
    let kept: Vec<VectorPoly> = gb
        .gens()
        .iter()
        .filter(|g| g.comps().iter().all(|c| (0..n).all(|v| !c.involves(v))))
        .cloned()
        .collect();
    let base = problem.base_ring()?;
    let kept = kept.iter().map(|g| g.to_ring(&base)).collect::<Result<Vec<_>>>()?;
    let basis = canonical(&ModuleBasis::new(&base, problem.rank(), kept)?, budget)?;
    Ok(EliminationOutcome {
        basis,
        saturation_steps: 0,
        gb_size: gb.len(),
        max_degree: max_degree(gb.gens()),
    })
}

fn canonical(m: &ModuleBasis, budget: &Budget) -> Result<ModuleBasis> {
    module_groebner_basis(m, &ModuleOrder::top(MonomialOrder::DegRevLex), budget)
}

fn max_degree(gens: &[VectorPoly]) -> u32 {
    gens.iter()
        .flat_map(|g| g.comps().iter())
        .filter_map(|c| c.total_degree().finite())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::io::parse_polynomial;

    fn problem(field: FieldSpec, vars: &[&str], elim: &[&str], gens: &[&str]) -> EliminationProblem {
        let r = PolyRing::standard(field, vars).unwrap();
        let gens = gens.iter().map(|g| parse_polynomial(g, &r).unwrap()).collect();
        EliminationProblem::ideal(&IdealBasis::new(&r, gens).unwrap(), elim).unwrap()
    }

    fn strings(m: &ModuleBasis) -> Vec<String> {
        m.to_ideal().unwrap().gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn twisted_cubic_both_routes() {
        let p = problem(
            FieldSpec::Rationals,
            &["b1", "b2", "b3", "t"],
            &["t"],
            &["b1 - t", "b2 - t^2", "b3 - t^3"],
        );
        let expected = ["b1^2 - b2", "b1*b2 - b3", "b2^2 - b1*b3"];
        let sat = eliminate_saturation(&p, &EliminationOptions::default()).unwrap();
        assert_eq!(strings(&sat.basis), expected);
        assert!(sat.saturation_steps > 0);
        assert!(sat.gb_size >= 3);
        let block = eliminate_block(&p, &Budget::default()).unwrap();
        assert_eq!(strings(&block.basis), expected);
        assert_eq!(block.saturation_steps, 0);
    }

    #[test]
    fn circle_and_line() {
        // Res_y(x^2 + y^2 - 1, y - x) = 2x^2 - 1
        for field in [FieldSpec::Rationals, FieldSpec::prime(32003).unwrap()] {
            let p = problem(field, &["x", "y"], &["y"], &["x^2 + y^2 - 1", "y - x"]);
            for m in [Method::Saturation, Method::Block] {
                let out = eliminate(&p, m, &EliminationOptions::default()).unwrap();
                let base = out.basis.ring().clone();
                let expected = parse_polynomial("2x^2 - 1", &base).unwrap().monic();
                assert_eq!(out.ideal().unwrap().gens(), [expected]);
            }
        }
    }

    #[test]
    fn unit_and_zero_ideals() {
        let p = problem(FieldSpec::Rationals, &["x", "y"], &["y"], &["x*y - 1", "y"]);
        for m in [Method::Saturation, Method::Block] {
            assert_eq!(strings(&eliminate(&p, m, &EliminationOptions::default()).unwrap().basis), ["1"]);
        }
        let p = problem(FieldSpec::Rationals, &["x", "y"], &["y"], &[]);
        for m in [Method::Saturation, Method::Block] {
            assert!(eliminate(&p, m, &EliminationOptions::default()).unwrap().basis.is_empty());
        }
    }

    #[test]
    fn homogenizing_name_is_fresh() {
        let p = problem(FieldSpec::Rationals, &["x0", "y"], &["y"], &["y - x0", "y^2"]);
        let out = eliminate_saturation(&p, &EliminationOptions::default()).unwrap();
        assert_eq!(strings(&out.basis), ["x0^2"]);
    }

    #[test]
    fn bad_problems() {
        let r = PolyRing::standard(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let i = IdealBasis::zero(&r);
        assert!(EliminationProblem::ideal(&i, &["z"]).is_err());
        assert!(EliminationProblem::ideal(&i, &["y", "y"]).is_err());
        assert!("gauss".parse::<Method>().is_err());
    }

    #[test]
    fn other_orders_for_the_saturation_route() {
        let p = problem(
            FieldSpec::Rationals,
            &["b1", "b2", "b3", "t"],
            &["t"],
            &["b1 - t", "b2 - t^2", "b3 - t^3"],
        );
        let reference = eliminate_block(&p, &Budget::default()).unwrap().basis;
        for order in [MonomialOrder::Lex, MonomialOrder::DegLex] {
            let opts = EliminationOptions {
                order,
                ..Default::default()
            };
            assert_eq!(eliminate_saturation(&p, &opts).unwrap().basis, reference);
        }
    }
}
