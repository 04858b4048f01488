//! Polynomial rings, sparse polynomials and free-module vectors.
//!
//! A [`PolyRing`] fixes the coefficient field, the variable names, a grading
//! weight for each variable and the monomial order its polynomials are sorted
//! by. Weight-0 variables span the base ring `B`; weight-1 variables are the
//! ones homogenization and elimination act on.

mod monomial;
mod poly;
mod vector;

use std::fmt;
use std::sync::Arc;

pub use monomial::{Monomial, MonomialDisplay, MAX_EXPONENT};
pub use poly::{Degree, Polynomial, Term};
pub use vector::VectorPoly;

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::orders::MonomialOrder;

/// Field, variables, grading and term order of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    weights: Vec<u8>,
    homog_var: Option<usize>,
    order: MonomialOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(
        field: FieldSpec,
        vars: Vec<String>,
        weights: Vec<u8>,
        homog_var: Option<usize>,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::usage(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::usage(format!("duplicate variable `{v}`")));
            }
        }
        if weights.len() != vars.len() {
            return Err(Error::usage("one grading weight per variable is required"));
        }
        if let Some(w) = weights.iter().find(|&&w| w > 1) {
            return Err(Error::usage(format!("grading weight {w} is not 0 or 1")));
        }
        if let Some(h) = homog_var {
            if weights.get(h) != Some(&1) {
                return Err(Error::usage("the homogenizing variable must exist and have weight 1"));
            }
        }
        order.validate(vars.len())?;
        Ok(Arc::new(PolyRing {
            field,
            vars,
            weights,
            homog_var,
            order,
        }))
    }

    /// All variables of weight 1, ordered by degrevlex.
    pub fn standard<S: AsRef<str>>(field: FieldSpec, vars: &[S]) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let n = vars.len();
        Self::new(field, vars, vec![1; n], None, MonomialOrder::DegRevLex)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn homog_var(&self) -> Option<usize> {
        self.homog_var
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Indices of the weight-0 (base ring) variables.
    pub fn base_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.weights[i] == 0).collect()
    }

    /// Indices of the weight-1 variables.
    pub fn graded_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.weights[i] == 1).collect()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        Self::new(self.field, self.vars.clone(), self.weights.clone(), self.homog_var, order)
    }

    pub fn with_weights(&self, weights: Vec<u8>) -> Result<Arc<PolyRing>> {
        Self::new(self.field, self.vars.clone(), weights, self.homog_var, self.order.clone())
    }

    /// Appends a fresh weight-1 variable `name` and designates it as the
    /// homogenizing variable. The order of the new ring is `order`.
    pub fn extend_homogenizing(&self, name: &str, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if self.var_index(name).is_some() {
            return Err(Error::usage(format!("variable `{name}` already exists")));
        }
        let mut vars = self.vars.clone();
        vars.push(name.to_string());
        let mut weights = self.weights.clone();
        weights.push(1);
        let h = vars.len() - 1;
        Self::new(self.field, vars, weights, Some(h), order)
    }

    /// The ring on the listed variables only, in the given sequence.
    pub fn subring(&self, keep: &[usize], order: MonomialOrder) -> Result<Arc<PolyRing>> {
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let weights = keep.iter().map(|&i| self.weights[i]).collect();
        let homog = self.homog_var.and_then(|h| keep.iter().position(|&i| i == h));
        Self::new(self.field, vars, weights, homog, order)
    }

    /// A variable name not yet used in this ring, preferring `preferred`.
    pub fn fresh_name(&self, preferred: &str) -> String {
        let mut name = preferred.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }

    /// For every variable of `self`, its index in `target` (matched by name).
    pub fn embedding(&self, target: &PolyRing) -> Vec<Option<usize>> {
        self.vars.iter().map(|v| target.var_index(v)).collect()
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.vars.join(","), self.order)
    }
}

/// True when both handles denote the same ring.
pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
