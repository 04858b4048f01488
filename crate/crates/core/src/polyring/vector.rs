use std::fmt;
use std::sync::Arc;

use super::{same_ring, Degree, PolyRing, Polynomial};
use crate::error::{Error, Result};

/// An element of the free module R^ℓ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPoly {
    comps: Vec<Polynomial>,
}

impl VectorPoly {
    pub fn new(comps: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = comps.first() else {
            return Err(Error::usage("a vector needs at least one component"));
        };
        if comps.iter().any(|c| !same_ring(c.ring(), first.ring())) {
            return Err(Error::usage("vector components must share one ring"));
        }
        Ok(VectorPoly { comps })
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        assert!(rank > 0, "rank must be positive");
        VectorPoly {
            comps: vec![Polynomial::zero(ring); rank],
        }
    }

    /// The standard basis vector `e_i` of R^rank.
    pub fn unit(ring: &Arc<PolyRing>, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.comps[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.comps[0].ring()
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn try_add(&self, other: &VectorPoly) -> Result<VectorPoly> {
        if self.rank() != other.rank() {
            return Err(Error::usage("vectors of different rank"));
        }
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(VectorPoly { comps })
    }

    /// `f·self`.
    pub fn scale_by(&self, f: &Polynomial) -> Result<VectorPoly> {
        let comps = self.comps.iter().map(|c| f.try_mul(c)).collect::<Result<_>>()?;
        Ok(VectorPoly { comps })
    }

    /// `Σ coeffs[i]·vectors[i]`.
    pub fn combination(coeffs: &[Polynomial], vectors: &[VectorPoly]) -> Result<VectorPoly> {
        if coeffs.len() != vectors.len() || vectors.is_empty() {
            return Err(Error::usage("combination needs one coefficient per vector"));
        }
        let mut acc = VectorPoly::zero(vectors[0].ring(), vectors[0].rank());
        for (c, v) in coeffs.iter().zip(vectors) {
            acc = acc.try_add(&v.scale_by(c)?)?;
        }
        Ok(acc)
    }

    /// Largest weighted degree over the components.
    pub fn weighted_degree(&self) -> Degree {
        self.comps
            .iter()
            .map(Polynomial::weighted_degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Every nonzero component is homogeneous of one common weighted degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .comps
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| (c.is_homogeneous(), c.weighted_degree()));
        match degs.next() {
            None => true,
            Some((h, d)) => h && degs.all(|(h2, d2)| h2 && d2 == d),
        }
    }

    /// Vector homogenization: with `m` the largest component degree, component
    /// `j` becomes `x0^(m − deg f_j)·f_j^h`. Zero components stay zero.
    pub fn homogenize(&self, x0: usize) -> Result<VectorPoly> {
        let Degree::Finite(m) = self.weighted_degree() else {
            return Ok(self.clone());
        };
        let comps = self
            .comps
            .iter()
            .map(|c| {
                let h = c.homogenize(x0)?;
                match c.weighted_degree() {
                    Degree::NegInfinity => Ok(h),
                    Degree::Finite(d) => {
                        let pad = super::Monomial::one(c.ring().nvars()).checked_mul_var(x0, m - d)?;
                        h.mul_term(&c.ring().field().one(), &pad)
                    }
                }
            })
            .collect::<Result<_>>()?;
        Ok(VectorPoly { comps })
    }

    pub fn dehomogenize(&self, x0: usize) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().map(|c| c.dehomogenize(x0)).collect(),
        }
    }

    pub fn substitute_zero(&self, vars: &[usize]) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().map(|c| c.substitute_zero(vars)).collect(),
        }
    }

    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<VectorPoly> {
        let comps = self.comps.iter().map(|c| c.to_ring(target)).collect::<Result<_>>()?;
        Ok(VectorPoly { comps })
    }
}

impl fmt::Display for VectorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}
