use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = u16::MAX as u32;

/// A power product, stored as a fixed-length exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let exps = exps
            .iter()
            .map(|&e| {
                u16::try_from(e).map_err(|_| Error::Overflow(format!("exponent {e} exceeds {MAX_EXPONENT}")))
            })
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Σ weightᵢ·expᵢ.
    pub fn weighted_degree(&self, weights: &[u8]) -> u32 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w as u32)
            .sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .ok_or_else(|| Error::Overflow(format!("exponent {a} + {b} exceeds {MAX_EXPONENT}")))
            })
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Product for callers that have already bounded the degrees involved.
    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow in bounded product"))
                .collect(),
        }
    }

    /// Raises the exponent of `var` by `by`.
    pub fn checked_mul_var(&self, var: usize, by: u32) -> Result<Monomial> {
        let mut m = self.clone();
        let e = m.exps[var] as u32 + by;
        m.exps[var] = u16::try_from(e).map_err(|_| Error::Overflow(format!("exponent {e} exceeds {MAX_EXPONENT}")))?;
        Ok(m)
    }

    pub(crate) fn with_exponent(&self, var: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.exps[var] = e;
        m
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<_>>()?;
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Renders the monomial with the given variable names, e.g. `x1^2*x2`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in self.names.iter().zip(self.mono.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 0]).div(&m(&[0, 1])), None);
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 3])));
    }

    #[test]
    fn overflow_is_detected() {
        let big = m(&[MAX_EXPONENT, 0]);
        assert!(matches!(big.checked_mul(&m(&[1, 0])), Err(Error::Overflow(_))));
        assert!(Monomial::from_exponents(&[MAX_EXPONENT + 1]).is_err());
        assert!(big.checked_mul_var(0, 1).is_err());
    }

    #[test]
    fn degrees() {
        let x = m(&[2, 3, 1]);
        assert_eq!(x.total_degree(), 6);
        assert_eq!(x.weighted_degree(&[0, 1, 1]), 4);
    }
}
