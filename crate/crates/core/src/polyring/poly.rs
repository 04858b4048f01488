use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{same_ring, Monomial, PolyRing};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// One term `coeff·mono` of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coefficient,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coefficient, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Weighted degree of a polynomial; the zero polynomial has degree −∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms sorted strictly descending under the ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coefficient) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), index))
    }

    pub fn monomial(ring: &Arc<PolyRing>, c: Coefficient, mono: Monomial) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![Term::new(c, mono)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Result<Self> {
        for t in &terms {
            if t.coeff.field() != ring.field() {
                return Err(Error::usage(format!(
                    "coefficient from {} used in a ring over {}",
                    t.coeff.field(),
                    ring.field()
                )));
            }
            if t.mono.nvars() != ring.nvars() {
                return Err(Error::usage("monomial length does not match the ring"));
            }
        }
        Ok(Self::canonical(ring, terms))
    }

    pub(crate) fn canonical(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already sorted, distinct and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Does any term contain `var`?
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(var) > 0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "polynomials from different rings: {} and {}",
                self.ring, other.ring
            )))
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Coefficient| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(sign(&b[j].coeff), b[j].mono.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].coeff - &b[j].coeff } else { &a[i].coeff + &b[j].coeff };
                    if !c.is_zero() {
                        out.push(Term::new(c, a[i].mono.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term::new(sign(&t.coeff), t.mono.clone())));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term::new(&a.coeff * &b.coeff, a.mono.checked_mul(&b.mono)?));
            }
        }
        Ok(Self::canonical(&self.ring, terms))
    }

    /// `c·m·self`.
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(&t.coeff * c, t.mono.checked_mul(m)?)))
            .collect::<Result<Vec<_>>>()?;
        // multiplication by a monomial preserves the order
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Largest weighted degree of a term, −∞ for zero.
    pub fn weighted_degree(&self) -> Degree {
        let w = self.ring.weights();
        self.terms
            .iter()
            .map(|t| Degree::Finite(t.mono.weighted_degree(w)))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Largest unweighted total degree of a term, −∞ for zero.
    pub fn total_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|t| Degree::Finite(t.mono.total_degree()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// All terms share one weighted degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let w = self.ring.weights();
        self.terms
            .windows(2)
            .all(|p| p[0].mono.weighted_degree(w) == p[1].mono.weighted_degree(w))
    }

    /// The weighted-homogeneous components, by increasing degree.
    pub fn homogeneous_parts(&self) -> Vec<(u32, Polynomial)> {
        let w = self.ring.weights();
        let mut parts: Vec<(u32, Vec<Term>)> = Vec::new();
        for t in &self.terms {
            let d = t.mono.weighted_degree(w);
            match parts.iter_mut().find(|(e, _)| *e == d) {
                Some((_, ts)) => ts.push(t.clone()),
                None => parts.push((d, vec![t.clone()])),
            }
        }
        parts.sort_by_key(|(d, _)| *d);
        parts
            .into_iter()
            .map(|(d, ts)| (d, Polynomial::from_sorted(&self.ring, ts)))
            .collect()
    }

    /// `f^h`: each term of weighted degree `d_t` is multiplied by
    /// `x0^(deg f − d_t)`. The result is homogeneous of degree `deg f`.
    pub fn homogenize(&self, x0: usize) -> Result<Polynomial> {
        if x0 >= self.ring.nvars() || self.ring.weights()[x0] != 1 {
            return Err(Error::usage("homogenizing variable must be a weight-1 variable of the ring"));
        }
        if self.involves(x0) {
            return Err(Error::usage(format!(
                "cannot homogenize a polynomial that already involves `{}`",
                self.ring.vars()[x0]
            )));
        }
        let Degree::Finite(deg) = self.weighted_degree() else {
            return Ok(self.clone());
        };
        let w = self.ring.weights();
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(t.coeff.clone(), t.mono.checked_mul_var(x0, deg - t.mono.weighted_degree(w))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(&self.ring, terms))
    }

    /// The dehomogenization `x0 ↦ 1`.
    pub fn dehomogenize(&self, x0: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mono.with_exponent(x0, 0)))
            .collect();
        Self::canonical(&self.ring, terms)
    }

    /// Sets every listed variable to zero, i.e. drops all terms containing one.
    pub fn substitute_zero(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| vars.iter().all(|&v| t.mono.exponent(v) == 0))
                .cloned()
                .collect(),
        }
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Fails if a variable that occurs is missing from `target` or the fields
    /// differ.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(Error::usage("cannot move a polynomial between different fields"));
        }
        let map = self.ring.embedding(target);
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u32; n];
                for (i, &e) in t.mono.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    match map[i] {
                        Some(j) => exps[j] = e as u32,
                        None => {
                            return Err(Error::usage(format!(
                                "variable `{}` does not exist in {}",
                                self.ring.vars()[i],
                                target
                            )))
                        }
                    }
                }
                Ok(Term::new(t.coeff.clone(), Monomial::from_exponents(&exps)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(target, terms))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term::new(-&t.coeff, t.mono.clone())).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.vars();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", t.mono.display(names))?;
            } else {
                write!(f, "{c}*{}", t.mono.display(names))?;
            }
        }
        Ok(())
    }
}
