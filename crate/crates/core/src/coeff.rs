//! Exact coefficient arithmetic over ℚ and prime fields 𝔽_p.
//!
//! Rationals are arbitrary precision and always kept in lowest terms with a
//! positive denominator, so equality of coefficients is structural. Residues
//! modulo p live in `[0, p)` with `p < 2^31`, which keeps every product inside
//! a `u64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// 𝔽_p, checking that `p` is a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::usage(format!("characteristic {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::usage(format!("characteristic {p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coefficient {
        match *self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::from_integer(n.into())),
            FieldSpec::PrimeField(p) => Coefficient::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match *self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coefficient::Modular {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// The field element `num / den`.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::Arithmetic(format!("denominator {den} is zero in {self}")));
        }
        self.from_bigint(num).checked_div(&d)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "Fp {p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of ℚ or of 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

/// The four field operations accepted by [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: rejects mixed fields and division by zero.
pub fn field_arith(a: &Coefficient, b: &Coefficient, op: ArithOp) -> Result<Coefficient> {
    if a.field() != b.field() {
        return Err(Error::usage(format!(
            "coefficients from different fields ({} and {})",
            a.field(),
            b.field()
        )));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Parses `int | int '/' posint` into a canonical element of `field`.
pub fn parse_coefficient(text: &str, field: FieldSpec) -> Result<Coefficient> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num = parse_int(num, true).ok_or_else(|| Error::parse(1, 1, format!("malformed coefficient `{text}`")))?;
    match den {
        None => Ok(field.from_bigint(&num)),
        Some(d) => {
            let den = parse_int(d, false).ok_or_else(|| {
                Error::parse(1, text.find('/').unwrap_or(0) + 2, format!("malformed denominator in `{text}`"))
            })?;
            field.from_fraction(&num, &den)
        }
    }
}

fn parse_int(s: &str, signed: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if signed => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Coefficient {
    pub fn field(&self) -> FieldSpec {
        match self {
            Coefficient::Rational(_) => FieldSpec::Rationals,
            Coefficient::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Modular { value, .. } => *value == 1,
        }
    }

    /// True when the canonical printed form starts with `-`.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Modular { .. } => false,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Coefficient> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coefficient::Rational(r) => Coefficient::Rational(r.recip()),
            Coefficient::Modular { value, modulus } => Coefficient::Modular {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &Coefficient) -> Result<Coefficient> {
        let inv = other
            .inverse()
            .ok_or_else(|| Error::Arithmetic("division by zero".into()))?;
        Ok(self * &inv)
    }

    pub fn abs(&self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(r.abs()),
            m => m.clone(),
        }
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

fn mismatch(a: &Coefficient, b: &Coefficient) -> ! {
    panic!("mixed-field coefficient arithmetic: {} vs {}", a.field(), b.field())
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Modular { value: a, modulus: p }, Coefficient::Modular { value: b, modulus: q }) if p == q => {
                let s = *a as u64 + *b as u64;
                Coefficient::Modular {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a - b),
            (Coefficient::Modular { value: a, modulus: p }, Coefficient::Modular { value: b, modulus: q }) if p == q => {
                let s = *a as u64 + (*p - *b) as u64;
                Coefficient::Modular {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Modular { value: a, modulus: p }, Coefficient::Modular { value: b, modulus: q }) if p == q => {
                Coefficient::Modular {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Modular { value, modulus } => Coefficient::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Coefficient::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Coefficient::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}
