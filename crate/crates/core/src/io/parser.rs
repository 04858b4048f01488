//! Recursive-descent parser for polynomials and vectors.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ['*' monos] | coeff monos | monos
//! monos  := var ['^' nat] ('*' var ['^' nat])*
//! coeff  := nat | nat '/' nat
//! vector := '[' poly (',' poly)* ']'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial, Term, VectorPoly, MAX_EXPONENT};

/// Parses one polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    parse_polynomial_at(text, ring, 1, 1)
}

/// Parses `[p1, p2, ...]` into a vector of `ring`.
pub fn parse_vector(text: &str, ring: &Arc<PolyRing>) -> Result<VectorPoly> {
    parse_vector_at(text, ring, 1, 1)
}

/// As [`parse_polynomial`], reporting errors relative to `line` and the
/// starting column `column`.
pub(crate) fn parse_polynomial_at(text: &str, ring: &Arc<PolyRing>, line: usize, column: usize) -> Result<Polynomial> {
    let mut p = Parser::new(text, ring, line, column);
    let terms = p.poly()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected character"));
    }
    Polynomial::from_terms(ring, terms)
}

pub(crate) fn parse_vector_at(text: &str, ring: &Arc<PolyRing>, line: usize, column: usize) -> Result<VectorPoly> {
    let mut p = Parser::new(text, ring, line, column);
    p.skip_ws();
    if !p.eat(b'[') {
        return Err(p.error("expected `[`"));
    }
    let mut comps = Vec::new();
    loop {
        comps.push(Polynomial::from_terms(ring, p.poly()?)?);
        p.skip_ws();
        if p.eat(b',') {
            continue;
        }
        if p.eat(b']') {
            break;
        }
        return Err(p.error("expected `,` or `]`"));
    }
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected character after `]`"));
    }
    VectorPoly::new(comps)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, ring: &'a Arc<PolyRing>, line: usize, column: usize) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            ring,
            line,
            column,
        }
    }

    fn error(&self, msg: &str) -> Error {
        let found = match self.peek() {
            Some(c) if c.is_ascii_graphic() => format!(" (found `{}`)", c as char),
            Some(_) => " (found non-ASCII or control character)".to_string(),
            None => " (found end of input)".to_string(),
        };
        Error::parse(self.line, self.column + self.pos, format!("{msg}{found}"))
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Vec<Term>> {
        self.skip_ws();
        if self.at_end() {
            return Err(self.error("empty polynomial"));
        }
        let mut negative = self.eat(b'-');
        let mut terms = Vec::new();
        loop {
            terms.push(self.term(negative)?);
            self.skip_ws();
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(terms);
            }
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        self.skip_ws();
        let field = self.ring.field();
        let (coeff, needs_monos) = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coeff()?;
                self.skip_ws();
                if self.eat(b'*') {
                    self.skip_ws();
                    (c, true)
                } else {
                    (c, false)
                }
            }
            Some(c) if c.is_ascii_alphabetic() => (field.one(), true),
            _ => return Err(self.error("expected a coefficient or a variable")),
        };
        let mono = match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => self.monos()?,
            _ if needs_monos => return Err(self.error("expected a variable")),
            _ => Monomial::one(self.ring.nvars()),
        };
        let coeff = if negative { -&coeff } else { coeff };
        Ok(Term::new(coeff, mono))
    }

    fn nat(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn coeff(&mut self) -> Result<Coefficient> {
        let start = self.pos;
        let num = self.nat().ok_or_else(|| self.error("expected a number"))?;
        let field = self.ring.field();
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let den = self.nat().ok_or_else(|| self.error("expected a denominator"))?;
            return field.from_fraction(&num, &den).map_err(|e| match e {
                Error::Arithmetic(m) => Error::Arithmetic(format!(
                    "{m} (line {}, column {})",
                    self.line,
                    self.column + start
                )),
                other => other,
            });
        }
        Ok(field.from_bigint(&num))
    }

    fn monos(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.nvars()];
        loop {
            self.skip_ws();
            if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                return Err(self.error("expected a variable"));
            }
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII identifier");
            let Some(var) = self.ring.var_index(name) else {
                self.pos = start;
                return Err(self.error(&format!("unknown identifier `{name}`")));
            };
            self.skip_ws();
            let mut e = 1u32;
            if self.eat(b'^') {
                self.skip_ws();
                let at = self.pos;
                e = self
                    .nat()
                    .and_then(|n| u32::try_from(n).ok())
                    .filter(|&n| n <= MAX_EXPONENT)
                    .ok_or_else(|| {
                        self.pos = at;
                        self.error("malformed exponent")
                    })?;
            }
            exps[var] += e;
            if exps[var] > MAX_EXPONENT {
                return Err(self.error("malformed exponent"));
            }
            self.skip_ws();
            // a `*` here must be followed by another variable
            if self.peek() == Some(b'*') {
                self.pos += 1;
                continue;
            }
            break;
        }
        Monomial::from_exponents(&exps)
    }
}
