//! Global monomial orders and their extensions to free modules.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// A global monomial order.
///
/// Variables are ranked by their position in the ring: index 0 is the
/// largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
    /// The first `split` variables are compared with `first`; ties are broken
    /// on the remaining variables with `second`.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(split: usize, first: MonomialOrder, second: MonomialOrder) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(first),
            second: Box::new(second),
        }
    }

    /// The customary elimination order: degrevlex on each of the two blocks.
    pub fn elimination(split: usize) -> Self {
        Self::block(split, MonomialOrder::DegRevLex, MonomialOrder::DegRevLex)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_exponents(a.exponents(), b.exponents())
    }

    pub fn compare_exponents(&self, a: &[u16], b: &[u16]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegLex => degree(a).cmp(&degree(b)).then_with(|| lex(a, b)),
            MonomialOrder::DegRevLex => degree(a).cmp(&degree(b)).then_with(|| revlex(a, b)),
            MonomialOrder::Block { split, first, second } => {
                let s = (*split).min(a.len());
                first
                    .compare_exponents(&a[..s], &b[..s])
                    .then_with(|| second.compare_exponents(&a[s..], &b[s..]))
            }
        }
    }

    /// Checks that the order makes sense for a ring with `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Block { split, first, second } = self {
            if *split > nvars {
                return Err(Error::usage(format!(
                    "block split {split} exceeds the number of variables ({nvars})"
                )));
            }
            first.validate(*split)?;
            second.validate(nvars - split)?;
        }
        Ok(())
    }

    /// True iff every monomial containing a variable of `elim` exceeds every
    /// monomial free of them, in a ring with `nvars` variables.
    pub fn is_elimination_order(&self, elim: &[usize], nvars: usize) -> bool {
        let mut mask = vec![false; nvars];
        for &v in elim {
            if v < nvars {
                mask[v] = true;
            }
        }
        self.eliminates(&mask)
    }

    fn eliminates(&self, mask: &[bool]) -> bool {
        let n = mask.len();
        let count = mask.iter().filter(|&&b| b).count();
        if count == 0 || count == n {
            return true;
        }
        match self {
            // Only a leading prefix of the variables can be eliminated lexicographically.
            MonomialOrder::Lex => mask.iter().take(count).all(|&b| b),
            MonomialOrder::DegLex | MonomialOrder::DegRevLex => false,
            MonomialOrder::Block { split, first, second } => {
                let s = (*split).min(n);
                let (head, tail) = mask.split_at(s);
                if tail.iter().all(|&b| !b) {
                    first.eliminates(head)
                } else {
                    head.iter().all(|&b| b) && second.eliminates(tail)
                }
            }
        }
    }
}

fn degree(e: &[u16]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    a.cmp(b)
}

// Equal degree assumed: the rightmost differing exponent decides, smaller wins.
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::DegLex => f.write_str("deglex"),
            MonomialOrder::DegRevLex => f.write_str("degrevlex"),
            MonomialOrder::Block { split, first, second } => write!(f, "block({split}:{first},{second})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = OrderParser { src: s, pos: 0 };
        let order = p.order()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing characters after order"));
        }
        Ok(order)
    }
}

struct OrderParser<'a> {
    src: &'a str,
    pos: usize,
}

impl OrderParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::parse(1, self.pos + 1, format!("{msg} in order `{}`", self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{tok}`")))
        }
    }

    fn order(&mut self) -> Result<MonomialOrder> {
        if self.eat("degrevlex") {
            Ok(MonomialOrder::DegRevLex)
        } else if self.eat("deglex") {
            Ok(MonomialOrder::DegLex)
        } else if self.eat("lex") {
            Ok(MonomialOrder::Lex)
        } else if self.eat("block") {
            self.expect("(")?;
            self.skip_ws();
            let start = self.pos;
            while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let split = self.src[start..self.pos]
                .parse()
                .map_err(|_| self.error("expected block size"))?;
            self.expect(":")?;
            let first = self.order()?;
            self.expect(",")?;
            let second = self.order()?;
            self.expect(")")?;
            Ok(MonomialOrder::block(split, first, second))
        } else {
            Err(self.error("unknown monomial order"))
        }
    }
}

/// How module terms `m·eᵢ` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ModuleScheme {
    /// Position decides first (lower index larger), then the monomial.
    PositionOverTerm,
    /// Monomial decides first, ties broken by position (lower index larger).
    #[default]
    TermOverPosition,
}

/// A monomial order extended to the free module R^ℓ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub scheme: ModuleScheme,
}

impl ModuleOrder {
    pub fn top(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            scheme: ModuleScheme::TermOverPosition,
        }
    }

    pub fn pot(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            scheme: ModuleScheme::PositionOverTerm,
        }
    }

    /// Compares `a·e_i` against `b·e_j`.
    pub fn compare(&self, a: &Monomial, i: usize, b: &Monomial, j: usize) -> Ordering {
        match self.scheme {
            ModuleScheme::PositionOverTerm => j.cmp(&i).then_with(|| self.base.compare(a, b)),
            ModuleScheme::TermOverPosition => self.base.compare(a, b).then_with(|| j.cmp(&i)),
        }
    }
}

impl fmt::Display for ModuleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scheme {
            ModuleScheme::PositionOverTerm => write!(f, "pot({})", self.base),
            ModuleScheme::TermOverPosition => write!(f, "top({})", self.base),
        }
    }
}
