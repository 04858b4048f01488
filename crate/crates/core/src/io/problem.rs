//! Problem files.
//!
//! ```text
//! # the twisted cubic
//! field QQ
//! vars b1, b2, b3, t
//! elim t
//! gens:
//! b1 - t
//! b2 - t^2
//! b3 - t^3
//! ```
//!
//! Header lines, in any sequence before `gens:`:
//!
//! * `field QQ` or `field Fp <prime>` (required)
//! * `vars <name>, ...` (required)
//! * `elim <name>, ...`: the variables to eliminate. They get grading weight 1
//!   and all others weight 0. Without this line every variable has weight 1.
//! * `order <order>`: the ring order (degrevlex when absent)
//! * `rank <n>`: generators are vectors `[p1, ..., pn]` instead of polynomials
//!
//! After `gens:` comes one generator per line. `#` starts a comment; blank
//! lines are ignored.

use std::path::Path;
use std::sync::Arc;

use super::parser::{parse_polynomial_at, parse_vector_at};
use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::groebner::{IdealBasis, ModuleBasis};
use crate::idealops::EliminationProblem;
use crate::orders::MonomialOrder;
use crate::polyring::{PolyRing, VectorPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    /// Ordered by the `order` line, weighted by the `elim` line.
    pub ring: Arc<PolyRing>,
    /// Variables named on the `elim` line, in file order.
    pub elim: Vec<String>,
    /// The `order` line, if present.
    pub order: Option<MonomialOrder>,
    /// `Some` when the file has a `rank` line.
    pub rank: Option<usize>,
    /// Generators as vectors (of rank 1 for ideal problems).
    pub gens: Vec<VectorPoly>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut field = None;
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut elim: Option<(usize, Vec<String>)> = None;
        let mut order = None;
        let mut rank = None;
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l)));
        let mut gens_line = None;

        for (no, line) in lines.by_ref() {
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed == "gens:" {
                gens_line = Some(no);
                break;
            }
            let indent = line.len() - line.trim_start().len();
            let (key, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest_col = indent + key.len() + 1 + (rest.len() - rest.trim_start().len()) + 1;
            let rest = rest.trim();
            let dup = |seen: bool| {
                if seen {
                    Err(Error::parse(no, indent + 1, format!("duplicate `{key}` line")))
                } else {
                    Ok(())
                }
            };
            match key {
                "field" => {
                    dup(field.is_some())?;
                    field = Some(parse_field(rest, no, rest_col)?);
                }
                "vars" => {
                    dup(vars.is_some())?;
                    vars = Some((no, parse_names(rest, no, rest_col)?));
                }
                "elim" => {
                    dup(elim.is_some())?;
                    elim = Some((no, parse_names(rest, no, rest_col)?));
                }
                "order" => {
                    dup(order.is_some())?;
                    let o = rest.parse::<MonomialOrder>().map_err(|e| match e {
                        Error::Parse { column, message, .. } => Error::parse(no, rest_col + column - 1, message),
                        other => other,
                    })?;
                    order = Some((no, o));
                }
                "rank" => {
                    dup(rank.is_some())?;
                    let n = rest
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| Error::parse(no, rest_col, "rank must be a positive integer"))?;
                    rank = Some(n);
                }
                _ => return Err(Error::parse(no, indent + 1, format!("unknown header `{key}`"))),
            }
        }

        let end = text.lines().count().max(1);
        let Some(gens_line) = gens_line else {
            return Err(Error::parse(end, 1, "missing `gens:` line"));
        };
        let field = field.ok_or_else(|| Error::parse(gens_line, 1, "missing `field` line before `gens:`"))?;
        let (vars_line, vars) = vars.ok_or_else(|| Error::parse(gens_line, 1, "missing `vars` line before `gens:`"))?;

        let mut weights = vec![1u8; vars.len()];
        if let Some((no, names)) = &elim {
            weights = vec![0; vars.len()];
            for name in names {
                let i = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::parse(*no, 1, format!("`{name}` is not a declared variable")))?;
                if weights[i] == 1 {
                    return Err(Error::parse(*no, 1, format!("`{name}` listed twice")));
                }
                weights[i] = 1;
            }
        }
        if let Some((no, o)) = &order {
            o.validate(vars.len()).map_err(|e| Error::parse(*no, 1, e.to_string()))?;
        }
        let order = order.map(|(_, o)| o);
        let ring = PolyRing::new(field, vars, weights, None, order.clone().unwrap_or_default()).map_err(|e| match e {
            Error::Usage(m) => Error::parse(vars_line, 1, m),
            other => other,
        })?;

        let mut gens = Vec::new();
        for (no, line) in lines {
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = line.len() - line.trim_start().len() + 1;
            let g = match rank {
                Some(n) => {
                    let v = parse_vector_at(trimmed, &ring, no, col)?;
                    if v.rank() != n {
                        return Err(Error::parse(no, col, format!("expected a vector of rank {n}, found rank {}", v.rank())));
                    }
                    v
                }
                None => VectorPoly::new(vec![parse_polynomial_at(trimmed, &ring, no, col)?])?,
            };
            gens.push(g);
        }
        Ok(ProblemFile {
            ring,
            elim: elim.map(|(_, names)| names).unwrap_or_default(),
            order,
            rank,
            gens,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn is_module(&self) -> bool {
        self.rank.is_some()
    }

    pub fn module(&self) -> Result<ModuleBasis> {
        ModuleBasis::new(&self.ring, self.rank.unwrap_or(1), self.gens.clone())
    }

    /// The generators as an ideal; fails for module problems of rank > 1.
    pub fn ideal(&self) -> Result<IdealBasis> {
        self.module()?.to_ideal()
    }

    pub fn problem(&self) -> Result<EliminationProblem> {
        EliminationProblem::module(&self.module()?, &self.elim)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(l, _)| l)
}

fn parse_field(text: &str, line: usize, column: usize) -> Result<FieldSpec> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["QQ"] => Ok(FieldSpec::Rationals),
        ["Fp", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::parse(line, column, format!("`{p}` is not a valid characteristic")))?;
            FieldSpec::prime(p).map_err(|e| Error::parse(line, column, e.to_string()))
        }
        _ => Err(Error::parse(line, column, "expected `QQ` or `Fp <prime>`")),
    }
}

fn parse_names(text: &str, line: usize, column: usize) -> Result<Vec<String>> {
    if text.is_empty() {
        return Err(Error::parse(line, column, "expected a variable list"));
    }
    let mut names = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let name = part.trim();
        let col = column + offset + (part.len() - part.trim_start().len());
        if name.is_empty() {
            return Err(Error::parse(line, col, "empty variable name"));
        }
        names.push(name.to_string());
        offset += part.len() + 1;
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBIC: &str = "# twisted cubic\nfield QQ\nvars b1, b2, b3, t\nelim t\ngens:\nb1 - t\nb2 - t^2  # second\n\nb3 - t^3\n";

    #[test]
    fn twisted_cubic_file() {
        let p = ProblemFile::parse(CUBIC).unwrap();
        assert_eq!(p.ring.vars(), ["b1", "b2", "b3", "t"]);
        assert_eq!(p.ring.weights(), [0, 0, 0, 1]);
        assert_eq!(p.elim, ["t"]);
        let i = p.ideal().unwrap();
        let gens: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["b1 - t", "-t^2 + b2", "-t^3 + b3"]);
        assert_eq!(p.problem().unwrap().elim_vars(), [3]);
    }

    #[test]
    fn headers() {
        let p = ProblemFile::parse("field Fp 7\nvars x,y\norder lex\nrank 2\ngens:\n[x, 8*y]\n").unwrap();
        assert_eq!(p.ring.field(), FieldSpec::PrimeField(7));
        assert_eq!(p.ring.weights(), [1, 1]);
        assert_eq!(p.ring.order(), &MonomialOrder::Lex);
        assert_eq!(p.gens[0].to_string(), "[x, y]");
        assert!(p.ideal().is_err());
        let empty = ProblemFile::parse("field QQ\nvars x\ngens:\n").unwrap();
        assert!(empty.gens.is_empty());
    }

    fn parse_err(text: &str) -> (usize, usize, String) {
        match ProblemFile::parse(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors() {
        let (l, c, m) = parse_err("field QQ\nvars x, y\ngens:\nx + z\n");
        assert_eq!((l, c), (4, 5));
        assert!(m.contains("`z`"));
        assert_eq!(parse_err("field QQ\nvars x\n").0, 2);
        assert_eq!(parse_err("field Fp 8\nvars x\ngens:\n").0, 1);
        assert_eq!(parse_err("field QQ\nvars x\nelim y\ngens:\n").0, 3);
        assert_eq!(parse_err("field QQ\nvars x\nfoo\ngens:\n").0, 3);
        assert_eq!(parse_err("field QQ\nvars x,,y\ngens:\n").1, 8);
        assert_eq!(parse_err("field QQ\nvars x\norder block(5:lex,lex)\ngens:\n").0, 3);
        assert_eq!(parse_err("field QQ\nvars x\nrank 2\ngens:\n[x]\n").0, 5);
        assert_eq!(parse_err("vars x\nfield QQ\nfield QQ\ngens:\n").0, 3);
        assert_eq!(parse_err("field QQ\nvars x, 1y\ngens:\n").0, 2);
        assert_eq!(parse_err("field QQ\nvars x\norder foo\ngens:\n").0, 3);
    }
}
