use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::regex::Regex;
use crate::word::Word;

/// `x_var` (positive) or `¬x_var`; variables are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

/// Disjunction of terms over `n` variables. Each term is a conjunction of
/// literals on distinct variables; the empty term is true everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dnf {
    n: usize,
    terms: Vec<Vec<Literal>>,
}

impl Dnf {
    pub fn new(n: usize, terms: Vec<Vec<Literal>>) -> Result<Self> {
        for (j, term) in terms.iter().enumerate() {
            let mut seen = vec![false; n + 1];
            for lit in term {
                if lit.var == 0 || lit.var > n {
                    return Err(Error::IndexOutOfRange { index: lit.var, n });
                }
                if std::mem::replace(&mut seen[lit.var], true) {
                    return Err(Error::Config(format!("term {} uses x{} twice", j + 1, lit.var)));
                }
            }
        }
        Ok(Dnf { n, terms })
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Vec<Literal>] {
        &self.terms
    }

    /// Total number of literals.
    pub fn size(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    pub fn eval(&self, x: &Word) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: x.len() });
        }
        let bits = x.bits();
        Ok(self
            .terms
            .iter()
            .any(|t| t.iter().all(|l| bits[l.var - 1] == l.positive)))
    }
}

/// One block per variable: `1` for `x_i`, `0` for `¬x_i`, `(0|1)` when the
/// variable is absent; terms joined by right-nested union. No terms gives `@`.
pub fn dnf_to_re(phi: &Dnf) -> Regex {
    Regex::union_all(
        phi.terms
            .iter()
            .map(|term| {
                let mut blocks = vec![Regex::any_symbol(); phi.n];
                for lit in term {
                    blocks[lit.var - 1] = Regex::Sym(lit.positive);
                }
                Regex::concat_all(blocks)
            })
            .collect::<Vec<_>>(),
    )
}

/// `dnf <n> <m>` then one line per term of signed indices (`+3 -1` is
/// `x3 ∧ ¬x1`); an empty line is the empty term.
impl fmt::Display for Dnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dnf {} {}", self.n, self.terms.len())?;
        for term in &self.terms {
            let parts: Vec<String> = term
                .iter()
                .map(|l| format!("{}{}", if l.positive { '+' } else { '-' }, l.var))
                .collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Dnf {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let err = |line: usize, msg: String| Error::Format { line, msg };
        let (hl, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| err(1, "missing header".into()))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let (n, m) = match toks.as_slice() {
            ["dnf", n, m] => (
                n.parse::<usize>().map_err(|_| err(hl, format!("bad variable count {n:?}")))?,
                m.parse::<usize>().map_err(|_| err(hl, format!("bad term count {m:?}")))?,
            ),
            _ => return Err(err(hl, "expected 'dnf <n> <m>'".into())),
        };
        let mut terms = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = lines.next().ok_or_else(|| err(hl, format!("expected {m} term lines")))?;
            let term = text
                .split_whitespace()
                .map(|tok| {
                    let (positive, digits) = match tok.as_bytes().first() {
                        Some(b'+') => (true, &tok[1..]),
                        Some(b'-') => (false, &tok[1..]),
                        _ => (true, tok),
                    };
                    let var = digits
                        .parse::<usize>()
                        .map_err(|_| err(line, format!("bad literal {tok:?}")))?;
                    if var == 0 || var > n {
                        return Err(err(line, format!("literal {tok:?} outside x1..x{n}")));
                    }
                    Ok(Literal { var, positive })
                })
                .collect::<Result<Vec<_>>>()?;
            terms.push(term);
        }
        if let Some((line, extra)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(err(line, format!("unexpected line {extra:?} after {m} terms")));
        }
        Dnf::new(n, terms).map_err(|e| err(hl, e.to_string()))
    }
}
