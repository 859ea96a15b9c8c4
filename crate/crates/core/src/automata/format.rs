//! Line-based automaton text format:
//!
//! ```text
//! dfa 2
//! init 0
//! final 1
//! t 0 0 0
//! t 0 1 1
//! t 1 0 1
//! t 1 1 1
//! ```
//!
//! The header is `dfa <states>` or `nfa <states>`; states are 0-based. NFA
//! transition lines may list several targets; absent lines mean no moves.

use std::fmt;

use super::{Dfa, Nfa};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Nfa(Nfa),
    Dfa(Dfa),
}

impl Automaton {
    /// NFA view; a DFA converts trivially.
    pub fn into_nfa(self) -> Nfa {
        match self {
            Automaton::Nfa(n) => n,
            Automaton::Dfa(d) => d.to_nfa(),
        }
    }
}

fn join(states: impl Iterator<Item = usize>) -> String {
    states.map(|s| format!(" {s}")).collect()
}

impl fmt::Display for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nfa {}", self.state_count())?;
        writeln!(f, "init{}", join(self.initials.iter().copied()))?;
        writeln!(f, "final{}", join((0..self.state_count()).filter(|&s| self.finals[s])))?;
        for (s, row) in self.delta.iter().enumerate() {
            for (b, targets) in row.iter().enumerate() {
                if !targets.is_empty() {
                    writeln!(f, "t {s} {b}{}", join(targets.iter().copied()))?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dfa {}", self.state_count())?;
        writeln!(f, "init {}", self.initial)?;
        writeln!(f, "final{}", join((0..self.state_count()).filter(|&s| self.finals[s])))?;
        for (s, row) in self.delta.iter().enumerate() {
            for (b, t) in row.iter().enumerate() {
                writeln!(f, "t {s} {b} {t}")?;
            }
        }
        Ok(())
    }
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, msg: String| Error::Format { line, msg };

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let mut head = header.split_whitespace();
    let kind = head.next().unwrap_or_default();
    if kind != "dfa" && kind != "nfa" {
        return Err(err(hline, format!("expected 'dfa' or 'nfa', found {kind:?}")));
    }
    let n: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(hline, "expected state count".into()))?;
    if head.next().is_some() {
        return Err(err(hline, "trailing tokens in header".into()));
    }

    let state = |line: usize, tok: &str| -> Result<usize> {
        match tok.parse::<usize>() {
            Ok(s) if s < n => Ok(s),
            Ok(s) => Err(err(line, format!("state {s} out of range (count {n})"))),
            Err(_) => Err(err(line, format!("bad state {tok:?}"))),
        }
    };

    let mut nfa = Nfa::with_states(n);
    let mut saw_init = false;
    let mut saw_final = false;
    let mut det_seen = vec![[false; 2]; n];
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some("init") => {
                if saw_init {
                    return Err(err(line, "duplicate init line".into()));
                }
                saw_init = true;
                nfa.initials = toks.map(|t| state(line, t)).collect::<Result<_>>()?;
            }
            Some("final") => {
                if saw_final {
                    return Err(err(line, "duplicate final line".into()));
                }
                saw_final = true;
                for t in toks {
                    nfa.finals[state(line, t)?] = true;
                }
            }
            Some("t") => {
                let from = state(line, toks.next().ok_or_else(|| err(line, "missing source".into()))?)?;
                let bit = match toks.next() {
                    Some("0") => false,
                    Some("1") => true,
                    other => return Err(err(line, format!("expected symbol 0 or 1, found {other:?}"))),
                };
                let targets: Vec<usize> = toks.map(|t| state(line, t)).collect::<Result<_>>()?;
                if kind == "dfa" {
                    if targets.len() != 1 {
                        return Err(err(line, "dfa transitions need exactly one target".into()));
                    }
                    if std::mem::replace(&mut det_seen[from][bit as usize], true) {
                        return Err(err(line, format!("second transition for state {from} on {}", bit as u8)));
                    }
                }
                for t in targets {
                    nfa.add_transition(from, bit, t);
                }
            }
            Some(other) => return Err(err(line, format!("unknown directive {other:?}"))),
            None => unreachable!(),
        }
    }
    if !saw_init {
        return Err(err(hline, "missing init line".into()));
    }
    if kind == "nfa" {
        return Ok(Automaton::Nfa(nfa));
    }
    if nfa.initials.len() != 1 {
        return Err(err(hline, "dfa needs exactly one initial state".into()));
    }
    if let Some(s) = (0..n).find(|&s| det_seen[s] != [true, true]) {
        return Err(err(hline, format!("dfa state {s} lacks a transition")));
    }
    Ok(Automaton::Dfa(Dfa {
        initial: nfa.initials[0],
        delta: nfa.delta.iter().map(|[a, b]| [a[0], b[0]]).collect(),
        finals: nfa.finals,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, re_to_nfa};
    use crate::regex::parse;

    #[test]
    fn dfa_text_is_exact() {
        let d = determinize(&re_to_nfa(&parse("1").unwrap()).unwrap()).unwrap();
        let text = d.to_string();
        assert_eq!(text, "dfa 3\ninit 0\nfinal 2\nt 0 0 1\nt 0 1 2\nt 1 0 1\nt 1 1 1\nt 2 0 1\nt 2 1 1\n");
        assert_eq!(parse_automaton(&text).unwrap(), Automaton::Dfa(d));
    }

    #[test]
    fn nfa_round_trip() {
        let a = re_to_nfa(&parse("(0|1)*1(0|1)").unwrap()).unwrap();
        assert_eq!(parse_automaton(&a.to_string()).unwrap(), Automaton::Nfa(a));
    }

    #[test]
    fn malformed_inputs_name_the_line() {
        assert!(matches!(parse_automaton("dfa 2\ninit 0\nfinal 5\n"), Err(Error::Format { line: 3, .. })));
        assert!(matches!(parse_automaton("nfa x"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_automaton("dfa 1\ninit 0\nfinal\nt 0 2 0"), Err(Error::Format { line: 4, .. })));
        assert!(matches!(parse_automaton("dfa 1\ninit 0\nfinal\nt 0 0 0"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_automaton("dfa 1\ninit 0\nt 0 0 0\nt 0 0 0"), Err(Error::Format { line: 4, .. })));
    }
}
