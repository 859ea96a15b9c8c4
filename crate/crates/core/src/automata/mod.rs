//! Finite automata over `{0,1}` and the translations between them and
//! regular expressions.
//!
//! NFAs carry no ε-moves. Expressions become NFAs through the position
//! (Glushkov) construction, NFAs become DFAs by the subset construction,
//! and DFAs become expressions by state elimination.

mod compile;
mod dfa;
mod eliminate;
mod format;
mod nfa;

pub use compile::compile_extended;
pub use dfa::{complement_dfa, minimize, product, BoolOp};
pub use eliminate::dfa_to_re;
pub use format::{parse_automaton, Automaton};
pub use nfa::{determinize, determinize_capped, nth_from_end_nfa, re_to_nfa, DEFAULT_SUBSET_CAP};

use crate::word::{ceil_log2, Word};

/// Nondeterministic automaton. `delta[s][b]` lists successors of `s` on `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    pub initials: Vec<usize>,
    pub delta: Vec<[Vec<usize>; 2]>,
    pub finals: Vec<bool>,
}

/// Total deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    pub initial: usize,
    pub delta: Vec<[usize; 2]>,
    pub finals: Vec<bool>,
}

/// State count and an estimate of the bits needed to write the automaton
/// down: `q·ceil(log2 q)` for a DFA, `q²` for an NFA.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescriptionMetrics {
    pub states: usize,
    pub description_bits: u64,
}

impl Nfa {
    /// An automaton with `n` states and no transitions.
    pub fn with_states(n: usize) -> Self {
        Nfa { initials: Vec::new(), delta: vec![[Vec::new(), Vec::new()]; n], finals: vec![false; n] }
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn add_transition(&mut self, from: usize, bit: bool, to: usize) {
        let succ = &mut self.delta[from][bit as usize];
        if let Err(pos) = succ.binary_search(&to) {
            succ.insert(pos, to);
        }
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut current = vec![false; self.state_count()];
        for &s in &self.initials {
            current[s] = true;
        }
        for &b in w.bits() {
            let mut next = vec![false; self.state_count()];
            for (s, _) in current.iter().enumerate().filter(|(_, &on)| on) {
                for &t in &self.delta[s][b as usize] {
                    next[t] = true;
                }
            }
            current = next;
        }
        current.iter().zip(&self.finals).any(|(&on, &f)| on && f)
    }

    pub fn accepts_empty(&self) -> bool {
        self.initials.iter().any(|&s| self.finals[s])
    }

    pub fn metrics(&self) -> DescriptionMetrics {
        let q = self.state_count();
        DescriptionMetrics { states: q, description_bits: (q as u64) * (q as u64) }
    }

    /// Disjoint union.
    pub fn union(&self, other: &Nfa) -> Nfa {
        let off = self.state_count();
        let mut out = self.clone();
        out.delta.extend(other.delta.iter().map(|[a, b]| {
            [a.iter().map(|t| t + off).collect(), b.iter().map(|t| t + off).collect()]
        }));
        out.finals.extend_from_slice(&other.finals);
        out.initials.extend(other.initials.iter().map(|s| s + off));
        out
    }

    /// `L(self)·L(other)` without ε-moves.
    pub fn concat(&self, other: &Nfa) -> Nfa {
        let off = self.state_count();
        let mut out = self.union(other);
        let other_inits: Vec<usize> = other.initials.iter().map(|s| s + off).collect();
        out.initials = self.initials.clone();
        if self.accepts_empty() {
            out.initials.extend_from_slice(&other_inits);
        }
        // any move into a final state of `self` may also land on an initial
        // state of `other`
        for s in 0..off {
            for b in [false, true] {
                if self.delta[s][b as usize].iter().any(|&t| self.finals[t]) {
                    for &i in &other_inits {
                        out.add_transition(s, b, i);
                    }
                }
            }
        }
        // finals of `self` stay final only if `other` accepts ε
        let keep = other.accepts_empty();
        for f in &mut out.finals[..off] {
            *f &= keep;
        }
        out.initials.sort_unstable();
        out.initials.dedup();
        out
    }

    /// `L(self)*` without ε-moves: one fresh initial, final, isolated state
    /// for the empty word, and every move into a final state may also land
    /// on an initial state.
    pub fn star(&self) -> Nfa {
        let mut out = self.clone();
        let fresh = out.state_count();
        out.delta.push([Vec::new(), Vec::new()]);
        out.finals.push(true);
        out.initials.push(fresh);
        for s in 0..fresh {
            for b in [false, true] {
                if self.delta[s][b as usize].iter().any(|&t| self.finals[t]) {
                    for &i in &self.initials {
                        out.add_transition(s, b, i);
                    }
                }
            }
        }
        out
    }
}

impl Dfa {
    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    /// One state accepting everything (`accept = true`) or nothing.
    pub fn trivial(accept: bool) -> Self {
        Dfa { initial: 0, delta: vec![[0, 0]], finals: vec![accept] }
    }

    pub fn run(&self, w: &Word) -> usize {
        w.bits().iter().fold(self.initial, |s, &b| self.delta[s][b as usize])
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.finals[self.run(w)]
    }

    pub fn to_nfa(&self) -> Nfa {
        Nfa {
            initials: vec![self.initial],
            delta: self.delta.iter().map(|&[a, b]| [vec![a], vec![b]]).collect(),
            finals: self.finals.clone(),
        }
    }

    /// States reachable from the initial state, in BFS order (0 before 1).
    pub fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            for t in self.delta[order[i]] {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }

    pub fn metrics(&self) -> DescriptionMetrics {
        let q = self.state_count() as u64;
        let bits = if q <= 1 { 0 } else { q * ceil_log2(q) };
        DescriptionMetrics { states: q as usize, description_bits: bits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::parse;
    use crate::word::w;

    #[test]
    fn metrics_examples() {
        assert_eq!(Dfa::trivial(true).metrics().states, 1);
        assert_eq!(Nfa::with_states(4).metrics().description_bits, 16);
        let d = minimize(&determinize(&re_to_nfa(&parse("(0|1)*1(0|1)(0|1)").unwrap()).unwrap()).unwrap());
        assert_eq!(d.metrics().states, 8);
        assert_eq!(d.metrics().description_bits, 24);
    }

    #[test]
    fn nfa_combinators() {
        let a = re_to_nfa(&parse("0|e").unwrap()).unwrap();
        let b = re_to_nfa(&parse("1").unwrap()).unwrap();
        let ab = a.concat(&b);
        for (word, expect) in [("1", true), ("01", true), ("0", false), ("", false), ("001", false)] {
            assert_eq!(ab.accepts(&w(word)), expect, "{word}");
        }
        let s = re_to_nfa(&parse("01").unwrap()).unwrap().star();
        for (word, expect) in [("", true), ("01", true), ("0101", true), ("010", false), ("1", false)] {
            assert_eq!(s.accepts(&w(word)), expect, "{word}");
        }
    }
}
