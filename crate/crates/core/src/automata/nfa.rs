use std::collections::{BTreeSet, HashMap};

use super::{Dfa, Nfa};
use crate::error::{Error, Result};
use crate::regex::{desugar_count, Regex};

/// Default cap on the number of subsets the subset construction may create.
pub const DEFAULT_SUBSET_CAP: usize = 1 << 20;

/// Position automaton of a plain expression: one state per symbol
/// occurrence plus an initial state. Counting is desugared first.
pub fn re_to_nfa(r: &Regex) -> Result<Nfa> {
    let r = if r.has_count() { desugar_count(r) } else { r.clone() };
    let mut g = Positions { symbols: vec![false], follow: vec![BTreeSet::new()] };
    let root = g.walk(&r)?;
    let n = g.symbols.len();
    let mut nfa = Nfa::with_states(n);
    nfa.initials = vec![0];
    for &p in &root.first {
        nfa.add_transition(0, g.symbols[p], p);
    }
    for p in 1..n {
        for &q in &g.follow[p] {
            nfa.add_transition(p, g.symbols[q], q);
        }
    }
    for &p in &root.last {
        nfa.finals[p] = true;
    }
    nfa.finals[0] = root.nullable;
    Ok(nfa)
}

struct Positions {
    symbols: Vec<bool>,
    follow: Vec<BTreeSet<usize>>,
}

struct Summary {
    nullable: bool,
    first: Vec<usize>,
    last: Vec<usize>,
}

impl Positions {
    fn walk(&mut self, r: &Regex) -> Result<Summary> {
        Ok(match r {
            Regex::EmptySet => Summary { nullable: false, first: vec![], last: vec![] },
            Regex::Epsilon => Summary { nullable: true, first: vec![], last: vec![] },
            Regex::Sym(b) => {
                let p = self.symbols.len();
                self.symbols.push(*b);
                self.follow.push(BTreeSet::new());
                Summary { nullable: false, first: vec![p], last: vec![p] }
            }
            Regex::Union(a, b) => {
                let (a, b) = (self.walk(a)?, self.walk(b)?);
                Summary {
                    nullable: a.nullable || b.nullable,
                    first: [a.first, b.first].concat(),
                    last: [a.last, b.last].concat(),
                }
            }
            Regex::Concat(a, b) => {
                let (a, b) = (self.walk(a)?, self.walk(b)?);
                for &l in &a.last {
                    self.follow[l].extend(b.first.iter().copied());
                }
                let mut first = a.first;
                if a.nullable {
                    first.extend(b.first.iter().copied());
                }
                let mut last = b.last;
                if b.nullable {
                    last.extend(a.last);
                }
                Summary { nullable: a.nullable && b.nullable, first, last }
            }
            Regex::Star(a) => {
                let a = self.walk(a)?;
                for &l in &a.last {
                    self.follow[l].extend(a.first.iter().copied());
                }
                Summary { nullable: true, first: a.first, last: a.last }
            }
            Regex::Inter(..) => return Err(Error::UnsupportedOperator("intersection")),
            Regex::Compl(_) => return Err(Error::UnsupportedOperator("complement")),
            Regex::Count(..) => unreachable!("counting desugared before the walk"),
        })
    }
}

pub fn determinize(a: &Nfa) -> Result<Dfa> {
    determinize_capped(a, DEFAULT_SUBSET_CAP)
}

/// Subset construction over reachable subsets only. The empty subset, when
/// reachable, becomes the dead state. Fails once more than `cap` subsets
/// are discovered.
pub fn determinize_capped(a: &Nfa, cap: usize) -> Result<Dfa> {
    let mut start: Vec<usize> = a.initials.clone();
    start.sort_unstable();
    start.dedup();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut delta = Vec::new();
    let mut mark = vec![false; a.state_count()];
    let mut i = 0;
    while i < subsets.len() {
        let mut row = [0usize; 2];
        for (b, slot) in row.iter_mut().enumerate() {
            let mut next = Vec::new();
            for &s in &subsets[i] {
                for &t in &a.delta[s][b] {
                    if !mark[t] {
                        mark[t] = true;
                        next.push(t);
                    }
                }
            }
            for &t in &next {
                mark[t] = false;
            }
            next.sort_unstable();
            *slot = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    if id >= cap {
                        return Err(Error::StateCapExceeded { cap });
                    }
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
        }
        delta.push(row);
        i += 1;
    }
    let finals = subsets.iter().map(|s| s.iter().any(|&q| a.finals[q])).collect();
    Ok(Dfa { initial: 0, delta, finals })
}

/// The `(n+1)`-state NFA for "the n-th symbol from the end is 1". Its
/// subset construction reaches `2^n` subsets.
pub fn nth_from_end_nfa(n: usize) -> Nfa {
    let mut a = Nfa::with_states(n + 1);
    a.initials = vec![0];
    a.add_transition(0, false, 0);
    a.add_transition(0, true, 0);
    a.add_transition(0, true, 1);
    for i in 1..n {
        a.add_transition(i, false, i + 1);
        a.add_transition(i, true, i + 1);
    }
    a.finals[n] = true;
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::{parse, size_of};
    use crate::word::{w, Word};

    #[test]
    fn symbol_nfa() {
        let a = re_to_nfa(&Regex::zero()).unwrap();
        for word in Word::all_up_to(3) {
            assert_eq!(a.accepts(&word), word == w("0"));
        }
    }

    #[test]
    fn universe_nfa() {
        let a = re_to_nfa(&parse("(0|1)*").unwrap()).unwrap();
        assert!(Word::all_up_to(4).all(|x| a.accepts(&x)));
    }

    #[test]
    fn rejects_extended_operators() {
        assert_eq!(re_to_nfa(&parse("0&1").unwrap()), Err(Error::UnsupportedOperator("intersection")));
        assert_eq!(re_to_nfa(&parse("!0").unwrap()), Err(Error::UnsupportedOperator("complement")));
    }

    #[test]
    fn state_count_is_linear() {
        let r = parse("(1(0|1)01)|((0|1)01(0|1))").unwrap();
        let a = re_to_nfa(&r).unwrap();
        assert!(a.state_count() as u64 <= size_of(&r, false) + 1);
    }

    #[test]
    fn determinize_single_symbol() {
        let d = determinize(&re_to_nfa(&Regex::one()).unwrap()).unwrap();
        assert!((2..=3).contains(&d.state_count()));
        for word in Word::all_up_to(4) {
            assert_eq!(d.accepts(&word), word == w("1"));
        }
    }

    #[test]
    fn determinize_empty_language() {
        let d = determinize(&re_to_nfa(&Regex::EmptySet).unwrap()).unwrap();
        // The start subset and the empty (dead) subset.
        assert_eq!(d.state_count(), 2);
        assert!(d.finals.iter().all(|&f| !f));
        assert_eq!(d.delta[1], [1, 1]);
    }

    #[test]
    fn witness_family_blows_up() {
        for n in 4..=10 {
            let d = determinize(&nth_from_end_nfa(n)).unwrap();
            assert!(d.state_count() >= 1 << n, "n={n}: {}", d.state_count());
        }
    }

    #[test]
    fn cap_is_reported() {
        assert_eq!(
            determinize_capped(&nth_from_end_nfa(8), 100),
            Err(Error::StateCapExceeded { cap: 100 })
        );
    }
}
