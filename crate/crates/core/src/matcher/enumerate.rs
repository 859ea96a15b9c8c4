use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::regex::Regex;
use crate::word::Word;

/// Largest `max_len` accepted by [`enumerate_language`].
pub const DEFAULT_LENGTH_BOUND: usize = 12;

/// The members of a language of length at most `max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageSample {
    pub max_len: usize,
    pub words: BTreeSet<Word>,
}

impl LanguageSample {
    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }
}

/// Outcome of a truncated equivalence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    /// A shortest (then lexicographically least) word in exactly one language.
    Differ(Word),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent)
    }
}

pub fn enumerate_language(r: &Regex, max_len: usize) -> Result<LanguageSample> {
    enumerate_language_bounded(r, max_len, DEFAULT_LENGTH_BOUND)
}

/// Computes `L(r) ∩ Σ^{≤max_len}` bottom-up over the tree with explicit
/// set operations. Complement is taken relative to `Σ^{≤max_len}`.
pub fn enumerate_language_bounded(r: &Regex, max_len: usize, bound: usize) -> Result<LanguageSample> {
    if max_len > bound {
        return Err(Error::BoundExceeded { requested: max_len, bound });
    }
    let space = Space::new(max_len);
    let set = space.eval(r);
    let words = space.members(&set).map(|i| space.word(i)).collect();
    Ok(LanguageSample { max_len, words })
}

/// `Verdict::Equivalent` iff the two languages agree on all words of length
/// at most `max_len`.
pub fn equivalent_upto(a: &Regex, b: &Regex, max_len: usize) -> Result<Verdict> {
    let la = enumerate_language(a, max_len)?;
    let lb = enumerate_language(b, max_len)?;
    Ok(match la.words.symmetric_difference(&lb.words).min() {
        None => Verdict::Equivalent,
        Some(w) => Verdict::Differ(w.clone()),
    })
}

/// Words of length ≤ L indexed shortlex: word `v` of length `l` sits at
/// `2^l - 1 + v`.
struct Space {
    max_len: usize,
    size: usize,
}

type Set = Vec<u64>;

impl Space {
    fn new(max_len: usize) -> Self {
        Space { max_len, size: (1usize << (max_len + 1)) - 1 }
    }

    fn empty(&self) -> Set {
        vec![0; self.size.div_ceil(64)]
    }

    fn full(&self) -> Set {
        let mut s = self.empty();
        for i in 0..self.size {
            insert(&mut s, i);
        }
        s
    }

    fn index(len: usize, value: usize) -> usize {
        (1usize << len) - 1 + value
    }

    fn decode(i: usize) -> (usize, usize) {
        let len = (usize::BITS - 1 - (i + 1).leading_zeros()) as usize;
        (len, i + 1 - (1usize << len))
    }

    fn word(&self, i: usize) -> Word {
        let (len, value) = Self::decode(i);
        Word::from_u64(value as u64, len)
    }

    fn members<'a>(&self, s: &'a Set) -> impl Iterator<Item = usize> + 'a {
        let size = self.size;
        (0..size).filter(move |&i| contains(s, i))
    }

    fn singleton_eps(&self) -> Set {
        let mut s = self.empty();
        insert(&mut s, 0);
        s
    }

    fn concat(&self, a: &Set, b: &Set) -> Set {
        let mut out = self.empty();
        let bs: Vec<(usize, usize)> = self.members(b).map(Self::decode).collect();
        for (la, va) in self.members(a).map(Self::decode) {
            for &(lb, vb) in &bs {
                if la + lb <= self.max_len {
                    insert(&mut out, Self::index(la + lb, (va << lb) | vb));
                }
            }
        }
        out
    }

    fn eval(&self, r: &Regex) -> Set {
        match r {
            Regex::EmptySet => self.empty(),
            Regex::Epsilon => self.singleton_eps(),
            Regex::Sym(b) => {
                let mut s = self.empty();
                if self.max_len >= 1 {
                    insert(&mut s, Self::index(1, *b as usize));
                }
                s
            }
            Regex::Union(a, b) => zip(&self.eval(a), &self.eval(b), |x, y| x | y),
            Regex::Inter(a, b) => zip(&self.eval(a), &self.eval(b), |x, y| x & y),
            Regex::Compl(a) => zip(&self.eval(a), &self.full(), |x, y| !x & y),
            Regex::Concat(a, b) => self.concat(&self.eval(a), &self.eval(b)),
            Regex::Star(a) => {
                let base = self.eval(a);
                let mut acc = self.singleton_eps();
                loop {
                    let next = zip(&acc, &self.concat(&acc, &base), |x, y| x | y);
                    if next == acc {
                        return acc;
                    }
                    acc = next;
                }
            }
            Regex::Count(a, k) => {
                let base = self.eval(a);
                let mut acc = self.singleton_eps();
                for _ in 0..*k {
                    let next = self.concat(&acc, &base);
                    // A^j is either increasing (ε ∈ A) or empty past length L
                    if next == acc {
                        break;
                    }
                    let empty = next.iter().all(|&x| x == 0);
                    acc = next;
                    if empty {
                        break;
                    }
                }
                acc
            }
        }
    }
}

fn insert(s: &mut Set, i: usize) {
    s[i / 64] |= 1 << (i % 64);
}

fn contains(s: &Set, i: usize) -> bool {
    s[i / 64] >> (i % 64) & 1 == 1
}

fn zip(a: &Set, b: &Set, f: impl Fn(u64, u64) -> u64) -> Set {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::{desugar_count, parse};
    use crate::word::w;

    fn words(list: &[&str]) -> BTreeSet<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_language(&Regex::any_symbol(), 1).unwrap().words, words(&["0", "1"]));
        assert_eq!(
            enumerate_language(&Regex::compl(Regex::EmptySet), 1).unwrap().words,
            words(&["", "0", "1"])
        );
        assert_eq!(
            enumerate_language(&Regex::star(Regex::one()), 3).unwrap().words,
            words(&["", "1", "11", "111"])
        );
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_language(&Regex::one(), 13),
            Err(Error::BoundExceeded { requested: 13, bound: 12 })
        );
        assert!(enumerate_language_bounded(&Regex::one(), 13, 13).is_ok());
    }

    #[test]
    fn equivalence_examples() {
        assert_eq!(
            equivalent_upto(&Regex::zero(), &Regex::one(), 1).unwrap(),
            Verdict::Differ(w("0"))
        );
        let r = parse("(0|1)*1{2}&!(01)*").unwrap();
        assert!(equivalent_upto(&Regex::compl(Regex::compl(r.clone())), &r, 5).unwrap().is_equivalent());
        assert!(equivalent_upto(&r, &desugar_count(&r), 6).unwrap().is_equivalent());
    }

    #[test]
    fn count_with_nullable_body_and_huge_exponent() {
        let l = enumerate_language(&parse("(e|1){1000000000}").unwrap(), 3).unwrap();
        assert_eq!(l.words, words(&["", "1", "11", "111"]));
        let l = enumerate_language(&parse("1{1000000000}").unwrap(), 3).unwrap();
        assert!(l.words.is_empty());
    }
}
