//! Extended regular expressions over `{0,1}`.
//!
//! Besides union, concatenation and star, the AST carries intersection,
//! complement and bounded counting `r{k}`. All values are immutable trees;
//! every operation here is a pure function.

mod parse;
mod print;
mod size;

pub use parse::parse;
pub use print::{print, print_with, Style};
pub use size::{size_of, size_report, SizeReport};

use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regex {
    EmptySet,
    Epsilon,
    /// `false` is the symbol 0, `true` the symbol 1.
    Sym(bool),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Inter(Box<Regex>, Box<Regex>),
    Compl(Box<Regex>),
    /// `r{k}`: exactly `k` consecutive words of `r`; `r{0}` denotes `{ε}`.
    Count(Box<Regex>, u64),
}

/// Which extended operators an expression may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorProfile {
    pub allow_star: bool,
    pub allow_inter: bool,
    pub allow_compl: bool,
    pub allow_count: bool,
}

impl OperatorProfile {
    /// Union, concatenation and star.
    pub const PLAIN: Self = Self { allow_star: true, allow_inter: false, allow_compl: false, allow_count: false };
    /// Union and concatenation only.
    pub const STAR_FREE: Self = Self { allow_star: false, allow_inter: false, allow_compl: false, allow_count: false };
    /// Union, concatenation and counting.
    pub const COUNTING: Self = Self { allow_star: false, allow_inter: false, allow_compl: false, allow_count: true };
    pub const WITH_INTER: Self = Self { allow_star: true, allow_inter: true, allow_compl: false, allow_count: true };
    pub const WITH_COMPL: Self = Self { allow_star: true, allow_inter: false, allow_compl: true, allow_count: true };
    pub const FULL: Self = Self { allow_star: true, allow_inter: true, allow_compl: true, allow_count: true };

    /// First disallowed operator found in `r`, if any.
    ///
    /// Count nodes never violate a profile: without counting they stand for
    /// repeated concatenation and are sized that way.
    pub fn violation(&self, r: &Regex) -> Option<&'static str> {
        let mut stack = vec![r];
        while let Some(node) = stack.pop() {
            match node {
                Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => {}
                Regex::Union(a, b) | Regex::Concat(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Regex::Star(a) => {
                    if !self.allow_star {
                        return Some("star");
                    }
                    stack.push(a);
                }
                Regex::Inter(a, b) => {
                    if !self.allow_inter {
                        return Some("intersection");
                    }
                    stack.push(a);
                    stack.push(b);
                }
                Regex::Compl(a) => {
                    if !self.allow_compl {
                        return Some("complement");
                    }
                    stack.push(a);
                }
                Regex::Count(a, _) => stack.push(a),
            }
        }
        None
    }

    pub fn conforms(&self, r: &Regex) -> bool {
        self.violation(r).is_none()
    }
}

impl Regex {
    pub fn zero() -> Regex {
        Regex::Sym(false)
    }

    pub fn one() -> Regex {
        Regex::Sym(true)
    }

    pub fn sym(b: bool) -> Regex {
        Regex::Sym(b)
    }

    /// `(0|1)`
    pub fn any_symbol() -> Regex {
        Regex::union(Regex::zero(), Regex::one())
    }

    /// `(0|1)*`
    pub fn universe() -> Regex {
        Regex::star(Regex::any_symbol())
    }

    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    pub fn inter(a: Regex, b: Regex) -> Regex {
        Regex::Inter(Box::new(a), Box::new(b))
    }

    pub fn compl(a: Regex) -> Regex {
        Regex::Compl(Box::new(a))
    }

    pub fn count(a: Regex, reps: u64) -> Regex {
        Regex::Count(Box::new(a), reps)
    }

    /// Right-nested union of `parts`; `EmptySet` when there are none.
    pub fn union_all<I>(parts: I) -> Regex
    where
        I: IntoIterator<Item = Regex>,
        I::IntoIter: DoubleEndedIterator,
    {
        parts
            .into_iter()
            .rev()
            .reduce(|acc, r| Regex::union(r, acc))
            .unwrap_or(Regex::EmptySet)
    }

    /// Right-nested concatenation of `parts`; `Epsilon` when there are none.
    pub fn concat_all<I>(parts: I) -> Regex
    where
        I: IntoIterator<Item = Regex>,
        I::IntoIter: DoubleEndedIterator,
    {
        parts
            .into_iter()
            .rev()
            .reduce(|acc, r| Regex::concat(r, acc))
            .unwrap_or(Regex::Epsilon)
    }

    /// Right-nested intersection of `parts`; `!@` (all words) when there are none.
    pub fn inter_all<I>(parts: I) -> Regex
    where
        I: IntoIterator<Item = Regex>,
        I::IntoIter: DoubleEndedIterator,
    {
        parts
            .into_iter()
            .rev()
            .reduce(|acc, r| Regex::inter(r, acc))
            .unwrap_or_else(|| Regex::compl(Regex::EmptySet))
    }

    pub fn has_count(&self) -> bool {
        self.any_node(&|r| matches!(r, Regex::Count(..)))
    }

    pub fn has_star(&self) -> bool {
        self.any_node(&|r| matches!(r, Regex::Star(_)))
    }

    pub fn is_plain(&self) -> bool {
        OperatorProfile::PLAIN.conforms(self)
    }

    fn any_node(&self, pred: &dyn Fn(&Regex) -> bool) -> bool {
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            if pred(node) {
                return true;
            }
            match node {
                Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => {}
                Regex::Union(a, b) | Regex::Concat(a, b) | Regex::Inter(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Regex::Star(a) | Regex::Compl(a) | Regex::Count(a, _) => stack.push(a),
            }
        }
        false
    }

    /// Number of nodes in the tree.
    pub fn node_count(&self) -> usize {
        match self {
            Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => 1,
            Regex::Union(a, b) | Regex::Concat(a, b) | Regex::Inter(a, b) => {
                1 + a.node_count() + b.node_count()
            }
            Regex::Star(a) | Regex::Compl(a) | Regex::Count(a, _) => 1 + a.node_count(),
        }
    }
}

/// Replaces every `r{k}` by `k` right-nested copies of `r`; `r{0}` becomes `e`.
pub fn desugar_count(r: &Regex) -> Regex {
    match r {
        Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => r.clone(),
        Regex::Union(a, b) => Regex::union(desugar_count(a), desugar_count(b)),
        Regex::Concat(a, b) => Regex::concat(desugar_count(a), desugar_count(b)),
        Regex::Inter(a, b) => Regex::inter(desugar_count(a), desugar_count(b)),
        Regex::Star(a) => Regex::star(desugar_count(a)),
        Regex::Compl(a) => Regex::compl(desugar_count(a)),
        Regex::Count(a, k) => {
            let inner = desugar_count(a);
            Regex::concat_all(std::iter::repeat_n(inner, *k as usize).collect::<Vec<_>>())
        }
    }
}

/// Expression denoting exactly `{w}`.
pub fn literal_word(w: &Word) -> Regex {
    Regex::concat_all(w.bits().iter().map(|&b| Regex::Sym(b)).collect::<Vec<_>>())
}

/// `(0|1){e}` written out as `e` concatenated copies, or as a counting node
/// when `counting` is set. `e = 0` yields `None` so callers can omit the gap;
/// `e = 1` is always the bare `(0|1)`.
pub fn any_block(e: u64, counting: bool) -> Option<Regex> {
    match e {
        0 => None,
        1 => Some(Regex::any_symbol()),
        _ if counting => Some(Regex::count(Regex::any_symbol(), e)),
        _ => Some(Regex::concat_all(
            std::iter::repeat_n(Regex::any_symbol(), e as usize).collect::<Vec<_>>(),
        )),
    }
}
