//! Word membership by symbol-by-symbol derivatives, plus an independent
//! set-semantics oracle over truncated languages.

mod arena;
mod enumerate;

pub use arena::Matcher;
pub use enumerate::{
    enumerate_language, enumerate_language_bounded, equivalent_upto, LanguageSample, Verdict,
    DEFAULT_LENGTH_BOUND,
};

use crate::regex::Regex;
use crate::word::Word;

/// `true` iff `ε ∈ L(r)`.
pub fn nullable(r: &Regex) -> bool {
    match r {
        Regex::EmptySet | Regex::Sym(_) => false,
        Regex::Epsilon | Regex::Star(_) => true,
        Regex::Union(a, b) => nullable(a) || nullable(b),
        Regex::Concat(a, b) | Regex::Inter(a, b) => nullable(a) && nullable(b),
        Regex::Compl(a) => !nullable(a),
        Regex::Count(a, k) => *k == 0 || nullable(a),
    }
}

/// Simplified derivative of `r` by `bit`: `L(result) = { w : bit·w ∈ L(r) }`.
pub fn derivative(r: &Regex, bit: bool) -> Regex {
    let mut m = Matcher::new(r);
    let d = m.step(m.root(), bit);
    m.to_regex(d)
}

/// Whole-word membership `w ∈ L(r)`.
pub fn matches(r: &Regex, w: &Word) -> bool {
    Matcher::new(r).matches(w)
}
