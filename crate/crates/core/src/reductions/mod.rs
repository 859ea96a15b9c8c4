//! Compilers from Boolean functions on `{0,1}^n` to regular expressions
//! whose length-`n` members are exactly the satisfying assignments.

mod dnf;
mod formula;

pub use dnf::{dnf_to_re, Dnf, Literal};
pub use formula::{formula_to_re, nnf, BooleanFormula, Formula, Target};

use crate::error::{Error, Result};
use crate::regex::{literal_word, Regex};
use crate::word::Word;

/// `x` followed by zeros up to `target_len`.
pub fn pad_input(x: &Word, target_len: usize) -> Result<Word> {
    if target_len < x.len() {
        return Err(Error::LengthMismatch { expected: x.len(), actual: target_len });
    }
    let mut out = x.clone();
    out.extend_from(&Word::zeros(target_len - x.len()));
    Ok(out)
}

/// `r` followed by `0^pad`: accepts `pad_input(x, |x| + pad)` iff `r` accepts `x`.
pub fn pad_regex(r: &Regex, pad: usize) -> Regex {
    if pad == 0 {
        return r.clone();
    }
    Regex::concat(r.clone(), literal_word(&Word::zeros(pad)))
}
