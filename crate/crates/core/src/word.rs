//! Binary words and the index encoding used by the gadget.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over `{0,1}`.
///
/// Words order shortlex: shorter words first, then lexicographically with
/// `0 < 1`. Iterating a `BTreeSet<Word>` therefore yields shortest words first.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<bool>);

impl Word {
    pub fn new(bits: Vec<bool>) -> Self {
        Word(bits)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        Word(vec![false; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn bits_mut(&mut self) -> &mut [bool] {
        &mut self.0
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.0
    }

    /// Bit at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<bool> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    pub fn push(&mut self, b: bool) {
        self.0.push(b);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    /// Number of 1 bits.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Big-endian value of the bits. Words longer than 64 bits are truncated
    /// to their last 64.
    pub fn to_u64(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    /// `value` written big-endian in exactly `len` bits.
    pub fn from_u64(value: u64, len: usize) -> Word {
        Word((0..len).rev().map(|s| s < 64 && (value >> s) & 1 == 1).collect())
    }

    /// All words of exactly `len` bits, in lexicographic order.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64, "cannot enumerate words of length {len}");
        (0..1u64 << len).map(move |v| Word::from_u64(v, len))
    }

    /// All words of length at most `max_len`, shortlex.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(Word::all_of_len)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected {c:?} in binary word"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<bool>> for Word {
    fn from(bits: Vec<bool>) -> Self {
        Word(bits)
    }
}

impl FromIterator<bool> for Word {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Parses a word literal, panicking on malformed input. Intended for tests
/// and constants.
pub fn w(s: &str) -> Word {
    s.parse().expect("binary word literal")
}

/// `log2(n)` for a power of two `n`.
pub fn log2_exact(n: usize) -> Result<usize> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(n.trailing_zeros() as usize)
}

/// `ceil(log2 k)`, with `ceil(log2 0)` taken as 1 (one digit to write zero).
pub fn ceil_log2(k: u64) -> u64 {
    match k {
        0 => 1,
        1 => 0,
        _ => 64 - (k - 1).leading_zeros() as u64,
    }
}

/// Binary name of index `i` in `[n]`: `i - 1` big-endian in `log2 n` bits.
pub fn bin_index(i: usize, n: usize) -> Result<Word> {
    let bits = log2_exact(n)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(Word::from_u64((i - 1) as u64, bits))
}

/// Inverse of [`bin_index`] on a block of `log2 n` bits.
pub fn index_of_block(block: &[bool]) -> usize {
    block.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize) + 1
}
