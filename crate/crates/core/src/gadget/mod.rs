//! Hyperedge encodings and the target expression that labels every
//! length-`N` word by the local-PRG predicate on the encoded hyperedge.
//!
//! A word is read as `k` blocks of `log2 n` bits naming seed positions,
//! followed by `N - k·log2 n` ignored bits. If two blocks name the same
//! position the word is labeled 1; otherwise its label is `P(x|E)`.

mod build;
mod config;
mod encode;
mod oracle;

pub use build::{build_ib, build_rdup, build_ru, build_rx, build_target, closed_form_size, gadget_size, GadgetSize};
pub use config::{format_ratio, parse_ratio, GadgetConfig, Variant};
pub use encode::{
    decode_compressed, decode_onehot, encode_compressed, encode_onehot, is_valid_extended, validity_probability,
};
pub use oracle::{
    format_examples, make_challenge, parse_examples, simulate_oracle, Challenge, ChallengeMode, LabeledExample,
};

use crate::prg::{restrict, Predicate};
use crate::word::Word;

/// Label the target expression assigns to a length-`N` word, computed
/// directly from the block decoding: 1 on repeated indices, `P(x|E)` otherwise.
pub fn reference_label(x: &Word, p: &Predicate, z: &Word, n: usize, k: usize) -> bool {
    let indices = decode_compressed(z, n, k).expect("word shorter than k blocks");
    let mut seen = vec![false; n + 1];
    for &i in &indices {
        if std::mem::replace(&mut seen[i], true) {
            return true;
        }
    }
    let e = crate::prg::Hyperedge::new(indices, n).expect("distinct indices");
    p.eval(&restrict(x, &e).expect("seed covers [n]")).expect("arity")
}
