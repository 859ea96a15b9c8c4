use super::config::{GadgetConfig, Variant};
use crate::regex::{any_block, literal_word, size_of, Regex};
use crate::word::{bin_index, ceil_log2, Word};

/// Union of `bin(i)` over the positions `i` (ascending) with `x_i = b`;
/// `@` when there are none.
pub fn build_ib(x: &Word, b: bool, n: usize) -> Regex {
    Regex::union_all(
        (1..=n)
            .filter(|&i| x.at(i) == Some(b))
            .map(|i| literal_word(&bin_index(i, n).expect("n is a power of two")))
            .collect::<Vec<_>>(),
    )
}

/// `I_{u_1} ... I_{u_k}`, followed by `(0|1)*` in the starred variant.
pub fn build_ru(x: &Word, u: &Word, cfg: &GadgetConfig) -> Regex {
    let mut parts: Vec<Regex> = u.bits().iter().map(|&b| build_ib(x, b, cfg.n)).collect();
    if cfg.variant == Variant::Starred {
        parts.push(Regex::universe());
    }
    Regex::concat_all(parts)
}

/// Union of `R_u` over the support of the predicate (lexicographic `u`).
/// Star-free and counting variants append the `N - k·log2 n` suffix once.
pub fn build_rx(x: &Word, cfg: &GadgetConfig) -> Regex {
    let branches: Vec<Regex> = cfg.predicate.support().map(|u| build_ru(x, &u, cfg)).collect();
    if branches.is_empty() {
        return Regex::EmptySet;
    }
    with_suffix(Regex::union_all(branches), cfg)
}

/// Accepts the words whose blocks `a < b` name the same index, branches in
/// `(a, b, i)` order. `@` for `k = 1`.
pub fn build_rdup(cfg: &GadgetConfig) -> Regex {
    let bits = cfg.block_bits() as u64;
    let k = cfg.k as u64;
    let counting = cfg.variant.counting();
    let mut branches = Vec::new();
    for a in 1..=k {
        for b in a + 1..=k {
            for i in 1..=cfg.n {
                let name = literal_word(&bin_index(i, cfg.n).expect("n is a power of two"));
                let tail = match cfg.variant {
                    Variant::Starred => Some(Regex::universe()),
                    _ => any_block((k - b) * bits, counting),
                };
                let parts = [
                    any_block((a - 1) * bits, counting),
                    Some(name.clone()),
                    any_block((b - a - 1) * bits, counting),
                    Some(name),
                    tail,
                ];
                branches.push(Regex::concat_all(parts.into_iter().flatten().collect::<Vec<_>>()));
            }
        }
    }
    if branches.is_empty() {
        return Regex::EmptySet;
    }
    with_suffix(Regex::union_all(branches), cfg)
}

fn with_suffix(r: Regex, cfg: &GadgetConfig) -> Regex {
    match cfg.variant {
        Variant::Starred => r,
        _ => match any_block(cfg.suffix_bits() as u64, cfg.variant.counting()) {
            Some(pad) => Regex::concat(r, pad),
            None => r,
        },
    }
}

/// `R = R_x | R_dup`.
pub fn build_target(x: &Word, cfg: &GadgetConfig) -> Regex {
    Regex::union(build_rx(x, cfg), build_rdup(cfg))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetSize {
    pub measured: u64,
    pub closed_form: u64,
}

/// Size of the built target (with counting allowed exactly for the counting
/// variant) next to [`closed_form_size`].
pub fn gadget_size(x: &Word, cfg: &GadgetConfig) -> GadgetSize {
    GadgetSize {
        measured: size_of(&build_target(x, cfg), cfg.variant.counting()),
        closed_form: closed_form_size(x, cfg),
    }
}

/// Size of `(0|1){e}` as emitted: nothing for `e = 0`, 3 for `e = 1`,
/// `3 + ceil(log2 e)` as a counting node, `3e` written out.
fn gap(e: u64, counting: bool) -> u64 {
    match e {
        0 => 0,
        1 => 3,
        _ if counting => 3 + ceil_log2(e),
        _ => 3 * e,
    }
}

/// Union of `parts` items of total size `total`, or `@` when empty.
fn union_size(parts: u64, total: u64) -> u64 {
    if parts == 0 {
        1
    } else {
        total + parts - 1
    }
}

/// Size of the target computed from the parameters alone, without building it.
///
/// With `L = log2 n`, `c_b` positions holding `b`, `|S|` the predicate support
/// and `e = N - kL`:
/// `|I_b| = c_b·L + c_b - 1` (or 1 when `c_b = 0`),
/// `|R_u| = Σ_j |I_{u_j}| (+4 starred)`,
/// `|R_x| = Σ_u |R_u| + |S| - 1 (+gap(e) unstarred)`,
/// each duplicate branch costs `gap((a-1)L) + 2L + gap((b-a-1)L)` plus 4
/// (starred) or `gap((k-b)L)`, and `|R_dup|` adds `C(k,2)·n - 1` unions
/// (plus `gap(e)` unstarred). The target adds one union.
pub fn closed_form_size(x: &Word, cfg: &GadgetConfig) -> u64 {
    let l = cfg.block_bits() as u64;
    let n = cfg.n as u64;
    let k = cfg.k as u64;
    let counting = cfg.variant.counting();
    let starred = cfg.variant == Variant::Starred;
    let suffix = if starred { 0 } else { gap(cfg.suffix_bits() as u64, counting) };

    let ones = x.weight() as u64;
    let ib = |b: bool| {
        let c = if b { ones } else { n - ones };
        union_size(c, c * l)
    };
    let support: Vec<Word> = cfg.predicate.support().collect();
    let rx = if support.is_empty() {
        1
    } else {
        let ru_total: u64 = support
            .iter()
            .map(|u| u.bits().iter().map(|&b| ib(b)).sum::<u64>() + if starred { 4 } else { 0 })
            .sum();
        union_size(support.len() as u64, ru_total) + suffix
    };

    let mut branches = 0u64;
    let mut branch_total = 0u64;
    for a in 1..=k {
        for b in a + 1..=k {
            let tail = if starred { 4 } else { gap((k - b) * l, counting) };
            branches += n;
            branch_total += n * (gap((a - 1) * l, counting) + 2 * l + gap((b - a - 1) * l, counting) + tail);
        }
    }
    let rdup = if branches == 0 { 1 } else { union_size(branches, branch_total) + suffix };
    rx + rdup + 1
}
