use super::Regex;
use crate::word::ceil_log2;

/// Size of `r` together with a count of `r{0}` nodes met while counting is
/// disallowed. Those nodes contribute 0 to the size although they denote `{ε}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub size: u64,
    pub zero_count_nodes: usize,
}

/// Atoms cost 1; union, star, intersection and complement add 1;
/// concatenation adds nothing; `r{k}` costs `|r| + ceil(log2 k)` when
/// counting is allowed and `k * |r|` otherwise. Arithmetic saturates.
pub fn size_of(r: &Regex, counting_allowed: bool) -> u64 {
    size_report(r, counting_allowed).size
}

pub fn size_report(r: &Regex, counting_allowed: bool) -> SizeReport {
    let mut zero_count_nodes = 0;
    let size = measure(r, counting_allowed, &mut zero_count_nodes);
    SizeReport { size, zero_count_nodes }
}

fn measure(r: &Regex, counting: bool, zeros: &mut usize) -> u64 {
    match r {
        Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => 1,
        Regex::Concat(a, b) => measure(a, counting, zeros).saturating_add(measure(b, counting, zeros)),
        Regex::Union(a, b) | Regex::Inter(a, b) => measure(a, counting, zeros)
            .saturating_add(measure(b, counting, zeros))
            .saturating_add(1),
        Regex::Star(a) | Regex::Compl(a) => measure(a, counting, zeros).saturating_add(1),
        Regex::Count(a, k) => {
            let inner = measure(a, counting, zeros);
            if counting {
                inner.saturating_add(ceil_log2(*k))
            } else {
                if *k == 0 {
                    *zeros += 1;
                }
                inner.saturating_mul(*k)
            }
        }
    }
}
