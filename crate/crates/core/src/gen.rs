//! Seeded random instances for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::reductions::{BooleanFormula, Dnf, Formula, Literal};
use crate::regex::{size_of, OperatorProfile, Regex};
use crate::word::{ceil_log2, Word};

/// Largest repetition count drawn for counting nodes.
pub const MAX_REPS: u64 = 5;

/// Random expression with `size_of(r, true) <= max_size`, using only the
/// operators `profile` allows (union and concatenation are always allowed).
pub fn random_regex<R: Rng + ?Sized>(rng: &mut R, max_size: u64, profile: OperatorProfile) -> Regex {
    assert!(max_size >= 1, "no expression has size 0");
    grow(rng, max_size, &profile)
}

fn atom<R: Rng + ?Sized>(rng: &mut R) -> Regex {
    match rng.gen_range(0..10) {
        0 => Regex::EmptySet,
        1 => Regex::Epsilon,
        2..=5 => Regex::Sym(false),
        _ => Regex::Sym(true),
    }
}

fn grow<R: Rng + ?Sized>(rng: &mut R, budget: u64, p: &OperatorProfile) -> Regex {
    if budget == 1 || rng.gen_ratio(1, 5) {
        return atom(rng);
    }
    let mut ops = vec!["concat"];
    if budget >= 3 {
        ops.push("union");
        if p.allow_inter {
            ops.push("inter");
        }
    }
    if p.allow_star {
        ops.push("star");
    }
    if p.allow_compl {
        ops.push("compl");
    }
    if p.allow_count {
        ops.push("count");
    }
    match *ops.choose(rng).expect("nonempty") {
        "concat" => {
            let left = rng.gen_range(1..budget);
            let a = grow(rng, left, p);
            let b = grow(rng, budget - size_of(&a, true), p);
            Regex::concat(a, b)
        }
        op @ ("union" | "inter") => {
            let left = rng.gen_range(1..budget - 1);
            let a = grow(rng, left, p);
            let b = grow(rng, budget - 1 - size_of(&a, true), p);
            if op == "union" {
                Regex::union(a, b)
            } else {
                Regex::inter(a, b)
            }
        }
        "star" => Regex::star(grow(rng, budget - 1, p)),
        "compl" => Regex::compl(grow(rng, budget - 1, p)),
        _ => {
            let reps = rng.gen_range(0..=MAX_REPS);
            let cost = ceil_log2(reps);
            if cost >= budget {
                return atom(rng);
            }
            Regex::count(grow(rng, budget - cost, p), reps)
        }
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    (0..len).map(|_| rng.gen::<bool>()).collect()
}

/// DNF on `1..=max_vars` variables with `1..=max_terms` terms. Each term
/// picks a uniform number of distinct variables (possibly none) with random
/// signs.
pub fn random_dnf<R: Rng + ?Sized>(rng: &mut R, max_vars: usize, max_terms: usize) -> Dnf {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_terms);
    let mut vars: Vec<usize> = (1..=n).collect();
    let terms = (0..m)
        .map(|_| {
            vars.shuffle(rng);
            let len = rng.gen_range(0..=n);
            vars[..len].iter().map(|&var| Literal { var, positive: rng.gen() }).collect()
        })
        .collect();
    Dnf::new(n, terms).expect("distinct in-range variables")
}

/// Formula over `min_vars..=max_vars` variables with at most `max_size` nodes.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, min_vars: usize, max_vars: usize, max_size: usize) -> BooleanFormula {
    let n = rng.gen_range(min_vars..=max_vars);
    let target = rng.gen_range(1..=max_size);
    BooleanFormula::new(n, formula_of_size(rng, n, target)).expect("variables within range")
}

fn formula_of_size<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> Formula {
    match size {
        0 | 1 => Formula::var(rng.gen_range(1..=n)),
        2 => Formula::not(formula_of_size(rng, n, 1)),
        _ if rng.gen_ratio(1, 5) => Formula::not(formula_of_size(rng, n, size - 1)),
        _ => {
            let left = rng.gen_range(1..=size - 2);
            let a = formula_of_size(rng, n, left);
            let b = formula_of_size(rng, n, size - 1 - left);
            if rng.gen() {
                Formula::and(a, b)
            } else {
                Formula::or(a, b)
            }
        }
    }
}
