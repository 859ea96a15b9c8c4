use super::Dfa;
use crate::regex::Regex;

/// Plain expression for `L(d)` by state elimination.
///
/// A fresh start and a fresh accept state are attached with ε-edges; states
/// that can reach an accepting state are then eliminated, first those that
/// are neither initial nor accepting (lowest index first), then the rest.
pub fn dfa_to_re(d: &Dfa) -> Regex {
    let n = d.state_count();
    let live = coreachable(d);
    if !live[d.initial] {
        return Regex::EmptySet;
    }
    let start = n;
    let accept = n + 1;
    let size = n + 2;
    let mut edge: Vec<Vec<Option<Regex>>> = vec![vec![None; size]; size];
    edge[start][d.initial] = Some(Regex::Epsilon);
    for s in (0..n).filter(|&s| live[s]) {
        if d.finals[s] {
            edge[s][accept] = Some(Regex::Epsilon);
        }
        for bit in [false, true] {
            let t = d.delta[s][bit as usize];
            if live[t] {
                let label = alt(edge[s][t].take(), Some(Regex::Sym(bit)));
                edge[s][t] = label;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).filter(|&s| live[s] && s != d.initial && !d.finals[s]).collect();
    order.extend((0..n).filter(|&s| live[s] && (s == d.initial || d.finals[s])));
    let mut alive = vec![true; size];
    for s in order {
        alive[s] = false;
        let lp = Some(edge[s][s].take().map_or(Regex::Epsilon, |l| loop_of(&l)));
        let ins: Vec<usize> = (0..size).filter(|&p| alive[p] && edge[p][s].is_some()).collect();
        let outs: Vec<usize> = (0..size).filter(|&q| alive[q] && edge[s][q].is_some()).collect();
        for &p in &ins {
            for &q in &outs {
                let through = seq(seq(edge[p][s].clone(), lp.clone()), edge[s][q].clone());
                let merged = alt(edge[p][q].take(), through);
                edge[p][q] = merged;
            }
        }
        for row in edge.iter_mut() {
            row[s] = None;
        }
        edge[s].iter_mut().for_each(|e| *e = None);
    }
    edge[start][accept].take().unwrap_or(Regex::EmptySet)
}

fn coreachable(d: &Dfa) -> Vec<bool> {
    let n = d.state_count();
    let mut live = d.finals.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..n {
            if !live[s] && d.delta[s].iter().any(|&t| live[t]) {
                live[s] = true;
                changed = true;
            }
        }
    }
    live
}

// `None` is the empty language throughout.

fn alt(a: Option<Regex>, b: Option<Regex>) -> Option<Regex> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) if x == y => Some(x),
        (Some(x), Some(y)) => Some(Regex::union(x, y)),
    }
}

fn seq(a: Option<Regex>, b: Option<Regex>) -> Option<Regex> {
    match (a?, b?) {
        (Regex::Epsilon, y) => Some(y),
        (x, Regex::Epsilon) => Some(x),
        (x, y) => Some(Regex::concat(x, y)),
    }
}

fn loop_of(r: &Regex) -> Regex {
    match r {
        Regex::Epsilon => Regex::Epsilon,
        Regex::Star(_) => r.clone(),
        _ => Regex::star(r.clone()),
    }
}
