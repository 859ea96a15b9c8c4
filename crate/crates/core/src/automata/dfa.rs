use std::collections::HashMap;

use super::Dfa;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
}

/// Same states and moves with the accepting states flipped.
pub fn complement_dfa(d: &Dfa) -> Dfa {
    Dfa { initial: d.initial, delta: d.delta.clone(), finals: d.finals.iter().map(|f| !f).collect() }
}

/// Product automaton over the pairs reachable from the two initial states.
pub fn product(a: &Dfa, b: &Dfa, op: BoolOp) -> Dfa {
    let mut index = HashMap::new();
    let mut pairs = vec![(a.initial, b.initial)];
    index.insert((a.initial, b.initial), 0usize);
    let mut delta = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (p, q) = pairs[i];
        let mut row = [0; 2];
        for (bit, slot) in row.iter_mut().enumerate() {
            let next = (a.delta[p][bit], b.delta[q][bit]);
            *slot = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                pairs.len() - 1
            });
        }
        delta.push(row);
        i += 1;
    }
    let finals = pairs
        .iter()
        .map(|&(p, q)| match op {
            BoolOp::And => a.finals[p] && b.finals[q],
            BoolOp::Or => a.finals[p] || b.finals[q],
        })
        .collect();
    Dfa { initial: 0, delta, finals }
}

/// Minimal equivalent DFA by partition refinement, restricted to reachable
/// states and numbered in BFS order from the initial state, so equal
/// languages give identical outputs.
pub fn minimize(d: &Dfa) -> Dfa {
    let order = d.reachable();
    let mut local = vec![usize::MAX; d.state_count()];
    for (i, &s) in order.iter().enumerate() {
        local[s] = i;
    }
    let delta: Vec<[usize; 2]> = order.iter().map(|&s| d.delta[s].map(|t| local[t])).collect();
    let finals: Vec<bool> = order.iter().map(|&s| d.finals[s]).collect();

    let mut class: Vec<usize> = finals.iter().map(|&f| f as usize).collect();
    let mut classes = normalize(&mut class);
    loop {
        let mut sig_index = HashMap::new();
        let mut next = vec![0; class.len()];
        for s in 0..class.len() {
            let sig = (class[s], class[delta[s][0]], class[delta[s][1]]);
            let fresh = sig_index.len();
            next[s] = *sig_index.entry(sig).or_insert(fresh);
        }
        let count = sig_index.len();
        class = next;
        if count == classes {
            break;
        }
        classes = count;
    }

    // renumber classes in BFS order
    let mut id = vec![usize::MAX; classes];
    let mut reps = vec![0usize];
    id[class[0]] = 0;
    let mut i = 0;
    while i < reps.len() {
        for t in delta[reps[i]] {
            if id[class[t]] == usize::MAX {
                id[class[t]] = reps.len();
                reps.push(t);
            }
        }
        i += 1;
    }
    Dfa {
        initial: 0,
        delta: reps.iter().map(|&s| delta[s].map(|t| id[class[t]])).collect(),
        finals: reps.iter().map(|&s| finals[s]).collect(),
    }
}

fn normalize(class: &mut [usize]) -> usize {
    let mut seen = HashMap::new();
    for c in class.iter_mut() {
        let fresh = seen.len();
        *c = *seen.entry(*c).or_insert(fresh);
    }
    seen.len()
}
