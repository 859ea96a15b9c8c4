//! Goldreich's local pseudorandom generator: a seed `x ∈ {0,1}^n`, `m`
//! ordered hyperedges of `k` distinct seed positions, and a predicate `P`
//! on `k` bits. Output bit `i` is `P(x|E_i)`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::word::Word;

/// Ordered tuple of distinct 1-based vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &v in &vertices {
            if v == 0 || v > n {
                return Err(Error::InvalidEdge(format!("vertex {v} outside [1, {n}]")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidEdge(format!("vertex {v} repeated")));
            }
        }
        Ok(Hyperedge(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Uniform over all `n(n-1)...(n-k+1)` ordered tuples: each coordinate is
    /// drawn uniformly from `[n]` and redrawn while it collides with an
    /// earlier one.
    pub fn sample<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Self> {
        if k > n {
            return Err(Error::Config(format!("locality {k} exceeds vertex count {n}")));
        }
        let mut used = vec![false; n + 1];
        let mut vertices = Vec::with_capacity(k);
        for _ in 0..k {
            let v = loop {
                let v = rng.gen_range(1..=n);
                if !used[v] {
                    break v;
                }
            };
            used[v] = true;
            vertices.push(v);
        }
        Ok(Hyperedge(vertices))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Hyperedge>,
}

pub fn sample_hypergraph<R: Rng + ?Sized>(n: usize, m: usize, k: usize, rng: &mut R) -> Result<Hypergraph> {
    let edges = (0..m).map(|_| Hyperedge::sample(n, k, rng)).collect::<Result<_>>()?;
    Ok(Hypergraph { n, k, edges })
}

/// `x|E = (x_{i_1}, ..., x_{i_k})`.
pub fn restrict(x: &Word, e: &Hyperedge) -> Result<Word> {
    e.vertices()
        .iter()
        .map(|&i| x.at(i).ok_or(Error::IndexOutOfRange { index: i, n: x.len() }))
        .collect()
}

/// Truth table of a `k`-ary predicate. Entry `v` is `P(u)` for the word `u`
/// whose big-endian value is `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Predicate {
    k: usize,
    table: Vec<bool>,
}

impl Predicate {
    pub fn new(k: usize, table: Vec<bool>) -> Result<Self> {
        if k >= usize::BITS as usize || table.len() != 1 << k {
            return Err(Error::Config(format!("predicate of arity {k} needs 2^{k} table entries, got {}", table.len())));
        }
        Ok(Predicate { k, table })
    }

    pub fn from_fn(k: usize, f: impl Fn(&[bool]) -> bool) -> Self {
        let table = Word::all_of_len(k).map(|u| f(u.bits())).collect();
        Predicate { k, table }
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn eval(&self, u: &Word) -> Result<bool> {
        if u.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, actual: u.len() });
        }
        Ok(self.table[u.to_u64() as usize])
    }

    /// Inputs with `P(u) = 1`, lexicographically.
    pub fn support(&self) -> impl Iterator<Item = Word> + '_ {
        let k = self.k;
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(v, _)| Word::from_u64(v as u64, k))
    }
}

/// Stand-in predicate `P(u) = u1 ⊕ (u2 ∧ u3)` for `k ≥ 3` (remaining inputs
/// ignored); `u1 ⊕ u2` for `k = 2` and the identity for `k = 1`. No
/// security is claimed for it.
pub fn default_predicate(k: usize) -> Result<Predicate> {
    match k {
        0 => Err(Error::Config("predicate arity must be at least 1".into())),
        1 => Ok(Predicate::from_fn(1, |u| u[0])),
        2 => Ok(Predicate::from_fn(2, |u| u[0] ^ u[1])),
        _ => Ok(Predicate::from_fn(k, |u| u[0] ^ (u[1] && u[2]))),
    }
}

/// `f_{P,G}(x) = (P(x|E_1), ..., P(x|E_m))`.
pub fn prg_output(p: &Predicate, g: &Hypergraph, x: &Word) -> Result<Word> {
    if p.arity() != g.k {
        return Err(Error::Config(format!("predicate arity {} but hyperedges of size {}", p.arity(), g.k)));
    }
    if x.len() != g.n {
        return Err(Error::LengthMismatch { expected: g.n, actual: x.len() });
    }
    g.edges.iter().map(|e| p.eval(&restrict(x, e)?)).collect()
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pred {} {}", self.k, Word::new(self.table.clone()))
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let err = |msg: String| Error::Format { line: 1, msg };
        match toks.as_slice() {
            ["pred", k, table] => {
                let k: usize = k.parse().map_err(|_| err(format!("bad arity {k:?}")))?;
                let table: Word = table.parse().map_err(|e: Error| err(e.to_string()))?;
                Predicate::new(k, table.into_bits()).map_err(|e| err(e.to_string()))
            }
            _ => Err(err("expected 'pred <k> <table>'".into())),
        }
    }
}

/// `hg <n> <m> <k>` followed by one line of `k` 1-based indices per edge.
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hg {} {} {}", self.n, self.edges.len(), self.k)?;
        for e in &self.edges {
            let parts: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: String| Error::Format { line, msg };
        let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [n, m, k] = match nums.as_slice() {
            ["hg", rest @ ..] if rest.len() == 3 => {
                let mut out = [0usize; 3];
                for (slot, tok) in out.iter_mut().zip(rest) {
                    *slot = tok.parse().map_err(|_| err(hl, format!("bad number {tok:?}")))?;
                }
                out
            }
            _ => return Err(err(hl, "expected 'hg <n> <m> <k>'".into())),
        };
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            let vertices = text
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(line, format!("bad vertex {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if vertices.len() != k {
                return Err(err(line, format!("edge has {} vertices, expected {k}", vertices.len())));
            }
            edges.push(Hyperedge::new(vertices, n).map_err(|e| err(line, e.to_string()))?);
        }
        if edges.len() != m {
            return Err(err(hl, format!("header promises {m} edges, found {}", edges.len())));
        }
        Ok(Hypergraph { n, k, edges })
    }
}
