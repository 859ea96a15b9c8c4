use std::collections::HashMap;

use crate::regex::Regex;
use crate::word::Word;

type Id = u32;

/// Normalized node. `Union`/`Inter` operands are sorted, deduplicated and
/// hold at least two ids, so derivative sets stay finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Empty,
    Eps,
    Sym(bool),
    Union(Vec<Id>),
    Inter(Vec<Id>),
    Concat(Id, Id),
    Star(Id),
    Compl(Id),
    Count(Id, u64),
}

const EMPTY: Id = 0;
const EPS: Id = 1;
const ALL: Id = 2;

/// Hash-consed derivative engine for one expression.
///
/// Derivatives are memoized per `(node, bit)`, so repeated matching against
/// the same expression walks a lazily built deterministic automaton.
#[derive(Debug)]
pub struct Matcher {
    nodes: Vec<Node>,
    ids: HashMap<Node, Id>,
    nullable: Vec<bool>,
    steps: HashMap<(Id, bool), Id>,
    root: Id,
}

impl Matcher {
    pub fn new(r: &Regex) -> Self {
        let mut m = Matcher {
            nodes: Vec::new(),
            ids: HashMap::new(),
            nullable: Vec::new(),
            steps: HashMap::new(),
            root: EMPTY,
        };
        assert_eq!(m.intern(Node::Empty), EMPTY);
        assert_eq!(m.intern(Node::Eps), EPS);
        assert_eq!(m.intern(Node::Compl(EMPTY)), ALL);
        m.root = m.import(r);
        m
    }

    pub(crate) fn root(&self) -> Id {
        self.root
    }

    pub fn matches(&mut self, w: &Word) -> bool {
        let mut cur = self.root;
        for &b in w.bits() {
            if cur == EMPTY {
                return false;
            }
            if cur == ALL {
                return true;
            }
            cur = self.step(cur, b);
        }
        self.nullable[cur as usize]
    }

    /// Number of distinct normalized nodes created so far.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn intern(&mut self, node: Node) -> Id {
        if let Some(&id) = self.ids.get(&node) {
            return id;
        }
        let nullable = match &node {
            Node::Empty | Node::Sym(_) => false,
            Node::Eps | Node::Star(_) => true,
            Node::Union(xs) => xs.iter().any(|&x| self.nullable[x as usize]),
            Node::Inter(xs) => xs.iter().all(|&x| self.nullable[x as usize]),
            Node::Concat(a, b) => self.nullable[*a as usize] && self.nullable[*b as usize],
            Node::Compl(a) => !self.nullable[*a as usize],
            Node::Count(a, k) => *k == 0 || self.nullable[*a as usize],
        };
        let id = self.nodes.len() as Id;
        self.nodes.push(node.clone());
        self.nullable.push(nullable);
        self.ids.insert(node, id);
        id
    }

    fn import(&mut self, r: &Regex) -> Id {
        match r {
            Regex::EmptySet => EMPTY,
            Regex::Epsilon => EPS,
            Regex::Sym(b) => self.intern(Node::Sym(*b)),
            Regex::Union(a, b) => {
                let (a, b) = (self.import(a), self.import(b));
                self.union(vec![a, b])
            }
            Regex::Inter(a, b) => {
                let (a, b) = (self.import(a), self.import(b));
                self.inter(vec![a, b])
            }
            Regex::Concat(a, b) => {
                let (a, b) = (self.import(a), self.import(b));
                self.concat(a, b)
            }
            Regex::Star(a) => {
                let a = self.import(a);
                self.star(a)
            }
            Regex::Compl(a) => {
                let a = self.import(a);
                self.compl(a)
            }
            Regex::Count(a, k) => {
                let a = self.import(a);
                self.count(a, *k)
            }
        }
    }

    fn union(&mut self, parts: Vec<Id>) -> Id {
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match &self.nodes[p as usize] {
                Node::Union(xs) => flat.extend_from_slice(xs),
                _ if p == EMPTY => {}
                _ if p == ALL => return ALL,
                _ => flat.push(p),
            }
        }
        flat.sort_unstable();
        flat.dedup();
        match flat.len() {
            0 => EMPTY,
            1 => flat[0],
            _ => self.intern(Node::Union(flat)),
        }
    }

    fn inter(&mut self, parts: Vec<Id>) -> Id {
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match &self.nodes[p as usize] {
                Node::Inter(xs) => flat.extend_from_slice(xs),
                _ if p == EMPTY => return EMPTY,
                _ if p == ALL => {}
                _ => flat.push(p),
            }
        }
        flat.sort_unstable();
        flat.dedup();
        match flat.len() {
            0 => ALL,
            1 => flat[0],
            _ => self.intern(Node::Inter(flat)),
        }
    }

    fn concat(&mut self, a: Id, b: Id) -> Id {
        if a == EMPTY || b == EMPTY {
            return EMPTY;
        }
        if a == EPS {
            return b;
        }
        if b == EPS {
            return a;
        }
        // keep concatenations right-nested
        if let Node::Concat(x, y) = self.nodes[a as usize] {
            let tail = self.concat(y, b);
            return self.concat(x, tail);
        }
        self.intern(Node::Concat(a, b))
    }

    fn star(&mut self, a: Id) -> Id {
        match self.nodes[a as usize] {
            Node::Empty | Node::Eps => EPS,
            Node::Star(_) => a,
            _ => self.intern(Node::Star(a)),
        }
    }

    fn compl(&mut self, a: Id) -> Id {
        match self.nodes[a as usize] {
            Node::Compl(inner) => inner,
            _ => self.intern(Node::Compl(a)),
        }
    }

    fn count(&mut self, a: Id, k: u64) -> Id {
        if k == 0 || a == EPS {
            return EPS;
        }
        if k == 1 || a == EMPTY {
            return a;
        }
        self.intern(Node::Count(a, k))
    }

    pub(crate) fn step(&mut self, id: Id, bit: bool) -> Id {
        if let Some(&d) = self.steps.get(&(id, bit)) {
            return d;
        }
        let d = match self.nodes[id as usize].clone() {
            Node::Empty | Node::Eps => EMPTY,
            Node::Sym(b) => {
                if b == bit {
                    EPS
                } else {
                    EMPTY
                }
            }
            Node::Union(xs) => {
                let ds = xs.into_iter().map(|x| self.step(x, bit)).collect();
                self.union(ds)
            }
            Node::Inter(xs) => {
                let ds = xs.into_iter().map(|x| self.step(x, bit)).collect();
                self.inter(ds)
            }
            Node::Concat(a, b) => {
                let da = self.step(a, bit);
                let left = self.concat(da, b);
                if self.nullable[a as usize] {
                    let db = self.step(b, bit);
                    self.union(vec![left, db])
                } else {
                    left
                }
            }
            Node::Star(a) => {
                let da = self.step(a, bit);
                self.concat(da, id)
            }
            Node::Compl(a) => {
                let da = self.step(a, bit);
                self.compl(da)
            }
            Node::Count(a, k) => {
                // r{k} = r·r{k-1}; r{k-1} may be nullable only via r itself
                let rest = self.count(a, k - 1);
                let da = self.step(a, bit);
                let left = self.concat(da, rest);
                if self.nullable[a as usize] {
                    let drest = self.step(rest, bit);
                    self.union(vec![left, drest])
                } else {
                    left
                }
            }
        };
        self.steps.insert((id, bit), d);
        d
    }

    pub(crate) fn to_regex(&self, id: Id) -> Regex {
        match &self.nodes[id as usize] {
            Node::Empty => Regex::EmptySet,
            Node::Eps => Regex::Epsilon,
            Node::Sym(b) => Regex::Sym(*b),
            Node::Union(xs) => Regex::union_all(xs.iter().map(|&x| self.to_regex(x)).collect::<Vec<_>>()),
            Node::Inter(xs) => Regex::inter_all(xs.iter().map(|&x| self.to_regex(x)).collect::<Vec<_>>()),
            Node::Concat(a, b) => Regex::concat(self.to_regex(*a), self.to_regex(*b)),
            Node::Star(a) => Regex::star(self.to_regex(*a)),
            Node::Compl(a) => Regex::compl(self.to_regex(*a)),
            Node::Count(a, k) => Regex::count(self.to_regex(*a), *k),
        }
    }
}
