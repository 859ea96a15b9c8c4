use super::dfa::{complement_dfa, minimize, product, BoolOp};
use super::nfa::{determinize_capped, re_to_nfa, DEFAULT_SUBSET_CAP};
use super::Dfa;
use crate::error::Result;
use crate::regex::Regex;

/// Minimal DFA for an expression that may use every operator.
///
/// Maximal plain subtrees go through the position automaton and the subset
/// construction; intersection and union of extended subtrees use the
/// product, complement flips a DFA, and concatenation, star and counting
/// over extended subtrees are rebuilt as NFAs and determinized again.
pub fn compile_extended(r: &Regex) -> Result<Dfa> {
    Compiler { cap: DEFAULT_SUBSET_CAP }.compile(r)
}

struct Compiler {
    cap: usize,
}

impl Compiler {
    fn plain(&self, r: &Regex) -> Result<Dfa> {
        Ok(minimize(&determinize_capped(&re_to_nfa(r)?, self.cap)?))
    }

    fn compile(&self, r: &Regex) -> Result<Dfa> {
        if !has_extended(r) {
            return self.plain(r);
        }
        Ok(match r {
            Regex::Union(a, b) => minimize(&product(&self.compile(a)?, &self.compile(b)?, BoolOp::Or)),
            Regex::Inter(a, b) => minimize(&product(&self.compile(a)?, &self.compile(b)?, BoolOp::And)),
            Regex::Compl(a) => complement_dfa(&self.compile(a)?),
            Regex::Concat(a, b) => {
                let nfa = self.compile(a)?.to_nfa().concat(&self.compile(b)?.to_nfa());
                minimize(&determinize_capped(&nfa, self.cap)?)
            }
            Regex::Star(a) => minimize(&determinize_capped(&self.compile(a)?.to_nfa().star(), self.cap)?),
            Regex::Count(a, k) => {
                let base = self.compile(a)?.to_nfa();
                let mut acc = self.plain(&Regex::Epsilon)?;
                for _ in 0..*k {
                    let next = minimize(&determinize_capped(&acc.to_nfa().concat(&base), self.cap)?);
                    if next == acc {
                        break;
                    }
                    acc = next;
                }
                acc
            }
            Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => unreachable!("atoms are plain"),
        })
    }
}

fn has_extended(r: &Regex) -> bool {
    !crate::regex::OperatorProfile::PLAIN.conforms(r)
}
