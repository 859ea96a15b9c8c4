use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::regex::{any_block, Regex};
use crate::word::Word;

/// Boolean formula over 1-based variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(i: usize) -> Self {
        Formula::Var(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Not(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn max_var(&self) -> usize {
        match self {
            Formula::Var(i) => *i,
            Formula::Not(a) => a.max_var(),
            Formula::And(a, b) | Formula::Or(a, b) => a.max_var().max(b.max_var()),
        }
    }

    fn eval_bits(&self, bits: &[bool]) -> bool {
        match self {
            Formula::Var(i) => bits[i - 1],
            Formula::Not(a) => !a.eval_bits(bits),
            Formula::And(a, b) => a.eval_bits(bits) && b.eval_bits(bits),
            Formula::Or(a, b) => a.eval_bits(bits) || b.eval_bits(bits),
        }
    }

    /// `true` when negation appears only directly above variables.
    pub fn is_nnf(&self) -> bool {
        match self {
            Formula::Var(_) => true,
            Formula::Not(a) => matches!(**a, Formula::Var(_)),
            Formula::And(a, b) | Formula::Or(a, b) => a.is_nnf() && b.is_nnf(),
        }
    }
}

/// A formula together with its variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanFormula {
    n: usize,
    root: Formula,
}

impl BooleanFormula {
    pub fn new(n: usize, root: Formula) -> Result<Self> {
        check_vars(&root, n)?;
        Ok(BooleanFormula { n, root })
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> &Formula {
        &self.root
    }

    pub fn size(&self) -> usize {
        self.root.size()
    }

    pub fn eval(&self, x: &Word) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: x.len() });
        }
        Ok(self.root.eval_bits(x.bits()))
    }
}

fn check_vars(f: &Formula, n: usize) -> Result<()> {
    match f {
        Formula::Var(i) if *i == 0 || *i > n => Err(Error::IndexOutOfRange { index: *i, n }),
        Formula::Var(_) => Ok(()),
        Formula::Not(a) => check_vars(a, n),
        Formula::And(a, b) | Formula::Or(a, b) => check_vars(a, n).and(check_vars(b, n)),
    }
}

/// Negation normal form: De Morgan and double negation push every `Not`
/// down onto a variable. The node count at most doubles.
pub fn nnf(f: &Formula) -> Formula {
    push(f, false)
}

fn push(f: &Formula, negate: bool) -> Formula {
    match (f, negate) {
        (Formula::Var(i), false) => Formula::Var(*i),
        (Formula::Var(i), true) => Formula::not(Formula::Var(*i)),
        (Formula::Not(a), _) => push(a, !negate),
        (Formula::And(a, b), false) => Formula::and(push(a, false), push(b, false)),
        (Formula::And(a, b), true) => Formula::or(push(a, true), push(b, true)),
        (Formula::Or(a, b), false) => Formula::or(push(a, false), push(b, false)),
        (Formula::Or(a, b), true) => Formula::and(push(a, true), push(b, true)),
    }
}

/// Which extended operator expresses conjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `R(a ∧ b) = R(a) & R(b)`
    Inter,
    /// `R(a ∧ b) = !(!R(a) | !R(b))`; the output has no intersection.
    Neg,
}

/// Compiles `phi` (after NNF) so that the length-`n` members of the result
/// are exactly the satisfying assignments. Literal `x_i` becomes
/// `(0|1)^{i-1} 1 (0|1)^{n-i}` (`0` in the middle for `¬x_i`); the gaps are
/// counting nodes when `counting_allowed`, written out otherwise.
pub fn formula_to_re(phi: &BooleanFormula, target: Target, counting_allowed: bool) -> Regex {
    compile(&nnf(&phi.root), phi.n, target, counting_allowed)
}

fn compile(f: &Formula, n: usize, target: Target, counting: bool) -> Regex {
    match f {
        Formula::Var(i) => literal(*i, true, n, counting),
        Formula::Not(a) => match **a {
            Formula::Var(i) => literal(i, false, n, counting),
            _ => unreachable!("input is in negation normal form"),
        },
        Formula::Or(a, b) => Regex::union(compile(a, n, target, counting), compile(b, n, target, counting)),
        Formula::And(a, b) => {
            let (ra, rb) = (compile(a, n, target, counting), compile(b, n, target, counting));
            match target {
                Target::Inter => Regex::inter(ra, rb),
                Target::Neg => Regex::compl(Regex::union(Regex::compl(ra), Regex::compl(rb))),
            }
        }
    }
}

fn literal(i: usize, positive: bool, n: usize, counting: bool) -> Regex {
    let parts: Vec<Regex> = [any_block((i - 1) as u64, counting), Some(Regex::Sym(positive)), any_block((n - i) as u64, counting)]
        .into_iter()
        .flatten()
        .collect();
    Regex::concat_all(parts)
}

/// Prefix s-expressions: `(var 3)`, `(not f)`, `(and f g ...)`, `(or f g ...)`.
/// More than two operands fold to the left.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "(var {i})"),
            Formula::Not(a) => write!(f, "(not {a})"),
            Formula::And(a, b) => write!(f, "(and {a} {b})"),
            Formula::Or(a, b) => write!(f, "(or {a} {b})"),
        }
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut toks = tokenize(text);
        toks.reverse();
        let f = sexpr(&mut toks, text.len())?;
        match toks.pop() {
            None => Ok(f),
            Some((pos, t)) => Err(Error::Syntax { pos, msg: format!("trailing {t:?}") }),
        }
    }
}

fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
            if !c.is_whitespace() {
                out.push((i, &text[i..i + 1]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn sexpr(toks: &mut Vec<(usize, &str)>, end: usize) -> Result<Formula> {
    let syntax = |pos: usize, msg: String| Error::Syntax { pos, msg };
    let (pos, open) = toks.pop().ok_or_else(|| syntax(end, "unexpected end of input".into()))?;
    if open != "(" {
        return Err(syntax(pos, format!("expected '(', found {open:?}")));
    }
    let (hpos, head) = toks.pop().ok_or_else(|| syntax(end, "unexpected end of input".into()))?;
    let f = match head {
        "var" => {
            let (ipos, tok) = toks.pop().ok_or_else(|| syntax(end, "expected variable index".into()))?;
            let i: usize = tok.parse().map_err(|_| syntax(ipos, format!("bad variable index {tok:?}")))?;
            if i == 0 {
                return Err(syntax(ipos, "variables are 1-based".into()));
            }
            Formula::Var(i)
        }
        "not" => Formula::not(sexpr(toks, end)?),
        "and" | "or" => {
            let mut args = vec![sexpr(toks, end)?, sexpr(toks, end)?];
            while toks.last().is_some_and(|(_, t)| *t == "(") {
                args.push(sexpr(toks, end)?);
            }
            let join = if head == "and" { Formula::and } else { Formula::or };
            args.into_iter().reduce(join).expect("two operands")
        }
        other => return Err(syntax(hpos, format!("unknown operator {other:?}"))),
    };
    match toks.pop() {
        Some((_, ")")) => Ok(f),
        Some((p, t)) => Err(syntax(p, format!("expected ')', found {t:?}"))),
        None => Err(syntax(end, "expected ')'".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::matches;
    use crate::regex::{parse, size_of, OperatorProfile};
    use crate::word::w;

    fn v(i: usize) -> Formula {
        Formula::var(i)
    }

    #[test]
    fn eval_examples() {
        let f = BooleanFormula::new(1, v(1)).unwrap();
        assert!(f.eval(&w("1")).unwrap());
        let g = BooleanFormula::new(1, Formula::not(v(1))).unwrap();
        assert!(!g.eval(&w("1")).unwrap());
        let h = BooleanFormula::new(2, Formula::and(v(1), Formula::or(v(2), Formula::not(v(2))))).unwrap();
        let x1 = BooleanFormula::new(2, v(1)).unwrap();
        for x in Word::all_of_len(2) {
            assert_eq!(h.eval(&x).unwrap(), x1.eval(&x).unwrap());
        }
        assert!(h.eval(&w("1")).is_err());
    }

    #[test]
    fn nnf_examples() {
        assert_eq!(
            nnf(&Formula::not(Formula::and(v(1), v(2)))),
            Formula::or(Formula::not(v(1)), Formula::not(v(2)))
        );
        assert_eq!(nnf(&Formula::not(Formula::not(v(1)))), v(1));
        let f = Formula::not(Formula::or(Formula::not(Formula::and(v(1), v(3))), v(2)));
        assert!(nnf(&f).is_nnf());
        assert_eq!(nnf(&nnf(&f)), nnf(&f));
    }

    #[test]
    fn literal_gadget() {
        let phi = BooleanFormula::new(3, v(2)).unwrap();
        assert_eq!(formula_to_re(&phi, Target::Inter, false), parse("(0|1)1(0|1)").unwrap());
        assert_eq!(formula_to_re(&phi, Target::Inter, true), parse("(0|1)1(0|1)").unwrap());
        let wide = BooleanFormula::new(8, Formula::not(v(1))).unwrap();
        assert_eq!(formula_to_re(&wide, Target::Inter, true), parse("0(0|1){7}").unwrap());
        assert_eq!(size_of(&formula_to_re(&wide, Target::Inter, true), true), 1 + 3 + 3);
        assert_eq!(size_of(&formula_to_re(&wide, Target::Inter, false), false), 1 + 21);
    }

    #[test]
    fn conjunction_rules() {
        let phi = BooleanFormula::new(2, Formula::and(v(1), v(2))).unwrap();
        assert_eq!(
            formula_to_re(&phi, Target::Inter, false),
            Regex::inter(parse("1(0|1)").unwrap(), parse("(0|1)1").unwrap())
        );
        let neg = formula_to_re(&phi, Target::Neg, false);
        assert_eq!(neg, parse("!(!(1(0|1))|!((0|1)1))").unwrap());
        assert!(OperatorProfile::WITH_COMPL.conforms(&neg));
        assert!(!OperatorProfile::WITH_COMPL.conforms(&formula_to_re(&phi, Target::Inter, false)));
        for x in Word::all_of_len(2) {
            assert_eq!(matches(&neg, &x), x == w("11"));
        }
    }

    #[test]
    fn text_format() {
        let f: Formula = "(and (var 1) (not (var 2)))".parse().unwrap();
        assert_eq!(f, Formula::and(v(1), Formula::not(v(2))));
        assert_eq!(f.to_string(), "(and (var 1) (not (var 2)))");
        let g: Formula = "(or (var 1) (var 2) (var 3))".parse().unwrap();
        assert_eq!(g, Formula::or(Formula::or(v(1), v(2)), v(3)));
        assert!(matches!("(and (var 1))".parse::<Formula>(), Err(Error::Syntax { .. })));
        assert!(matches!("(xor (var 1) (var 2))".parse::<Formula>(), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!("(var 0)".parse::<Formula>(), Err(Error::Syntax { pos: 5, .. })));
        assert!(BooleanFormula::new(2, v(3)).is_err());
    }
}
