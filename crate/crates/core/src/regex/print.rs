use super::Regex;

/// Printing styles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    /// Fewest parentheses that still re-parse to the same tree.
    #[default]
    Minimal,
    /// Like `Minimal`, but a concatenation appearing as an operand of `|`
    /// or `&` is parenthesized: `(10)|(0(0|1))`.
    Grouped,
    /// Every non-atomic subterm parenthesized. Used for golden files.
    Full,
}

pub fn print(r: &Regex) -> String {
    print_with(r, Style::Minimal)
}

pub fn print_with(r: &Regex, style: Style) -> String {
    let mut out = String::new();
    write(r, style, &mut out);
    out
}

// Binding strength, loosest first.
const UNION: u8 = 0;
const INTER: u8 = 1;
const CONCAT: u8 = 2;
const PREFIX: u8 = 3;
const POSTFIX: u8 = 4;
const ATOM: u8 = 5;

fn level(r: &Regex) -> u8 {
    match r {
        Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => ATOM,
        Regex::Union(..) => UNION,
        Regex::Inter(..) => INTER,
        Regex::Concat(..) => CONCAT,
        Regex::Compl(_) => PREFIX,
        Regex::Star(_) | Regex::Count(..) => POSTFIX,
    }
}

fn write(r: &Regex, style: Style, out: &mut String) {
    match r {
        Regex::EmptySet => out.push('@'),
        Regex::Epsilon => out.push('e'),
        Regex::Sym(b) => out.push(if *b { '1' } else { '0' }),
        Regex::Union(a, b) => binary(a, b, '|', UNION, style, out),
        Regex::Inter(a, b) => binary(a, b, '&', INTER, style, out),
        Regex::Concat(a, b) => {
            child(a, style, level(a) <= CONCAT, out);
            child(b, style, level(b) < CONCAT, out);
        }
        Regex::Compl(a) => {
            out.push('!');
            child(a, style, level(a) < PREFIX, out);
        }
        Regex::Star(a) => {
            child(a, style, level(a) < POSTFIX, out);
            out.push('*');
        }
        Regex::Count(a, k) => {
            child(a, style, level(a) < POSTFIX, out);
            out.push('{');
            out.push_str(&k.to_string());
            out.push('}');
        }
    }
}

fn binary(a: &Regex, b: &Regex, op: char, prec: u8, style: Style, out: &mut String) {
    let grouped = style == Style::Grouped;
    let left_paren = level(a) <= prec || (grouped && level(a) == CONCAT);
    let right_paren = level(b) < prec || (grouped && level(b) == CONCAT);
    child(a, style, left_paren, out);
    out.push(op);
    child(b, style, right_paren, out);
}

fn child(r: &Regex, style: Style, needs_parens: bool, out: &mut String) {
    let paren = needs_parens || (style == Style::Full && level(r) != ATOM);
    if paren {
        out.push('(');
    }
    write(r, style, out);
    if paren {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::parse;

    #[test]
    fn minimal_examples() {
        assert_eq!(print(&Regex::any_symbol()), "0|1");
        assert_eq!(print(&Regex::universe()), "(0|1)*");
        assert_eq!(print(&Regex::count(Regex::one(), 3)), "1{3}");
        assert_eq!(print(&Regex::compl(Regex::star(Regex::zero()))), "!0*");
        assert_eq!(print(&Regex::star(Regex::compl(Regex::zero()))), "(!0)*");
    }

    #[test]
    fn left_nesting_keeps_parens() {
        let r = Regex::union(Regex::any_symbol(), Regex::Epsilon);
        assert_eq!(print(&r), "(0|1)|e");
        let c = Regex::concat(Regex::concat(Regex::zero(), Regex::one()), Regex::one());
        assert_eq!(print(&c), "(01)1");
        assert_eq!(parse(&print(&c)).unwrap(), c);
    }

    #[test]
    fn grouped_matches_worked_example_text() {
        let text = "(1(0|1)01)|((0|1)01(0|1))";
        let r = parse(text).unwrap();
        assert_eq!(print_with(&r, Style::Grouped), text);
        assert_eq!(print(&r), "1(0|1)01|(0|1)01(0|1)");
    }

    #[test]
    fn full_style() {
        let r = parse("0|1*").unwrap();
        assert_eq!(print_with(&r, Style::Full), "0|(1*)");
        assert_eq!(parse(&print_with(&r, Style::Full)).unwrap(), r);
    }
}
