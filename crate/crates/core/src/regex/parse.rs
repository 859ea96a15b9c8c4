use super::Regex;
use crate::error::{Error, Result};

/// Parses the concrete syntax: atoms `0 1 e @`, postfix `*` and `{k}`,
/// prefix `!`, juxtaposition, then `&`, then `|` (loosest). Binary
/// operators nest to the right. Whitespace between tokens is ignored.
pub fn parse(text: &str) -> Result<Regex> {
    let mut p = Parser { toks: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), at: 0, len: text.len() };
    let r = p.union()?;
    match p.peek() {
        None => Ok(r),
        Some((pos, c)) => Err(Error::Syntax { pos, msg: format!("unexpected {c:?}") }),
    }
}

struct Parser {
    toks: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.toks.get(self.at).copied()
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.len, |(p, _)| p)
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let t = self.peek();
        self.at += 1;
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn union(&mut self) -> Result<Regex> {
        let left = self.inter()?;
        if let Some((_, '|')) = self.peek() {
            self.bump();
            Ok(Regex::union(left, self.union()?))
        } else {
            Ok(left)
        }
    }

    fn inter(&mut self) -> Result<Regex> {
        let left = self.concat()?;
        if let Some((_, '&')) = self.peek() {
            self.bump();
            Ok(Regex::inter(left, self.inter()?))
        } else {
            Ok(left)
        }
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = vec![self.unary()?];
        while let Some((_, c)) = self.peek() {
            if !matches!(c, '0' | '1' | 'e' | '@' | '(' | '!') {
                break;
            }
            parts.push(self.unary()?);
        }
        Ok(Regex::concat_all(parts))
    }

    fn unary(&mut self) -> Result<Regex> {
        if let Some((_, '!')) = self.peek() {
            self.bump();
            return Ok(Regex::compl(self.unary()?));
        }
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some((_, '*')) => {
                    self.bump();
                    r = Regex::star(r);
                }
                Some((_, '{')) => {
                    self.bump();
                    let k = self.reps()?;
                    r = Regex::count(r, k);
                }
                _ => return Ok(r),
            }
        }
    }

    fn reps(&mut self) -> Result<u64> {
        let start = self.pos();
        let mut digits = String::new();
        while let Some((_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return self.error("expected repetition count");
        }
        let k = digits
            .parse::<u64>()
            .map_err(|_| Error::Syntax { pos: start, msg: format!("repetition count {digits} overflows") })?;
        match self.bump() {
            Some((_, '}')) => Ok(k),
            _ => Err(Error::Syntax { pos: self.toks.get(self.at - 1).map_or(self.len, |t| t.0), msg: "expected '}'".into() }),
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            Some((_, '0')) => { self.bump(); Ok(Regex::zero()) }
            Some((_, '1')) => { self.bump(); Ok(Regex::one()) }
            Some((_, 'e')) => { self.bump(); Ok(Regex::Epsilon) }
            Some((_, '@')) => { self.bump(); Ok(Regex::EmptySet) }
            Some((_, '(')) => {
                self.bump();
                let r = self.union()?;
                match self.peek() {
                    Some((_, ')')) => { self.bump(); Ok(r) }
                    _ => self.error("expected ')'"),
                }
            }
            Some((_, c)) => self.error(format!("unexpected {c:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}
