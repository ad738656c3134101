//! Small expression parser shared by polynomial and class constructors.
//!
//! Grammar: `+ - * ^`, parentheses, rational literals (`29`, `7/2`),
//! identifiers, bracketed generator names (`[V]`), and implicit
//! multiplication by juxtaposition (`7L`, `2 t^2`, `uv` is NOT two variables
//! -- identifiers are maximal, so multi-letter names need `*` or a space).

use num::BigInt;

use super::{MultiPoly, Rational};
use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Num(Rational),
    Var(String),
    Gen(String),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Neg(Box<Ast>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Gen(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let mut toks = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '[' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j] != ']' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(err("unterminated generator bracket"));
                }
                let name: String = chars[start..j].iter().collect();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(err("invalid generator name"));
                }
                toks.push(Tok::Gen(name));
                i = j + 1;
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let digits: String = chars[i..j].iter().collect();
                toks.push(Tok::Num(digits.parse().expect("digits")));
                i = j;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                toks.push(Tok::Ident(chars[i..j].iter().collect()));
                i = j;
            }
            _ => return Err(err(&format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut negate = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            negate = true;
        } else if matches!(self.peek(), Some(Tok::Plus)) {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = Ast::Neg(Box::new(acc));
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Ast::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Ast::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = Ast::Mul(Box::new(acc), Box::new(rhs));
                }
                // implicit multiplication
                Some(Tok::Ident(_)) | Some(Tok::Gen(_)) | Some(Tok::LParen) | Some(Tok::Num(_)) => {
                    let rhs = self.factor()?;
                    acc = Ast::Mul(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            match self.bump().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| self.err("exponent out of range"))?;
                    return Ok(Ast::Pow(Box::new(base), e));
                }
                _ => return Err(self.err("expected a non-negative integer exponent after ^")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump().cloned() {
            Some(Tok::Num(n)) => {
                // rational literal: integer optionally followed by /integer
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump().cloned() {
                        Some(Tok::Num(d)) => {
                            if d == BigInt::from(0) {
                                return Err(self.err("zero denominator"));
                            }
                            Ok(Ast::Num(Rational::new(n, d)))
                        }
                        _ => Err(self.err("expected denominator after /")),
                    }
                } else {
                    Ok(Ast::Num(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => Ok(Ast::Var(name)),
            Some(Tok::Gen(name)) => Ok(Ast::Gen(name)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected closing parenthesis")),
                }
            }
            Some(Tok::Minus) => {
                // unary minus inside a factor, e.g. "(-7x + 27)"
                let inner = self.factor()?;
                Ok(Ast::Neg(Box::new(inner)))
            }
            _ => Err(self.err("expected a value")),
        }
    }
}

pub(crate) fn parse(input: &str) -> Result<Ast> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        input,
    };
    let ast = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(ast)
}

impl Ast {
    /// Lowers to a polynomial over exactly the given variables. Generator
    /// brackets are rejected here; classes have their own lowering.
    pub fn to_multipoly(&self, vars: &[&str]) -> Result<MultiPoly> {
        match self {
            Ast::Num(r) => Ok(MultiPoly::constant(vars, r.clone())),
            Ast::Var(name) => MultiPoly::var(vars, name),
            Ast::Gen(name) => Err(Error::Parse {
                input: format!("[{name}]"),
                reason: "generator brackets are only valid in class expressions".to_string(),
            }),
            Ast::Add(a, b) => a.to_multipoly(vars)?.add(&b.to_multipoly(vars)?),
            Ast::Sub(a, b) => a.to_multipoly(vars)?.sub(&b.to_multipoly(vars)?),
            Ast::Mul(a, b) => a.to_multipoly(vars)?.mul(&b.to_multipoly(vars)?),
            Ast::Pow(a, e) => a.to_multipoly(vars)?.pow(*e),
            Ast::Neg(a) => Ok(a.to_multipoly(vars)?.neg()),
        }
    }
}
