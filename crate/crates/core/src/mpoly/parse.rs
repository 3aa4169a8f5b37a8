//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Names resolve to ring variables first; otherwise `a` denotes the field
//! generator. Division is allowed only by non-zero constants.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Poly, PolyRing};
use crate::numberfield::{FieldElem, NumberField};
use crate::mpoly::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    BadChar(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("unexpected token {0:?} at offset {1}")]
    Unexpected(String, usize),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("division by a non-constant or zero")]
    BadDivision,
    #[error("bad exponent {0:?}")]
    BadExponent(String),
    #[error("expected a field element, found a polynomial")]
    NotConstant,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((Tok::Int(text.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().map(|x| x.1).collect()), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(ParseError::BadChar(c, pos));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            None => ParseError::Eof,
            Some((t, p)) => {
                let s = match t {
                    Tok::Int(n) => n.to_string(),
                    Tok::Name(n) => n.clone(),
                    Tok::Sym(c) => c.to_string(),
                };
                ParseError::Unexpected(s, *p)
            }
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(ParseError::BadDivision);
                }
                acc = acc.scalar_mul(&d.lc().expect("constant").inv());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                u32::try_from(&n).map_err(|_| ParseError::BadExponent(n.to_string()))?
            }
            _ => return Err(self.unexpected()),
        };
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let tok = self.peek().cloned().ok_or(ParseError::Eof)?;
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Poly::constant(self.ring, FieldElem::from_int(self.ring.field(), n)))
            }
            Tok::Name(name) => {
                self.pos += 1;
                if let Some(i) = self.ring.names().iter().position(|v| *v == name) {
                    Ok(self.ring.var(i))
                } else if name == "a" {
                    Ok(Poly::constant(self.ring, self.ring.field().generator()))
                } else {
                    Err(ParseError::UnknownName(name))
                }
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected());
                }
                Ok(e)
            }
            Tok::Sym(_) => Err(self.unexpected()),
        }
    }
}

/// Parses a polynomial of `ring`.
pub fn parse_poly(ring: &PolyRing, s: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        ring,
        toks: lex(s)?,
        pos: 0,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses a field element written in the generator symbol `a`.
pub fn parse_elem(field: &NumberField, s: &str) -> Result<FieldElem, ParseError> {
    let ring = PolyRing::with_names(field, vec![], MonomialOrder::Lex);
    let p = parse_poly(&ring, s)?;
    Ok(p.lc().cloned().unwrap_or_else(|| FieldElem::zero(field)))
}
