//! Parser for the ASCII polynomial syntax.
//!
//! ```text
//! poly     := [sign] term (("+" | "-") term)*
//! term     := coeff | coeff "*" monomial | monomial
//! coeff    := integer | integer "/" positive-integer
//! monomial := factor ("*" factor)*
//! factor   := identifier | identifier "^" positive-integer
//! ```
//!
//! Whitespace between tokens is ignored; there are no parentheses.

use std::sync::Arc;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Q};
use crate::ring::{GradedRing, Monomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!(
                        "unexpected character {:?}",
                        text[start..].chars().next().unwrap()
                    ),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<GradedRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn positive_int(&mut self, what: &str) -> Result<String> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                if s.bytes().all(|b| b == b'0') {
                    return self.err(format!("{what} must be positive"));
                }
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn coeff(&mut self, digits: String) -> Result<Q> {
        let numer: BigInt = digits.parse().expect("digits");
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let d: BigInt = self.positive_int("denominator")?.parse().expect("digits");
            Ok(Q::new(numer, d))
        } else {
            Ok(Q::from_integer(numer))
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let name = match self.peek().cloned() {
            Some(Tok::Ident(name)) => name,
            _ => return self.err("expected variable"),
        };
        let index = self
            .ring
            .index_of(&name)
            .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        self.pos += 1;
        let e = if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            self.positive_int("exponent")?
                .parse::<u32>()
                .map_err(|_| Error::ExponentOverflow)?
        } else {
            1
        };
        exps[index] = exps[index].checked_add(e).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.nvars()];
        self.factor(&mut exps)?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok(Monomial::new(exps))
    }

    fn term(&mut self) -> Result<(Monomial, Q)> {
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.pos += 1;
                let c = self.coeff(digits)?;
                if self.peek() == Some(&Tok::Star) {
                    self.pos += 1;
                    Ok((self.monomial()?, c))
                } else {
                    Ok((self.ring.one(), c))
                }
            }
            Some(Tok::Ident(_)) => Ok((self.monomial()?, Q::one())),
            _ => self.err("expected term"),
        }
    }

    fn poly(&mut self) -> Result<Vec<(Monomial, Q)>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(terms)
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Arc<GradedRing>) -> Result<Poly> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let terms = p.poly()?;
    Ok(Poly::from_terms(
        ring,
        terms.into_iter().filter(|(_, c)| !c.is_zero()),
    ))
}

/// Parses a comma-separated list of polynomials; the empty string is the
/// empty list.
pub fn parse_poly_list(text: &str, ring: &Arc<GradedRing>) -> Result<Vec<Poly>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|part| parse_poly(part, ring)).collect()
}
