//! Polynomial text syntax.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' poly ')'
//! ```
//!
//! Variables are matched against the supplied [`VariableSpace`] by longest
//! prefix, so juxtaposed factors such as `3U1V2` are accepted.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{GermMap, Poly, PolyVec, Rational, VariableSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at column {position}")]
    UnknownVariable { position: usize, name: String },
    #[error("component {index} has nonzero constant term")]
    NonzeroConstant { index: usize },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
    vars: &'a Arc<VariableSpace>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax { position: self.column(), message: message.to_string() }
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero(self.vars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.syntax("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.syntax("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Poly::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.variable(),
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn variable(&mut self) -> Result<Poly, ParseError> {
        let rest = &self.src[self.pos..];
        let best = self
            .vars
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.len();
                Ok(Poly::var(self.vars, i))
            }
            None => {
                let position = self.column();
                let len = rest.iter().take_while(|c| c.is_ascii_alphanumeric() || **c == b'_').count();
                let name = core::str::from_utf8(&rest[..len]).unwrap_or("?").to_string();
                Err(ParseError::UnknownVariable { position, name })
            }
        }
    }
}

fn parse_at(text: &str, offset: usize, vars: &Arc<VariableSpace>) -> Result<Poly, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, offset, vars };
    if p.peek().is_none() {
        return Err(p.syntax("empty polynomial"));
    }
    let poly = p.poly()?;
    if p.peek().is_some() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

pub fn parse_poly(text: &str, vars: &Arc<VariableSpace>) -> Result<Poly, ParseError> {
    parse_at(text, 0, vars)
}

/// Splits on a separator outside parentheses, keeping column offsets.
fn split_top(text: &str, sep: u8) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, b) in text.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if b == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Semicolon-separated components, e.g. `2*U1; 2*V1; V2; 3*W1; 3*W2`.
pub fn parse_polyvec(text: &str, vars: &Arc<VariableSpace>) -> Result<PolyVec, ParseError> {
    let comps =
        split_top(text, b';').into_iter().map(|(off, s)| parse_at(s, off, vars)).collect::<Result<Vec<_>, _>>()?;
    Ok(PolyVec::new(vars, comps).expect("parsed in one space"))
}

/// Comma-separated components of a germ; every component must vanish at 0.
pub fn parse_germ(text: &str, vars: &Arc<VariableSpace>) -> Result<GermMap, ParseError> {
    let comps =
        split_top(text, b',').into_iter().map(|(off, s)| parse_at(s, off, vars)).collect::<Result<Vec<_>, _>>()?;
    if let Some(index) = comps.iter().position(|c| !c.constant_term().is_zero()) {
        return Err(ParseError::NonzeroConstant { index });
    }
    Ok(GermMap::new(vars, comps).expect("validated"))
}
