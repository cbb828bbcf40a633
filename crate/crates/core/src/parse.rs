//! Polynomial input syntax.
//!
//! Two forms are accepted:
//!
//! * a descending coefficient list, `1,0,0,-2` for `x^3 - 2`;
//! * a sum of terms `[+|-][k][*]x[^e]` or `[+|-]k`, e.g. `x^5 - x - 1`.
//!
//! Whitespace is ignored and repeated exponents are summed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::zz_poly::IntPoly;

/// Exponents above this are rejected rather than allocated.
pub const MAX_EXPONENT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at column {column}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 1-based character column in the input.
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected an exponent after `^`")]
    MissingExponent,
    #[error("expected `x` after `*`")]
    MissingVariable,
    #[error("expected an integer coefficient")]
    MissingCoefficient,
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, ch)| !ch.is_whitespace())
            .map(|(i, ch)| (i + 1, ch))
            .collect();
        Cursor {
            chars,
            pos: 0,
            end_column: text.chars().count() + 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, ch)| ch)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end_column, |&(col, _)| col)
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            column: self.column(),
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(ch) => self.error(ParseErrorKind::UnexpectedChar(ch)),
            None => self.error(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, ch)| ch).collect())
    }
}

fn add_term(coeffs: &mut Vec<BigInt>, exp: usize, k: BigInt) {
    if coeffs.len() <= exp {
        coeffs.resize(exp + 1, BigInt::zero());
    }
    coeffs[exp] += k;
}

fn parse_expression(text: &str) -> Result<IntPoly, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.error(ParseErrorKind::Empty));
    }
    let mut coeffs = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.unexpected());
        };
        first = false;

        let k = cur.digits();
        let star = k.is_some() && cur.eat('*');
        let exp = if cur.eat('x') {
            if cur.eat('^') {
                let col = cur.column();
                let e = cur.digits().ok_or_else(|| cur.error(ParseErrorKind::MissingExponent))?;
                let e: usize = e
                    .parse()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or(ParseError {
                        kind: ParseErrorKind::ExponentTooLarge,
                        column: col,
                    })?;
                e
            } else {
                1
            }
        } else if star {
            return Err(cur.error(ParseErrorKind::MissingVariable));
        } else if k.is_some() {
            0
        } else {
            return Err(cur.unexpected());
        };

        let mut k: BigInt = k.map_or_else(|| BigInt::from(1), |d| d.parse().expect("ascii digits"));
        if negative {
            k = -k;
        }
        add_term(&mut coeffs, exp, k);
    }
    Ok(IntPoly::new(coeffs))
}

fn parse_list(text: &str) -> Result<IntPoly, ParseError> {
    let mut descending = Vec::new();
    let mut column = 1;
    for field in text.split(',') {
        let mut cur = Cursor::new(field);
        let negative = cur.eat('-') || {
            cur.eat('+');
            false
        };
        let digits = cur.digits();
        let err = |cur: &Cursor, kind| ParseError {
            kind,
            column: column + cur.column() - 1,
        };
        let Some(digits) = digits else {
            return Err(match cur.peek() {
                Some(ch) if !ch.is_ascii_digit() => err(&cur, ParseErrorKind::UnexpectedChar(ch)),
                _ => err(&cur, ParseErrorKind::MissingCoefficient),
            });
        };
        if let Some(ch) = cur.peek() {
            return Err(err(&cur, ParseErrorKind::UnexpectedChar(ch)));
        }
        let v: BigInt = digits.parse().expect("ascii digits");
        descending.push(if negative { -v } else { v });
        column += field.chars().count() + 1;
    }
    descending.reverse();
    Ok(IntPoly::new(descending))
}

/// Parses either input form into a normalized polynomial.
pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    if text.contains(',') {
        parse_list(text)
    } else {
        parse_expression(text)
    }
}

/// A polynomial together with the text it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpec {
    pub source: String,
    pub poly: IntPoly,
}

impl PolySpec {
    /// Canonical expression form; parsing it gives back the same polynomial.
    pub fn canonical(&self) -> String {
        self.poly.to_string()
    }
}

impl FromStr for PolySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(PolySpec {
            source: s.to_string(),
            poly: parse_poly(s)?,
        })
    }
}

impl fmt::Display for PolySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}
