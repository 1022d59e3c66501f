//! Parser for the canonical polynomial text, e.g. `x1^2*x2 - 3*x3^-1 + 5`.
//!
//! `*` between factors is optional, so the juxtaposed form `x1^2x2` is read
//! as well.

use std::str::FromStr;

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn signed_int(&mut self) -> Result<i32> {
        let start = self.pos;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self
            .digits()
            .ok_or_else(|| Error::parse(self.pos, "expected an integer exponent"))?;
        let value: i32 = digits
            .parse()
            .map_err(|_| Error::parse(start, "exponent out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn factor(&mut self) -> Result<(Var, i32)> {
        // caller guarantees the next byte is 'x'
        self.pos += 1;
        let at = self.pos;
        let index = self
            .src
            .get(self.pos)
            .filter(|b| b.is_ascii_digit())
            .and_then(|_| self.digits())
            .ok_or_else(|| Error::parse(at, "expected a variable index after 'x'"))?;
        let var: Var = index
            .parse()
            .map_err(|_| Error::parse(at, "variable index out of range"))?;
        if var == 0 {
            return Err(Error::parse(at, "variable indices start at 1"));
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'(') {
                self.pos += 1;
                let e = self.signed_int()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                e
            } else {
                self.signed_int()?
            }
        } else {
            1
        };
        Ok((var, exp))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff = BigInt::from(1);
        let mut factors = Vec::new();
        let mut saw_anything = false;
        if let Some(d) = self.digits() {
            coeff = d.parse().unwrap();
            saw_anything = true;
        }
        loop {
            match self.peek() {
                Some(b'*') if saw_anything => {
                    self.pos += 1;
                    if self.peek() != Some(b'x') {
                        return Err(Error::parse(self.pos, "expected a variable after '*'"));
                    }
                }
                Some(b'x') => {
                    factors.push(self.factor()?);
                    saw_anything = true;
                }
                _ => break,
            }
        }
        if !saw_anything {
            return Err(Error::parse(start, "expected a term"));
        }
        Ok((Monomial::from_pairs(factors), coeff))
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = false;
    if cur.peek() == Some(b'-') {
        cur.pos += 1;
        negative = true;
    } else if cur.peek() == Some(b'+') {
        cur.pos += 1;
    }
    loop {
        let (m, c) = cur.term()?;
        terms.push((m, if negative { -c } else { c }));
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(other) => {
                return Err(Error::parse(
                    cur.pos,
                    format!("unexpected character '{}'", other as char),
                ))
            }
        }
        cur.pos += 1;
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
