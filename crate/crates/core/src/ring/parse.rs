//! Text grammar for polynomials: terms joined by `+`/`-`, each an optional
//! coefficient (`7` or `3/2`) followed by `*`-separated powers `x^k`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, PolyRing, Polynomial, Scalar};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.src[start..self.pos].parse::<BigInt>().map_err(|_| self.err("malformed integer"))
    }

    fn identifier(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            let ok = if self.pos == start { c.is_ascii_alphabetic() || c == '_' } else { c.is_ascii_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a variable"));
        }
        Ok(&self.src[start..self.pos])
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor { src: text, pos: 0 };
    let n = ring.num_vars();
    let mut terms = vec::Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.err("empty polynomial"));
            }
            break;
        }
        let mut negative = false;
        if cur.eat('-') {
            negative = true;
        } else if !cur.eat('+') && !first {
            return Err(cur.err("expected `+` or `-` between terms"));
        }
        first = false;

        cur.skip_ws();
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; n];
        let mut need_power = true;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let num = cur.integer()?;
            let den = if cur.eat('/') { cur.integer()? } else { BigInt::one() };
            if den.is_zero() {
                return Err(cur.err("zero denominator"));
            }
            coeff = BigRational::new(num, den);
            need_power = cur.eat('*');
        }
        if need_power {
            loop {
                let name = cur.identifier()?;
                let idx = ring
                    .var_index(name)
                    .ok_or_else(|| cur.err(alloc::format!("unknown variable `{name}`")))?;
                let e = if cur.eat('^') {
                    let e = cur.integer()?;
                    e.to_string().parse::<u32>().map_err(|_| cur.err("exponent too large"))?
                } else {
                    1
                };
                exps[idx] += e;
                if !cur.eat('*') {
                    break;
                }
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((Monomial::new(exps), coeff as Scalar));
    }
    Polynomial::from_terms(ring, terms).map_err(|e| match e {
        Error::DivisionByZero => Error::Parse { position: 0, message: "coefficient denominator vanishes in the field".into() },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;

    #[test]
    fn accepts_grammar() {
        let r = PolyRing::from_names(&["x", "y", "z"], FieldSpec::Rationals).unwrap();
        let f = parse_polynomial(&r, "x^2*y - 3/2*z^3").unwrap();
        assert_eq!(f.len(), 2);
        let g = parse_polynomial(&r, "  -x+ 2*y*y  +0").unwrap();
        assert_eq!(g.to_string(), "2*y^2 - x");
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        assert!(parse_polynomial(&r, "7").unwrap().is_monomial());
    }

    #[test]
    fn rejects_garbage() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        for bad in ["", "x +", "x y", "w", "1/0*x", "x^", "3x"] {
            assert!(parse_polynomial(&r, bad).is_err(), "{bad}");
        }
        let f = PolyRing::from_names(&["x"], FieldSpec::prime(5).unwrap()).unwrap();
        assert!(parse_polynomial(&f, "1/5*x").is_err());
    }
}
