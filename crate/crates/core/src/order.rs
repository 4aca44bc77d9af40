//! Monomial orders: lex, degrevlex and weight-refined orders `≺_ω`.
//!
//! All orders put `X_1 > X_2 > … > X_n`. A weight-refined order compares
//! `ω`-weights first and breaks ties with an inner order, so that the leading
//! monomial of `f` is the leading monomial of `in_ω(f)` under the inner order.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Scalar, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Weighted { weight: Weight, tie: Box<MonomialOrder> },
}

impl MonomialOrder {
    /// `≺_ω` refined by `tie`. Nesting the same weight twice is rejected.
    pub fn weighted(weight: Weight, tie: MonomialOrder) -> Result<Self> {
        let mut inner = &tie;
        while let MonomialOrder::Weighted { weight: w, tie } = inner {
            if *w == weight {
                return Err(Error::InvalidOrder("tie order is already refined by the same weight".into()));
            }
            if w.len() != weight.len() {
                return Err(Error::DimensionMismatch { expected: weight.len(), found: w.len() });
            }
            inner = tie;
        }
        Ok(MonomialOrder::Weighted { weight, tie: Box::new(tie) })
    }

    /// The canonical order used for ideal equality and fingerprints.
    pub fn canonical() -> Self {
        MonomialOrder::DegRevLex
    }

    /// Checks that every weight in the order has `n` entries.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            MonomialOrder::Weighted { weight, tie } => {
                if weight.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: weight.len() });
                }
                tie.validate(n)
            }
            _ => Ok(()),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.num_vars() != b.num_vars() {
            return Err(Error::DimensionMismatch { expected: a.num_vars(), found: b.num_vars() });
        }
        self.validate(a.num_vars())?;
        Ok(self.cmp_monomials(a, b))
    }

    /// Comparison without dimension checks.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Weighted { weight, tie } => weight
                .value_unchecked(a)
                .cmp(&weight.value_unchecked(b))
                .then_with(|| tie.cmp_monomials(a, b)),
        }
    }

    /// An integer vector whose lexicographic order agrees with this order.
    pub fn sort_key(&self, m: &Monomial) -> Vec<i64> {
        let mut key = Vec::new();
        self.push_key(m, &mut key);
        key
    }

    fn push_key(&self, m: &Monomial, key: &mut Vec<i64>) {
        match self {
            MonomialOrder::Lex => key.extend(m.exponents().iter().map(|&e| e as i64)),
            MonomialOrder::DegRevLex => {
                key.push(m.degree() as i64);
                key.extend(m.exponents().iter().rev().map(|&e| -(e as i64)));
            }
            MonomialOrder::Weighted { weight, tie } => {
                key.push(weight.value_unchecked(m));
                tie.push_key(m, key);
            }
        }
    }

    /// `(in_≺(f), coefficient)`.
    pub fn leading_term(&self, f: &Polynomial) -> Result<(Monomial, Scalar)> {
        self.validate(f.ring().num_vars())?;
        f.terms()
            .max_by(|a, b| self.cmp_monomials(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// `f` scaled so that its leading coefficient is one.
    pub fn monic(&self, f: &Polynomial) -> Result<Polynomial> {
        let (_, c) = self.leading_term(f)?;
        let inv = f.field().inv(&c)?;
        Ok(f.scale(&inv))
    }

    /// Sorts monomials descending.
    pub fn sort_descending(&self, ms: &mut [Monomial]) {
        ms.sort_by(|a, b| self.cmp_monomials(b, a));
    }
}

/// Leading monomial and coefficient of `f`.
pub fn leading_term(f: &Polynomial, o: &MonomialOrder) -> Result<(Monomial, Scalar)> {
    o.leading_term(f)
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::DegRevLex => f.write_str("drl"),
            MonomialOrder::Weighted { weight, tie } => write!(f, "w:{weight};tie={tie}"),
        }
    }
}

fn parse_weight_entries(s: &str) -> Result<Weight> {
    let bad = || Error::InvalidWeight(s.to_string());
    let entries = s
        .split(',')
        .map(|part| {
            let part = part.trim();
            let (num, den) = match part.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (part, "1"),
            };
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        })
        .collect::<Result<Vec<_>>>()?;
    if entries.is_empty() {
        return Err(bad());
    }
    Weight::from_rationals(&entries)
}

/// Parses a comma-separated weight such as `2,1,0` or `1/2,1/3`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    parse_weight_entries(s)
}

impl FromStr for MonomialOrder {
    type Err = Error;

    /// `lex`, `drl` (or `degrevlex`), or `w:2,1,0;tie=<order>` with the tie
    /// defaulting to `drl`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "lex" => return Ok(MonomialOrder::Lex),
            "drl" | "degrevlex" | "grevlex" => return Ok(MonomialOrder::DegRevLex),
            _ => {}
        }
        let body = s.strip_prefix("w:").ok_or_else(|| Error::InvalidOrder(String::from(s)))?;
        let (weights, tie) = match body.split_once(';') {
            Some((w, rest)) => {
                let tie = rest
                    .trim()
                    .strip_prefix("tie=")
                    .ok_or_else(|| Error::InvalidOrder(String::from(s)))?;
                (w, tie.parse::<MonomialOrder>()?)
            }
            None => (body, MonomialOrder::DegRevLex),
        };
        MonomialOrder::weighted(parse_weight_entries(weights)?, tie)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldSpec, PolyRing};
    use alloc::vec;
    use num_traits::One;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compares_first_variable() {
        assert_eq!(MonomialOrder::Lex.compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn degrevlex_prefers_smaller_last_exponent() {
        assert_eq!(MonomialOrder::DegRevLex.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn weighted_breaks_ties_with_inner_order() {
        let o = MonomialOrder::weighted(Weight::new(vec![1, 1]), MonomialOrder::Lex).unwrap();
        assert_eq!(o.compare(&m(&[2, 1]), &m(&[1, 2])).unwrap(), Ordering::Greater);
        assert!(o.compare(&m(&[1]), &m(&[1])).is_err());
    }

    #[test]
    fn same_weight_nesting_rejected() {
        let w = Weight::new(vec![1, 0]);
        let inner = MonomialOrder::weighted(w.clone(), MonomialOrder::Lex).unwrap();
        assert!(MonomialOrder::weighted(w, inner).is_err());
    }

    #[test]
    fn leading_terms() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let f = Polynomial::parse(&r, "x + y").unwrap();
        assert_eq!(MonomialOrder::Lex.leading_term(&f).unwrap().0, m(&[1, 0]));
        let g = Polynomial::parse(&r, "x^2 + x*y + y^2").unwrap();
        let o = MonomialOrder::weighted(Weight::new(vec![2, 1]), MonomialOrder::Lex).unwrap();
        assert_eq!(o.leading_term(&g).unwrap(), (m(&[2, 0]), Scalar::one()));
        let o = MonomialOrder::weighted(Weight::new(vec![1, 1]), MonomialOrder::Lex).unwrap();
        assert_eq!(o.leading_term(&f).unwrap().0, m(&[1, 0]));
        assert_eq!(o.leading_term(&Polynomial::zero(&r)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn parses_cli_syntax() {
        assert_eq!("lex".parse::<MonomialOrder>().unwrap(), MonomialOrder::Lex);
        assert_eq!("drl".parse::<MonomialOrder>().unwrap(), MonomialOrder::DegRevLex);
        let o: MonomialOrder = "w:2,1,0;tie=drl".parse().unwrap();
        assert_eq!(o.to_string(), "w:2,1,0;tie=drl");
        let o: MonomialOrder = "w:1/2,1".parse().unwrap();
        assert_eq!(o.to_string(), "w:1,2;tie=drl");
        assert!("w:".parse::<MonomialOrder>().is_err());
        assert!("revlex".parse::<MonomialOrder>().is_err());
    }
}
