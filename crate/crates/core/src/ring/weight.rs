use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::Monomial;
use crate::error::{Error, Result};

/// An integral weight vector.
///
/// Rational input is scaled by the LCM of the denominators, which preserves
/// the partial order it induces on monomials of any fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight { entries }
    }

    pub fn zero(n: usize) -> Self {
        Weight { entries: alloc::vec![0; n] }
    }

    pub fn from_rationals(entries: &[BigRational]) -> Result<Self> {
        let lcm = entries.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints = entries
            .iter()
            .map(|q| {
                let scaled = q.numer() * (&lcm / q.denom());
                scaled
                    .to_i64()
                    .ok_or_else(|| Error::Overflow(format!("weight entry {scaled} does not fit in i64")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { entries: ints })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `ω·a`, with a dimension check.
    pub fn value(&self, m: &Monomial) -> Result<i64> {
        if m.num_vars() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: m.num_vars() });
        }
        Ok(self.value_unchecked(m))
    }

    pub(crate) fn value_unchecked(&self, m: &Monomial) -> i64 {
        self.entries.iter().zip(m.exponents()).map(|(w, &e)| w * e as i64).sum()
    }

    /// `ω + c·(1,…,1)`.
    pub fn shifted(&self, c: i64) -> Weight {
        Weight { entries: self.entries.iter().map(|w| w + c).collect() }
    }

    /// Truncates or zero-pads to `n` entries.
    pub fn resized(&self, n: usize) -> Weight {
        let mut entries = self.entries.clone();
        entries.resize(n, 0);
        Weight { entries }
    }

    pub fn is_non_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.entries.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// `ω·a` for a monomial.
pub fn weight_value(m: &Monomial, w: &Weight) -> Result<i64> {
    w.value(m)
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
