use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field elements. Over the rationals this is the reduced fraction itself;
/// over `GF(p)` it is the integer residue in `0..p`, stored as a fraction with
/// denominator one so both fields share one representation.
pub type Scalar = BigRational;

/// Default modulus for the prime-field fast path.
pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// Deterministic Miller-Rabin; these bases suffice for every `u64`.
fn is_prime(p: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if p < 2 {
        return false;
    }
    if let Some(&b) = BASES.iter().find(|&&b| p.is_multiple_of(b)) {
        return p == b;
    }
    let s = (p - 1).trailing_zeros();
    let d = (p - 1) >> s;
    BASES.iter().all(|&a| {
        let mut x = powmod(a, d, p);
        if x == 1 || x == p - 1 {
            return true;
        }
        for _ in 1..s {
            x = mulmod(x, x, p);
            if x == p - 1 {
                return true;
            }
        }
        false
    })
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    /// `GF(p)`; `p` must be a prime below 2^62.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= (1 << 62) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    fn residue(&self, a: &Scalar, p: u64) -> u64 {
        debug_assert!(a.is_integer());
        a.numer().to_u64().expect("prime-field scalar out of range") % p
    }

    fn from_residue(r: u64) -> Scalar {
        Scalar::from_integer(BigInt::from(r))
    }

    /// Maps an integer into the field.
    pub fn from_int(&self, v: impl Into<BigInt>) -> Scalar {
        let v: BigInt = v.into();
        match self {
            FieldSpec::Rationals => Scalar::from_integer(v),
            FieldSpec::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Self::from_residue(r.to_u64().unwrap())
            }
        }
    }

    /// Maps an arbitrary rational into the field. Fails over `GF(p)` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(q.clone()),
            FieldSpec::Prime(_) => {
                let num = self.from_int(q.numer().clone());
                let den = self.from_int(q.denom().clone());
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.mul(&num, &self.inv(&den)?))
            }
        }
    }

    /// Whether `a` is already a canonical element of this field.
    pub fn contains(&self, a: &Scalar) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::Prime(p) => {
                a.is_integer() && !a.is_negative() && a.numer() < &BigInt::from(*p)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a + b,
            FieldSpec::Prime(p) => {
                let s = (self.residue(a, *p) as u128 + self.residue(b, *p) as u128) % *p as u128;
                Self::from_residue(s as u64)
            }
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => -a,
            FieldSpec::Prime(p) => {
                let r = self.residue(a, *p);
                Self::from_residue(if r == 0 { 0 } else { p - r })
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a * b,
            FieldSpec::Prime(p) => {
                Self::from_residue(mulmod(self.residue(a, *p), self.residue(b, *p), *p))
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldSpec::Rationals => a.recip(),
            FieldSpec::Prime(p) => Self::from_residue(powmod(self.residue(a, *p), p - 2, *p)),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` for any integer `e`; negative exponents need `a != 0`.
    pub fn pow(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            k >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Text form of a scalar: `a` or `a/b`.
pub fn scalar_to_string(a: &Scalar) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        alloc::format!("{}/{}", a.numer(), a.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic_wraps() {
        let f = FieldSpec::prime(3).unwrap();
        let two = f.from_int(2);
        let one = f.from_int(1);
        assert!(f.add(&two, &one).is_zero());
        assert_eq!(f.neg(&one), two);
        assert_eq!(f.mul(&two, &two), one);
        assert_eq!(f.inv(&two).unwrap(), two);
        assert_eq!(f.from_int(-1), two);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime((1 << 61) - 1).is_ok());
        assert!(FieldSpec::prime(3_215_031_751).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(DEFAULT_PRIME).is_ok());
    }

    #[test]
    fn rational_into_prime_field() {
        let f = FieldSpec::prime(7).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), f.from_int(4));
        let bad = BigRational::new(1.into(), 7.into());
        assert_eq!(f.from_rational(&bad), Err(Error::DivisionByZero));
    }

    #[test]
    fn negative_powers() {
        let q = FieldSpec::Rationals;
        let two = q.from_int(2);
        assert_eq!(q.pow(&two, -2).unwrap(), BigRational::new(1.into(), 4.into()));
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.pow(&f.from_int(2), -1).unwrap(), f.from_int(3));
    }
}
