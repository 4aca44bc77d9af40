use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::field::scalar_to_string;
use super::{FieldSpec, Monomial, Scalar, Weight};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;

/// `K[X_1, …, X_n]`: variable names plus the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: FieldSpec,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(names: Vec<String>, field: FieldSpec) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(alloc::format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(alloc::format!("variable `{name}` declared twice")));
            }
        }
        if let FieldSpec::Prime(p) = field {
            FieldSpec::prime(p)?;
        }
        Ok(Arc::new(PolyRing { names, field }))
    }

    pub fn from_names(names: &[&str], field: FieldSpec) -> Result<Arc<Self>> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), field)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The same variables over another field.
    pub fn with_field(&self, field: FieldSpec) -> Result<Arc<Self>> {
        Self::new(self.names.clone(), field)
    }

    /// Appends a fresh variable, named `preferred` unless that is taken, in
    /// which case underscores are appended until it is fresh.
    pub fn with_extra_variable(&self, preferred: &str) -> Arc<Self> {
        let mut name = String::from(preferred);
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = self.names.clone();
        names.push(name);
        Arc::new(PolyRing { names, field: self.field })
    }

    /// The ring without its last variable.
    pub fn without_last_variable(&self) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        names.pop();
        Self::new(names, self.field)
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A sparse polynomial with no stored zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.num_vars()), c)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial has wrong number of variables");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial) -> Self {
        Self::term(ring, m, Scalar::one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.num_vars(), i))
    }

    /// Collects terms, combining repeated monomials and mapping coefficients
    /// into the ring's field.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let field = ring.field();
        let mut out = Polynomial::zero(ring);
        for (m, c) in terms {
            if m.num_vars() != ring.num_vars() {
                return Err(Error::DimensionMismatch { expected: ring.num_vars(), found: m.num_vars() });
            }
            let c = field.from_rational(&c)?;
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// Adds `c·m` in place; `c` must already be a field element.
    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let field = self.ring.field();
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = field.add(existing, &c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `supp(f)` in canonical order.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), field.neg(c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    /// `c·f`; `c` is mapped into the field first.
    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let field = self.field();
        let c = field.from_rational(c).expect("scalar not representable in the field");
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, &c))).collect(),
        }
    }

    /// `c·m·f`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let field = self.field();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ring, Scalar::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Maximal `ω·a` over the support.
    pub fn max_weight(&self, w: &Weight) -> Result<Option<i64>> {
        if w.len() != self.ring.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.ring.num_vars(), found: w.len() });
        }
        Ok(self.terms.keys().map(|m| w.value_unchecked(m)).max())
    }

    /// `in_ω(f)`: the sum of the terms of maximal weight.
    pub fn initial_form(&self, w: &Weight) -> Result<Polynomial> {
        let max = self.max_weight(w)?.ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| w.value_unchecked(m) == max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// `t^{max ω·a} f(t^{-ω_1} X_1, …, t^{-ω_n} X_n)` in `ring_t`, whose last
    /// variable plays the role of `t`.
    pub fn homogenize_in(&self, w: &Weight, ring_t: &Arc<PolyRing>) -> Result<Polynomial> {
        let n = self.ring.num_vars();
        if ring_t.num_vars() != n + 1 || ring_t.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let max = match self.max_weight(w)? {
            Some(m) => m,
            None => return Ok(Polynomial::zero(ring_t)),
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let shift = max - w.value_unchecked(m);
                (m.extended(shift as u32), c.clone())
            })
            .collect();
        Ok(Polynomial { ring: ring_t.clone(), terms })
    }

    /// Substitutes the value `a` for the last variable, landing in `target`
    /// (the ring without that variable).
    pub fn evaluate_last(&self, a: &Scalar, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if target.num_vars() + 1 != self.ring.num_vars() || target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let field = self.field();
        let a = field.from_rational(a)?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let (rest, e) = m.split_last();
            let factor = field.pow(&a, e as i64)?;
            out.add_term(rest, field.mul(c, &factor));
        }
        Ok(out)
    }

    /// Renames variables: exponent `k` of each result monomial is exponent
    /// `perm[k]` of the source monomial.
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect(),
        }
    }

    /// Moves the polynomial into a ring with the same variables, mapping the
    /// coefficients into that ring's field.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.names() != self.ring.names() {
            return Err(Error::RingMismatch);
        }
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    /// Parses the text grammar, e.g. `x^2*y - 3/2*z^3`.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(ring, text)
    }

    /// Terms sorted by degrevlex, largest first; the order used for text.
    pub fn terms_descending(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| MonomialOrder::DegRevLex.cmp_monomials(b.0, a.0));
        v
    }

    pub(crate) fn from_map(ring: &Arc<PolyRing>, terms: BTreeMap<Monomial, Scalar>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics when the rings differ; use [`Polynomial::try_add`] otherwise.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }
}

/// Writes a monomial as `x^2*y`, or `1` for the unit.
pub fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut out = String::new();
    for (name, &e) in ring.names().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(name);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_descending().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&scalar_to_string(&abs))?;
            } else if abs.is_one() {
                f.write_str(&format_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", scalar_to_string(&abs), format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn qring() -> Arc<PolyRing> {
        PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = qring();
        assert_eq!(&p(&r, "x + y") + &p(&r, "-y"), p(&r, "x"));
    }

    #[test]
    fn difference_of_squares() {
        let r = qring();
        assert_eq!(&p(&r, "x + y") * &p(&r, "x - y"), p(&r, "x^2 - y^2"));
    }

    #[test]
    fn characteristic_three() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::prime(3).unwrap()).unwrap();
        assert!((&p(&r, "2*x") + &p(&r, "x")).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = qring();
        let s = PolyRing::from_names(&["x", "z"], FieldSpec::Rationals).unwrap();
        assert_eq!(p(&r, "x").try_add(&p(&s, "x")), Err(Error::RingMismatch));
    }

    #[test]
    fn initial_forms() {
        let r = qring();
        let f = p(&r, "x^2 + x*y + y^2");
        assert_eq!(f.initial_form(&Weight::new(vec![2, 1])).unwrap(), p(&r, "x^2"));
        assert_eq!(f.initial_form(&Weight::new(vec![1, 1])).unwrap(), f);
        let g = p(&r, "x + y");
        assert_eq!(g.initial_form(&Weight::new(vec![1, 1])).unwrap(), g);
        assert_eq!(Polynomial::zero(&r).initial_form(&Weight::new(vec![1, 1])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homogenization_with_respect_to_a_weight() {
        let r = qring();
        let rt = r.with_extra_variable("t");
        let f = p(&r, "x^2 + x*y");
        let w = Weight::new(vec![1, 0]);
        let ft = f.homogenize_in(&w, &rt).unwrap();
        assert_eq!(ft, p(&rt, "x^2 + t*x*y"));
        assert_eq!(ft.evaluate_last(&Scalar::zero(), &r).unwrap(), p(&r, "x^2"));
        assert_eq!(ft.evaluate_last(&Scalar::one(), &r).unwrap(), f);
        let h = p(&r, "x*y + y^2");
        assert_eq!(h.homogenize_in(&Weight::new(vec![1, 1]), &rt).unwrap(), p(&rt, "x*y + y^2"));
    }

    #[test]
    fn display_format() {
        let r = PolyRing::from_names(&["x", "y", "z"], FieldSpec::Rationals).unwrap();
        let f = p(&r, "x^2*y - 3/2*z^3");
        assert_eq!(f.to_string(), "x^2*y - 3/2*z^3");
        assert_eq!(p(&r, "-x + 1").to_string(), "-x + 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn extra_variable_is_fresh() {
        let r = PolyRing::from_names(&["t", "x"], FieldSpec::Rationals).unwrap();
        let rt = r.with_extra_variable("t");
        assert_eq!(rt.names()[2], "t_");
    }
}
