use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::IdealHandle;
use crate::error::{Error, Result};
use crate::ring::{Monomial, PolyRing, Polynomial};

/// Dimensions of the graded pieces `I_d` for `0 ≤ d ≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    num_vars: usize,
    ideal_dims: Vec<usize>,
    lex_generator_bound: Option<u32>,
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim A_d` for `n` variables.
pub(crate) fn monomial_count(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(d as u64 + n as u64 - 1, n as u64 - 1) as usize
}

impl HilbertData {
    pub fn new(num_vars: usize, ideal_dims: Vec<usize>) -> Self {
        HilbertData { num_vars, ideal_dims, lex_generator_bound: None }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.ideal_dims.len().saturating_sub(1) as u32
    }

    /// `dim I_d` for each degree.
    pub fn ideal_dims(&self) -> &[usize] {
        &self.ideal_dims
    }

    /// `dim (A/I)_d` for each degree.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.ideal_dims
            .iter()
            .enumerate()
            .map(|(d, &v)| monomial_count(self.num_vars, d as u32) - v)
            .collect()
    }

    /// The lex-segment bound `D`, once it has been computed.
    pub fn lex_generator_bound(&self) -> Option<u32> {
        self.lex_generator_bound
    }
}

/// `dim I_d` for `d ≤ dmax`, counted as the degree-`d` monomials lying in
/// the canonical initial ideal.
pub fn hilbert_function(ideal: &IdealHandle, dmax: u32) -> HilbertData {
    let n = ideal.ring().num_vars();
    let leads = ideal.canonical_basis().leading_monomials();
    let dims = (0..=dmax)
        .map(|d| {
            Monomial::all_of_degree(n, d)
                .iter()
                .filter(|m| leads.iter().any(|l| l.divides(m)))
                .count()
        })
        .collect();
    HilbertData::new(n, dims)
}

/// A lex-segment ideal together with its largest generator degree `D`.
#[derive(Clone, Debug)]
pub struct LexSegment {
    pub ideal: IdealHandle,
    pub generators: Vec<Monomial>,
    pub bound: u32,
    pub cap: u32,
    pub hilbert: HilbertData,
}

/// The cap used when none is given: the largest degree of a generator of
/// the canonical initial ideal plus the number of variables.
pub fn default_lex_cap(ideal: &IdealHandle) -> u32 {
    ideal.canonical_basis().max_degree() + ideal.ring().num_vars() as u32
}

/// Builds the lex-segment ideal with Hilbert function `h` up to degree `cap`.
///
/// Each `L_d` is spanned by the `dim I_d` lex-largest monomials of degree
/// `d`. The result is rejected if some `A_1·L_{d-1}` is not inside `L_d`, and
/// if a minimal generator shows up in the last `n` degrees below the cap,
/// since stabilization has then not been observed.
pub fn lex_segment(h: &HilbertData, ring: &Arc<PolyRing>, cap: u32) -> Result<LexSegment> {
    let n = ring.num_vars();
    if h.num_vars != n {
        return Err(Error::DimensionMismatch { expected: n, found: h.num_vars });
    }
    if cap > h.max_degree() {
        return Err(Error::DimensionMismatch { expected: cap as usize, found: h.max_degree() as usize });
    }
    let mut generators = Vec::new();
    let mut previous: BTreeSet<Monomial> = BTreeSet::new();
    for d in 0..=cap {
        let all = Monomial::all_of_degree(n, d);
        let size = h.ideal_dims[d as usize];
        if size > all.len() {
            return Err(Error::MacaulayViolation { degree: d });
        }
        let segment: BTreeSet<Monomial> = all.into_iter().take(size).collect();
        let mut shifted = BTreeSet::new();
        for m in &previous {
            for i in 0..n {
                let xm = m.mul(&Monomial::var(n, i));
                if !segment.contains(&xm) {
                    return Err(Error::MacaulayViolation { degree: d });
                }
                shifted.insert(xm);
            }
        }
        generators.extend(segment.iter().filter(|m| !shifted.contains(*m)).cloned());
        previous = segment;
    }
    let bound = generators.iter().map(Monomial::degree).max().unwrap_or(0);
    if !generators.is_empty() && bound + n as u32 > cap {
        return Err(Error::LexCapTooSmall { cap, last_generator_degree: bound });
    }
    let gens = generators.iter().map(|m| Polynomial::monomial(ring, m.clone())).collect();
    let ideal = IdealHandle::new(ring, gens)?;
    let mut hilbert = h.clone();
    hilbert.lex_generator_bound = Some(bound);
    Ok(LexSegment { ideal, generators, bound, cap, hilbert })
}

/// The lex-segment ideal sharing the Hilbert function of `ideal`, with the
/// default cap unless one is given.
pub fn lex_segment_of(ideal: &IdealHandle, cap: Option<u32>) -> Result<LexSegment> {
    let cap = cap.unwrap_or_else(|| default_lex_cap(ideal));
    lex_segment(&hilbert_function(ideal, cap), ideal.ring(), cap)
}

/// Tries [`lex_segment_of`] with the default cap, then with the cap raised
/// by `n` at a time, up to `max_cap`. Every accepted result is certified at
/// its own cap; the last failure is returned otherwise.
pub fn lex_segment_search(ideal: &IdealHandle, max_cap: u32) -> Result<LexSegment> {
    let n = ideal.ring().num_vars().max(1) as u32;
    let mut cap = default_lex_cap(ideal);
    loop {
        match lex_segment_of(ideal, Some(cap)) {
            Err(Error::LexCapTooSmall { .. }) if cap + n <= max_cap => cap += n,
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::initial_ideal;
    use crate::order::MonomialOrder;
    use crate::ring::FieldSpec;
    use alloc::vec;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn hilbert_functions() {
        let r = ring2();
        let h = hilbert_function(&ideal(&r, &["x^2", "x*y", "y^2"]), 4);
        assert_eq!(h.quotient_dims(), vec![1, 2, 0, 0, 0]);
        assert_eq!(hilbert_function(&ideal(&r, &["x*y"]), 5).ideal_dims(), &[0, 0, 1, 2, 3, 4]);
        assert_eq!(hilbert_function(&IdealHandle::zero(&r), 3).ideal_dims(), &[0, 0, 0, 0]);
    }

    #[test]
    fn hilbert_function_survives_initial_ideals() {
        let r = PolyRing::from_names(&["x", "y", "z"], FieldSpec::Rationals).unwrap();
        let i = ideal(&r, &["x^2 - y*z", "x*y - z^2"]);
        let lex = initial_ideal(&i, &MonomialOrder::Lex).unwrap();
        assert_eq!(hilbert_function(&i, 6), hilbert_function(&lex, 6));
    }

    #[test]
    fn lex_segments() {
        let r = ring2();
        let seg = lex_segment_of(&ideal(&r, &["x*y"]), None).unwrap();
        assert_eq!(seg.generators, vec![Monomial::new(vec![2, 0])]);
        assert_eq!(seg.bound, 2);
        let seg = lex_segment_of(&ideal(&r, &["x^2", "x*y"]), None).unwrap();
        assert_eq!(seg.generators, vec![Monomial::new(vec![1, 1]), Monomial::new(vec![2, 0])]);
        assert_eq!(seg.bound, 2);
        let seg = lex_segment_of(&IdealHandle::zero(&r), None).unwrap();
        assert!(seg.generators.is_empty());
        assert_eq!(seg.bound, 0);
    }

    #[test]
    fn lex_segment_errors() {
        let r = ring2();
        let bad = HilbertData::new(2, vec![0, 1, 1]);
        assert_eq!(lex_segment(&bad, &r, 2).unwrap_err(), Error::MacaulayViolation { degree: 2 });
        let h = hilbert_function(&ideal(&r, &["x*y"]), 3);
        assert!(matches!(lex_segment(&h, &r, 3), Err(Error::LexCapTooSmall { cap: 3, .. })));
    }

    #[test]
    fn raising_the_cap() {
        // Two general quadrics in three variables: the lex ideal needs a
        // generator in degree 4, beyond what the default cap certifies.
        let r = PolyRing::from_names(&["x", "y", "z"], FieldSpec::Rationals).unwrap();
        let i = ideal(&r, &["x^2 + y*z", "y^2 + x*z"]);
        assert!(matches!(lex_segment_of(&i, None), Err(Error::LexCapTooSmall { .. })));
        let seg = lex_segment_search(&i, 20).unwrap();
        assert_eq!(seg.bound, 4);
        assert_eq!(seg.hilbert.quotient_dims()[4..], [4, 4, 4, 4, 4][..seg.cap as usize - 3]);
    }
}
