//! Circuits of graded pieces.
//!
//! A circuit of a subspace `W ⊆ A_d` is an inclusion-minimal support of a
//! nonzero element of `W`. In rank terms `S` is a circuit when
//! `rk_S W < |S|` while every proper nonempty subset `S'` has
//! `rk_{S'} W = |S'|`, that is when `W ∩ ⟨S⟩ ≠ 0` but `W ∩ ⟨S'⟩ = 0`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::linalg::dense::RankOracle;
use crate::linalg::{complement, graded_basis, GradedMatrix};
use crate::ring::{format_monomial, Monomial, PolyRing, Weight};

/// A circuit: a sorted, nonempty list of monomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    degree: u32,
    monomials: Vec<Monomial>,
}

impl Circuit {
    /// Sorts and deduplicates. All monomials must share one degree.
    pub fn new(mut monomials: Vec<Monomial>) -> Result<Self> {
        monomials.sort();
        monomials.dedup();
        let degree = monomials.first().ok_or(Error::ZeroPolynomial)?.degree();
        if let Some(m) = monomials.iter().find(|m| m.degree() != degree) {
            return Err(Error::WrongDegree { expected: degree, found: m.degree() });
        }
        Ok(Circuit { degree, monomials })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_subset_of(&self, other: &Circuit) -> bool {
        self.degree == other.degree && self.monomials.iter().all(|m| other.monomials.binary_search(m).is_ok())
    }

    /// The monomials of maximal `ω`-weight.
    pub fn initial(&self, w: &Weight) -> Result<Circuit> {
        let weights = self.monomials.iter().map(|m| w.value(m)).collect::<Result<Vec<_>>>()?;
        let max = *weights.iter().max().expect("nonempty");
        let top = self.monomials.iter().zip(&weights).filter(|(_, &v)| v == max).map(|(m, _)| m.clone()).collect();
        Ok(Circuit { degree: self.degree, monomials: top })
    }

    /// The monomials as text, largest first.
    pub fn to_strings(&self, ring: &PolyRing) -> Vec<String> {
        self.monomials.iter().rev().map(|m| format_monomial(ring, m)).collect()
    }
}

/// Circuits grouped by degree, with the truncation degree when the set
/// stands for `cs(I_{≤d})`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CircuitsSet {
    by_degree: BTreeMap<u32, BTreeSet<Circuit>>,
    truncation: Option<u32>,
}

impl CircuitsSet {
    pub fn new(truncation: Option<u32>) -> Self {
        CircuitsSet { by_degree: BTreeMap::new(), truncation }
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn insert(&mut self, c: Circuit) {
        self.by_degree.entry(c.degree).or_default().insert(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Circuit>) {
        for c in cs {
            self.insert(c);
        }
    }

    /// Degrees that carry at least one circuit.
    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_degree.iter().filter(|(_, s)| !s.is_empty()).map(|(d, _)| *d)
    }

    pub fn in_degree(&self, d: u32) -> impl Iterator<Item = &Circuit> {
        self.by_degree.get(&d).into_iter().flatten()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Circuit> {
        self.by_degree.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_degree.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, c: &Circuit) -> bool {
        self.by_degree.get(&c.degree).is_some_and(|s| s.contains(c))
    }

    /// Whether the monomial list (in any order) is one of the circuits.
    pub fn contains_support(&self, support: &[Monomial]) -> bool {
        Circuit::new(support.to_vec()).is_ok_and(|c| self.contains(&c))
    }

    /// Same circuits, ignoring the truncation marker.
    pub fn same_circuits(&self, other: &CircuitsSet) -> bool {
        self.iter().eq(other.iter())
    }

    /// Drops every circuit that strictly contains another of its degree.
    fn minimalize(&mut self) {
        for set in self.by_degree.values_mut() {
            let all: Vec<Circuit> = set.iter().cloned().collect();
            set.retain(|c| !all.iter().any(|o| o.len() < c.len() && o.is_subset_of(c)));
        }
    }
}

struct Bits(Vec<u64>);

impl Bits {
    fn from_indices(idx: &[usize], n: usize) -> Self {
        let mut v = alloc::vec![0u64; n.div_ceil(64)];
        for &i in idx {
            v[i / 64] |= 1 << (i % 64);
        }
        Bits(v)
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Whether `W ∩ ⟨S⟩ ≠ 0`, with `S` given by sorted column indices.
fn dependent(oracle: &RankOracle, dim: usize, cols: &[usize]) -> bool {
    oracle.rank_on_columns(&complement(cols, oracle.num_cols())) < dim
}

/// Largest possible circuit size: any `|S| > #cols − dim W` is dependent.
pub fn max_circuit_size(w: &GradedMatrix) -> usize {
    if w.dim() == 0 {
        0
    } else {
        w.num_cols() - w.dim() + 1
    }
}

/// All circuits of `W`, found by testing candidate supports in increasing
/// size and skipping supersets of circuits already found.
///
/// Fails with [`Error::CircuitsTruncated`] when `size_cap` is below the
/// largest size a circuit of `W` could have.
pub fn circuits_of_space(w: &GradedMatrix, size_cap: usize) -> Result<BTreeSet<Circuit>> {
    let bound = max_circuit_size(w);
    if size_cap < bound {
        return Err(Error::CircuitsTruncated { degree: w.degree(), size_cap });
    }
    let n = w.num_cols();
    let dim = w.dim();
    let oracle = w.rank_oracle();
    let mut found: Vec<Bits> = Vec::new();
    let mut out = BTreeSet::new();
    for k in 1..=bound {
        let mut level = Vec::new();
        for cols in (0..n).combinations(k) {
            let bits = Bits::from_indices(&cols, n);
            if found.iter().any(|c| c.is_subset_of(&bits)) {
                continue;
            }
            if dependent(&oracle, dim, &cols) {
                let monomials = cols.iter().map(|&c| w.basis()[c].clone()).collect();
                out.insert(Circuit::new(monomials)?);
                level.push(bits);
            }
        }
        found.extend(level);
    }
    Ok(out)
}

/// The rank criterion applied to a single support.
pub fn is_circuit(w: &GradedMatrix, support: &[Monomial]) -> Result<bool> {
    let cols = w.columns_of(support)?;
    if cols.is_empty() {
        return Ok(false);
    }
    let oracle = w.rank_oracle();
    let dim = w.dim();
    if !dependent(&oracle, dim, &cols) {
        return Ok(false);
    }
    Ok((0..cols.len()).all(|skip| {
        let sub: Vec<usize> = cols.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &c)| c).collect();
        sub.is_empty() || !dependent(&oracle, dim, &sub)
    }))
}

/// `cs(I_{≤d})`, the union of the circuits of `I_h` for `h ≤ d`.
pub fn circuits_truncated(ideal: &IdealHandle, d: u32) -> Result<CircuitsSet> {
    circuits_truncated_capped(ideal, d, usize::MAX)
}

/// Like [`circuits_truncated`] but refuses pieces needing circuits larger
/// than `size_cap`.
pub fn circuits_truncated_capped(ideal: &IdealHandle, d: u32, size_cap: usize) -> Result<CircuitsSet> {
    let mut set = CircuitsSet::new(Some(d));
    for h in 0..=d {
        set.extend(circuits_of_space(&graded_basis(ideal, h)?, size_cap)?);
    }
    Ok(set)
}

/// `{in_ω(S) : S ∈ T}`, keeping only the minimal ones in each degree.
pub fn initial_circuits(t: &CircuitsSet, w: &Weight) -> Result<CircuitsSet> {
    let mut out = CircuitsSet::new(t.truncation);
    for c in t.iter() {
        out.insert(c.initial(w)?);
    }
    out.minimalize();
    Ok(out)
}

/// `α_ω(W) = (rk^{S_{ω_1 d}} W, …, rk^{S_1} W)` where `S_a` holds the
/// degree-`d` monomials of weight below `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector {
    pub degree: u32,
    pub weight: Weight,
    pub values: Vec<usize>,
}

impl AlphaVector {
    /// `rk^{S_a} W` for `1 ≤ a ≤ ω_1 d`.
    pub fn at(&self, a: i64) -> Option<usize> {
        let len = self.values.len() as i64;
        (1..=len).contains(&a).then(|| self.values[(len - a) as usize])
    }

    /// Pointwise comparison; `None` when the vectors are incomparable.
    pub fn compare(&self, other: &AlphaVector) -> Option<Ordering> {
        if self.values.len() != other.values.len() {
            return None;
        }
        let mut ord = Ordering::Equal;
        for (a, b) in self.values.iter().zip(&other.values) {
            match (ord, a.cmp(b)) {
                (_, Ordering::Equal) => {}
                (Ordering::Equal, o) => ord = o,
                (o1, o2) if o1 != o2 => return None,
                _ => {}
            }
        }
        Some(ord)
    }

    /// Pointwise `self ≥ other`.
    pub fn dominates(&self, other: &AlphaVector) -> bool {
        matches!(self.compare(other), Some(Ordering::Greater | Ordering::Equal))
    }
}

fn check_sorted_weight(w: &Weight, n: usize) -> Result<()> {
    if w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.len() });
    }
    if !w.is_non_increasing() || w.entries().iter().any(|&e| e < 0) {
        return Err(Error::InvalidWeight(alloc::format!("{w} is not non-increasing and non-negative")));
    }
    Ok(())
}

/// `rk^{S_a} W`, the rank of `W` on the monomials of weight at least `a`.
pub fn sup_rank_at(w: &GradedMatrix, weight: &Weight, a: i64) -> Result<usize> {
    if weight.len() != w.ring().num_vars() {
        return Err(Error::DimensionMismatch { expected: w.ring().num_vars(), found: weight.len() });
    }
    let cols: Vec<usize> = (0..w.num_cols()).filter(|&c| weight.value_unchecked(&w.basis()[c]) >= a).collect();
    Ok(w.rank_oracle().rank_on_columns(&cols))
}

/// The rank vector `α_ω(W)`. The weight must be non-increasing and
/// non-negative (see `generic::normalize_weight`).
pub fn alpha_vector(w: &GradedMatrix, weight: &Weight) -> Result<AlphaVector> {
    check_sorted_weight(weight, w.ring().num_vars())?;
    let top = weight.entries().first().copied().unwrap_or(0) * w.degree() as i64;
    let oracle = w.rank_oracle();
    let values = (1..=top)
        .rev()
        .map(|a| {
            let cols: Vec<usize> =
                (0..w.num_cols()).filter(|&c| weight.value_unchecked(&w.basis()[c]) >= a).collect();
            oracle.rank_on_columns(&cols)
        })
        .collect();
    Ok(AlphaVector { degree: w.degree(), weight: weight.clone(), values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldSpec, Polynomial};
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring2(field: FieldSpec) -> Arc<PolyRing> {
        PolyRing::from_names(&["x", "y"], field).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn c(ms: &[&[u32]]) -> Circuit {
        Circuit::new(ms.iter().map(|e| m(e)).collect()).unwrap()
    }

    fn set(cs: &[Circuit]) -> CircuitsSet {
        let mut s = CircuitsSet::new(None);
        s.extend(cs.iter().cloned());
        s
    }

    #[test]
    fn circuits_of_small_spaces() {
        let r = ring2(FieldSpec::Rationals);
        let w = GradedMatrix::from_polynomials(&r, 1, &[Polynomial::parse(&r, "x + y").unwrap()]).unwrap();
        assert_eq!(circuits_of_space(&w, 2).unwrap().into_iter().collect::<Vec<_>>(), vec![c(&[&[1, 0], &[0, 1]])]);
        assert_eq!(circuits_of_space(&w, 1), Err(Error::CircuitsTruncated { degree: 1, size_cap: 1 }));

        let full = GradedMatrix::full_space(&r, 2);
        let cs: Vec<Circuit> = circuits_of_space(&full, 3).unwrap().into_iter().collect();
        assert_eq!(cs, vec![c(&[&[0, 2]]), c(&[&[1, 1]]), c(&[&[2, 0]])]);

        let w = graded_basis(&ideal(&r, &["x + y", "y"]), 1).unwrap();
        let cs: Vec<Circuit> = circuits_of_space(&w, 2).unwrap().into_iter().collect();
        assert_eq!(cs, vec![c(&[&[0, 1]]), c(&[&[1, 0]])]);
    }

    #[test]
    fn pair_example_has_equal_circuits() {
        let r = ring2(FieldSpec::Rationals);
        let a = circuits_truncated(&ideal(&r, &["x + y", "x^2", "x*y", "y^2"]), 2).unwrap();
        let b = circuits_truncated(&ideal(&r, &["x - y", "x^2", "x*y", "y^2"]), 2).unwrap();
        let expected = set(&[c(&[&[1, 0], &[0, 1]]), c(&[&[2, 0]]), c(&[&[1, 1]]), c(&[&[0, 2]])]);
        assert!(a.same_circuits(&expected));
        assert_eq!(a, b);
    }

    #[test]
    fn monomial_ideal_circuits_are_its_monomials() {
        let r = ring2(FieldSpec::Rationals);
        let cs = circuits_truncated(&ideal(&r, &["x^2"]), 3).unwrap();
        let expected = set(&[c(&[&[2, 0]]), c(&[&[3, 0]]), c(&[&[2, 1]])]);
        assert!(cs.same_circuits(&expected));
    }

    #[test]
    fn rank_criterion() {
        let r = ring2(FieldSpec::Rationals);
        let w = graded_basis(&ideal(&r, &["x^2 + x*y", "y^2"]), 2).unwrap();
        assert!(is_circuit(&w, &[m(&[2, 0]), m(&[1, 1])]).unwrap());
        assert!(is_circuit(&w, &[m(&[0, 2])]).unwrap());
        assert!(!is_circuit(&w, &[m(&[2, 0])]).unwrap());
        assert!(!is_circuit(&w, &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]).unwrap());
    }

    #[test]
    fn initial_circuit_sets() {
        let t = set(&[c(&[&[1, 0], &[0, 1]])]);
        assert_eq!(initial_circuits(&t, &Weight::new(vec![2, 1])).unwrap(), set(&[c(&[&[1, 0]])]));
        assert_eq!(initial_circuits(&t, &Weight::new(vec![1, 1])).unwrap(), t);

        let r = ring2(FieldSpec::Rationals);
        let cs = circuits_truncated(&ideal(&r, &["x + y", "x^2", "x*y", "y^2"]), 2).unwrap();
        let init = initial_circuits(&cs, &Weight::new(vec![2, 1])).unwrap();
        let expected = set(&[c(&[&[1, 0]]), c(&[&[2, 0]]), c(&[&[1, 1]]), c(&[&[0, 2]])]);
        assert!(init.same_circuits(&expected));
    }

    #[test]
    fn minimalization_drops_supersets() {
        let t = set(&[c(&[&[2, 0], &[1, 1]]), c(&[&[2, 0], &[0, 2]])]);
        let init = initial_circuits(&t, &Weight::new(vec![1, 0])).unwrap();
        assert!(init.same_circuits(&set(&[c(&[&[2, 0]])])));
    }

    #[test]
    fn alpha_vectors() {
        let r = ring2(FieldSpec::Rationals);
        let w = GradedMatrix::from_polynomials(&r, 2, &[Polynomial::parse(&r, "x^2 + x*y").unwrap()]).unwrap();
        let alpha = alpha_vector(&w, &Weight::new(vec![1, 0])).unwrap();
        assert_eq!(alpha.values, vec![1, 1]);
        let zero = GradedMatrix::from_polynomials(&r, 2, &[]).unwrap();
        assert_eq!(alpha_vector(&zero, &Weight::new(vec![2, 1])).unwrap().values, vec![0; 4]);
        assert!(alpha_vector(&w, &Weight::new(vec![0, 1])).is_err());
        assert!(alpha_vector(&w, &Weight::new(vec![1, -1])).is_err());
        assert_eq!(alpha.at(2), Some(1));
        assert_eq!(sup_rank_at(&w, &Weight::new(vec![1, 0]), 0).unwrap(), 1);
    }

    #[test]
    fn alpha_comparison() {
        let w = Weight::new(vec![1, 0]);
        let a = AlphaVector { degree: 2, weight: w.clone(), values: vec![1, 2] };
        let b = AlphaVector { degree: 2, weight: w.clone(), values: vec![1, 1] };
        let c = AlphaVector { degree: 2, weight: w, values: vec![0, 2] };
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
        assert_eq!(b.compare(&c), None);
        assert!(a.dominates(&a));
    }
}
