//! Gröbner-fan cells.
//!
//! The cell of a weight `ω` is read off the reduced basis `{f_1,…,f_r}` for
//! `≺_ω`: another weight `ω'` gives the same initial ideal exactly when
//! `in_ω(supp f_i) = in_ω'(supp f_i)` for every `i`. Linearizing this gives a
//! polyhedral cone whose relative interior is the class of `ω`.
//!
//! Cells are discovered by sampling integer weights in a box. Each sample is
//! either certified to lie inside an already recorded cell or opens a new
//! cell, so everything reported is certified, but only cells that meet the
//! box are found.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::circuits::circuits_truncated;
use crate::error::{Error, Result};
use crate::generic::{gcs_truncated, RandomSpec};
use crate::groebner::{fingerprint, hilbert_function, initial_ideal_w, lex_segment, IdealHandle, default_lex_cap};
use crate::order::MonomialOrder;
use crate::ring::{Monomial, Polynomial, Weight};

/// A polyhedral cone `{ω' : ω'·v = 0 for v in equalities, ω'·u ≥ 0 for u in
/// inequalities}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    equalities: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
}

fn primitive(v: &[i64]) -> Option<Vec<i64>> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    (g != 0).then(|| v.iter().map(|&x| x / g).collect())
}

fn dot(w: &[i64], v: &[i64]) -> i64 {
    w.iter().zip(v).map(|(a, b)| a * b).sum()
}

impl Cone {
    /// Divides every vector by the gcd of its entries, gives equalities a
    /// positive first nonzero entry, drops zero vectors and duplicates.
    pub fn new(equalities: Vec<Vec<i64>>, inequalities: Vec<Vec<i64>>) -> Self {
        let eqs: BTreeSet<Vec<i64>> = equalities
            .iter()
            .filter_map(|v| primitive(v))
            .map(|v| {
                if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    v.iter().map(|x| -x).collect()
                } else {
                    v
                }
            })
            .collect();
        let ineqs: BTreeSet<Vec<i64>> = inequalities.iter().filter_map(|v| primitive(v)).collect();
        Cone { equalities: eqs.into_iter().collect(), inequalities: ineqs.into_iter().collect() }
    }

    /// The whole space.
    pub fn everything() -> Self {
        Cone { equalities: Vec::new(), inequalities: Vec::new() }
    }

    pub fn equalities(&self) -> &[Vec<i64>] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Vec<i64>] {
        &self.inequalities
    }

    /// Full-dimensional cones carry no equalities.
    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Membership in the closed cone.
    pub fn contains(&self, w: &Weight) -> bool {
        let e = w.entries();
        self.equalities.iter().all(|v| dot(e, v) == 0) && self.inequalities.iter().all(|v| dot(e, v) >= 0)
    }

    /// Membership in the relative interior: equalities hold and every
    /// inequality is strict.
    pub fn contains_strictly(&self, w: &Weight) -> bool {
        let e = w.entries();
        self.equalities.iter().all(|v| dot(e, v) == 0) && self.inequalities.iter().all(|v| dot(e, v) > 0)
    }
}

/// The constraints coming from the supports of a list of polynomials: for
/// each `f`, the top-weight monomials tie and beat every other monomial.
fn support_cone<'a>(polys: impl IntoIterator<Item = &'a Polynomial>, w: &Weight) -> Result<Cone> {
    let mut eqs = Vec::new();
    let mut ineqs = Vec::new();
    for f in polys {
        let top: Vec<Monomial> = f.initial_form(w)?.support();
        let rest: Vec<Monomial> = f.support().into_iter().filter(|m| !top.contains(m)).collect();
        for (i, a) in top.iter().enumerate() {
            for b in &top[i + 1..] {
                eqs.push(a.exponent_difference(b));
            }
            for c in &rest {
                ineqs.push(a.exponent_difference(c));
            }
        }
    }
    Ok(Cone::new(eqs, ineqs))
}

/// The closed cell of `ω` in the Gröbner fan of `I`.
pub fn cone_of(ideal: &IdealHandle, w: &Weight, tie: &MonomialOrder) -> Result<Cone> {
    let gb = ideal.groebner(&MonomialOrder::weighted(w.clone(), tie.clone())?)?;
    support_cone(gb.elements(), w)
}

/// Whether `in_ω(I) = in_ω'(I)`, decided on the supports of the reduced
/// basis for `≺_ω`.
pub fn weight_equiv(ideal: &IdealHandle, w: &Weight, w2: &Weight, tie: &MonomialOrder) -> Result<bool> {
    let gb = ideal.groebner(&MonomialOrder::weighted(w.clone(), tie.clone())?)?;
    for f in gb.elements() {
        if f.initial_form(w)?.support() != f.initial_form(w2)?.support() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One cell: the reduced degrevlex basis of its initial ideal, the first
/// weight that found it, and its cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanCell {
    pub fingerprint: Vec<Polynomial>,
    pub representative: Weight,
    pub cone: Cone,
}

/// The cells met by a sampled box of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanSketch {
    pub cells: Vec<FanCell>,
    pub bound: i64,
    pub step: i64,
    pub samples: usize,
}

impl FanSketch {
    pub fn full_dimensional(&self) -> impl Iterator<Item = &FanCell> {
        self.cells.iter().filter(|c| c.cone.is_full_dimensional())
    }

    /// Cells as (fingerprint, cone) pairs, independent of discovery order
    /// and representatives.
    pub fn cell_set(&self) -> BTreeSet<(Vec<Polynomial>, Cone)> {
        self.cells.iter().map(|c| (c.fingerprint.clone(), c.cone.clone())).collect()
    }
}

/// Grid weights in `[−B, B]ⁿ` with spacing `step`, keeping one translate per
/// class modulo `(1,…,1)`: those with some entry equal to `−B`.
fn box_weights(n: usize, bound: i64, step: i64) -> Vec<Weight> {
    let values: Vec<i64> = (0..).map(|k| -bound + k * step).take_while(|&v| v <= bound).collect();
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; n];
    if n == 0 || values.is_empty() {
        return out;
    }
    loop {
        if idx.contains(&0) {
            out.push(Weight::new(idx.iter().map(|&i| values[i]).collect()));
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn check_box(bound: i64, step: i64) -> Result<()> {
    if bound < 1 || step < 1 {
        return Err(Error::InvalidWeight(format!("box bound {bound} and step {step} must be positive")));
    }
    Ok(())
}

/// Samples the box and records every cell it meets.
pub fn enumerate_fan(ideal: &IdealHandle, bound: i64, step: i64, tie: &MonomialOrder) -> Result<FanSketch> {
    check_box(bound, step)?;
    let samples = box_weights(ideal.ring().num_vars(), bound, step);
    let mut cells: Vec<FanCell> = Vec::new();
    for w in &samples {
        if cells.iter().any(|c| c.cone.contains_strictly(w)) {
            continue;
        }
        let fp = fingerprint(&initial_ideal_w(ideal, w, tie)?);
        let cone = cone_of(ideal, w, tie)?;
        if !cone.contains_strictly(w) {
            return Err(Error::FanInconsistent(format!("weight {w} is not inside its own cone")));
        }
        if cells.iter().any(|c| c.fingerprint == fp) {
            return Err(Error::FanInconsistent(format!("weight {w} reaches a recorded initial ideal outside its cell")));
        }
        cells.push(FanCell { fingerprint: fp, representative: w.clone(), cone });
    }
    Ok(FanSketch { cells, bound, step, samples: samples.len() })
}

/// The fan of a principal ideal `(f)` straight from the supports: the cell
/// of `ω` is fixed by which monomials of `f` reach the maximal weight.
pub fn newton_fan_oracle(f: &Polynomial, bound: i64, step: i64) -> Result<FanSketch> {
    check_box(bound, step)?;
    let support = f.support();
    let samples = box_weights(f.ring().num_vars(), bound, step);
    let mut cells: BTreeMap<Vec<Monomial>, FanCell> = BTreeMap::new();
    let mut order = Vec::new();
    for w in &samples {
        let values: Vec<i64> = support.iter().map(|m| w.value(m)).collect::<Result<_>>()?;
        let max = *values.iter().max().ok_or(Error::ZeroPolynomial)?;
        let top: Vec<Monomial> =
            support.iter().zip(&values).filter(|(_, &v)| v == max).map(|(m, _)| m.clone()).collect();
        if cells.contains_key(&top) {
            continue;
        }
        let mut eqs = Vec::new();
        let mut ineqs = Vec::new();
        for a in &top {
            for b in &top {
                eqs.push(a.exponent_difference(b));
            }
            for (c, &v) in support.iter().zip(&values) {
                if v != max {
                    ineqs.push(a.exponent_difference(c));
                }
            }
        }
        let initial = Polynomial::from_terms(f.ring(), top.iter().map(|m| (m.clone(), f.coefficient(m))))?;
        let fingerprint = alloc::vec![MonomialOrder::canonical().monic(&initial)?];
        order.push(top.clone());
        cells.insert(top, FanCell { fingerprint, representative: w.clone(), cone: Cone::new(eqs, ineqs) });
    }
    let cells = order.iter().map(|k| cells[k].clone()).collect();
    Ok(FanSketch { cells, bound, step, samples: samples.len() })
}

/// Union of the reduced bases of the full-dimensional cells, each made monic
/// for degrevlex so that scalar multiples collapse.
pub fn universal_basis(ideal: &IdealHandle, sketch: &FanSketch) -> Result<Vec<Polynomial>> {
    let mut out = BTreeSet::new();
    for cell in sketch.full_dimensional() {
        let order = MonomialOrder::weighted(cell.representative.clone(), MonomialOrder::DegRevLex)?;
        for g in ideal.groebner(&order)?.elements() {
            out.insert(MonomialOrder::canonical().monic(g)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Which circuits sets are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareMode {
    /// `cs(I_{≤D})` against `cs(J_{≤D})`.
    Deterministic,
    /// `gcs(I_{≤D})` against `gcs(J_{≤D})`.
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanVerdict {
    /// The truncated circuits sets agree, so the fans are equal.
    EqualFanCertified,
    /// The circuits sets differ; the criterion only works in one direction.
    Inconclusive,
    /// The Hilbert functions differ.
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanComparison {
    pub verdict: FanVerdict,
    pub mode: CompareMode,
    /// The lex-segment bound `D`, when the Hilbert functions agree.
    pub bound: Option<u32>,
    pub cap: u32,
    /// Set for generic comparisons over a prime field.
    pub heuristic: bool,
}

/// Compares the fans of `I` and `J` through their circuits sets truncated at
/// the lex-segment bound `D` of their common Hilbert function.
pub fn generic_fan_compare(
    i: &IdealHandle,
    j: &IdealHandle,
    spec: &RandomSpec,
    mode: CompareMode,
    retries: u32,
    cap: Option<u32>,
) -> Result<FanComparison> {
    let cap = cap.unwrap_or_else(|| default_lex_cap(i).max(default_lex_cap(j)));
    let hi = hilbert_function(i, cap);
    let heuristic = mode == CompareMode::Generic && i.ring().field().is_prime_field();
    if hi != hilbert_function(j, cap) {
        return Ok(FanComparison { verdict: FanVerdict::Incomparable, mode, bound: None, cap, heuristic });
    }
    let d = lex_segment(&hi, i.ring(), cap)?.bound;
    let equal = match mode {
        CompareMode::Deterministic => circuits_truncated(i, d)? == circuits_truncated(j, d)?,
        CompareMode::Generic => {
            gcs_truncated(i, d, spec, retries)?.circuits == gcs_truncated(j, d, spec, retries)?.circuits
        }
    };
    let verdict = if equal { FanVerdict::EqualFanCertified } else { FanVerdict::Inconclusive };
    Ok(FanComparison { verdict, mode, bound: Some(d), cap, heuristic })
}
