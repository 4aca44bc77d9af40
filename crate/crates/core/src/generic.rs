//! Random coordinate changes and what they certify.
//!
//! Genericity is realized by random specialization. A truncated generic
//! circuits set is accepted only when two independent random changes give
//! the same answer; otherwise the entry range is doubled and the draw
//! repeated. Over a prime field the underlying genericity argument (which
//! needs an infinite field) does not apply, so results there are flagged as
//! heuristic.
//!
//! The subgroup `B_ω` of unipotent upper-triangular matrices acts by the
//! column convention `X_j ↦ Σ_{i≤j} m_ij X_i`: with `ω_1 ≥ … ≥ ω_n` every
//! variable then only picks up variables of strictly larger weight, so every
//! monomial maps to itself plus monomials of equal or greater weight. Under
//! the row convention this fails already for `I = (x+y)`, `ω = (1,0)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuits::{circuits_truncated, CircuitsSet};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, initial_ideal_w, IdealHandle};
use crate::linalg::dense;
use crate::order::MonomialOrder;
use crate::ring::{Convention, FieldSpec, PolyRing, Polynomial, Scalar, Substitution, Weight};

/// Default range `[−10⁴, 10⁴]` for random rational entries.
pub const DEFAULT_ENTRY_BOUND: u64 = 10_000;

const MAX_RESAMPLES: u32 = 64;

// Stream namespaces, so that each kind of draw gets its own RNG stream.
const STREAM_CHANGE: u64 = 1 << 32;
const STREAM_GCS: u64 = 2 << 32;
const STREAM_STAB_G: u64 = 3 << 32;
const STREAM_STAB_B: u64 = 4 << 32;
const STREAM_UPPER: u64 = 5 << 32;
const STREAM_BOREL: u64 = 6 << 32;

/// A weight sorted non-increasingly and shifted to be non-negative, with
/// the variable relabelling that sorts it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedWeight {
    pub weight: Weight,
    /// Variable `k` after relabelling is variable `perm[k]` before.
    pub perm: Vec<usize>,
    pub shift: i64,
}

impl NormalizedWeight {
    pub fn is_identity_perm(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }
}

/// Sorts `w` non-increasingly (stable in the variable index) and adds the
/// smallest multiple of `(1,…,1)` making it non-negative. Initial forms of
/// homogeneous polynomials do not see the shift.
pub fn normalize_weight(w: &Weight, n: usize) -> Result<NormalizedWeight> {
    if w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.len() });
    }
    let e = w.entries();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&a, &b| e[b].cmp(&e[a]));
    let shift = e.iter().min().map_or(0, |&m| (-m).max(0));
    let weight = Weight::new(perm.iter().map(|&i| e[i] + shift).collect());
    Ok(NormalizedWeight { weight, perm, shift })
}

/// Seed and entry range for random matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub seed: u64,
    pub entry_bound: u64,
}

impl RandomSpec {
    pub fn new(seed: u64) -> Self {
        RandomSpec { seed, entry_bound: DEFAULT_ENTRY_BOUND }
    }

    pub fn with_entry_bound(self, entry_bound: u64) -> Self {
        RandomSpec { entry_bound: entry_bound.max(1), ..self }
    }

    /// An RNG for one numbered stream of this seed.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// A uniform field element: from `[−bound, bound]` over ℚ, from the whole
/// field otherwise.
fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec, bound: u64) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let b = bound.min(i64::MAX as u64) as i64;
            Scalar::from_integer(rng.gen_range(-b..=b).into())
        }
        FieldSpec::Prime(p) => field.from_int(rng.gen_range(0..p)),
    }
}

fn random_square(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec, bound: u64) -> Vec<Vec<Scalar>> {
    (0..n).map(|_| (0..n).map(|_| random_scalar(rng, field, bound)).collect()).collect()
}

fn random_invertible(
    ring: &alloc::sync::Arc<PolyRing>,
    rng: &mut ChaCha8Rng,
    bound: u64,
    convention: Convention,
) -> Result<Substitution> {
    let n = ring.num_vars();
    for _ in 0..MAX_RESAMPLES {
        let m = random_square(rng, n, ring.field(), bound);
        if !dense::determinant(&m, ring.field()).is_zero() {
            return Substitution::new(ring, m, convention);
        }
    }
    Err(Error::ResampleExhausted { attempts: MAX_RESAMPLES })
}

/// A random invertible change of variables (row convention), resampled
/// until the determinant is nonzero.
pub fn random_change(spec: &RandomSpec, ring: &alloc::sync::Arc<PolyRing>) -> Result<Substitution> {
    random_change_in_stream(spec, ring, 0)
}

/// [`random_change`] drawn from a numbered stream.
pub fn random_change_in_stream(
    spec: &RandomSpec,
    ring: &alloc::sync::Arc<PolyRing>,
    stream: u64,
) -> Result<Substitution> {
    let mut rng = spec.rng(STREAM_CHANGE | stream);
    random_invertible(ring, &mut rng, spec.entry_bound, Convention::Row)
}

/// A random upper-triangular unit-diagonal matrix acting by the column
/// convention, with every strictly upper entry free.
pub fn random_upper_triangular(
    spec: &RandomSpec,
    ring: &alloc::sync::Arc<PolyRing>,
    stream: u64,
) -> Result<Substitution> {
    let n = ring.num_vars();
    let field = ring.field();
    let mut rng = spec.rng(STREAM_UPPER | stream);
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    core::cmp::Ordering::Less => random_scalar(&mut rng, field, spec.entry_bound),
                    core::cmp::Ordering::Equal => field.one(),
                    core::cmp::Ordering::Greater => field.zero(),
                })
                .collect()
        })
        .collect();
    Substitution::new(ring, m, Convention::Column)
}

/// A certified truncated generic circuits set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcsCertificate {
    pub circuits: CircuitsSet,
    /// Rounds used, counting the successful one.
    pub rounds: u32,
    /// Entry bound of the successful round.
    pub entry_bound: u64,
    /// Set over prime fields, where agreement is evidence only.
    pub heuristic: bool,
    pub witnesses: [Vec<Vec<Scalar>>; 2],
}

/// `gcs(I_{≤d})`: `cs((gI)_{≤d})` for a random `g`, accepted once two
/// independent draws agree. After `retries` failed rounds the result is
/// [`Error::Uncertified`].
pub fn gcs_truncated(ideal: &IdealHandle, d: u32, spec: &RandomSpec, retries: u32) -> Result<GcsCertificate> {
    let ring = ideal.ring();
    let mut bound = spec.entry_bound.max(1);
    for round in 0..retries.max(1) {
        let mut draws = Vec::with_capacity(2);
        for k in 0..2u64 {
            let mut rng = spec.rng(STREAM_GCS | (2 * round as u64 + k));
            let g = random_invertible(ring, &mut rng, bound, Convention::Row)?;
            let cs = circuits_truncated(&ideal.transform(&g)?, d)?;
            draws.push((g, cs));
        }
        let (g2, cs2) = draws.pop().unwrap();
        let (g1, cs1) = draws.pop().unwrap();
        if cs1 == cs2 {
            return Ok(GcsCertificate {
                circuits: cs1,
                rounds: round + 1,
                entry_bound: bound,
                heuristic: ring.field().is_prime_field(),
                witnesses: [g1.matrix().to_vec(), g2.matrix().to_vec()],
            });
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::Uncertified { rounds: retries.max(1) })
}

/// An element of `B_ω`: upper triangular, unit diagonal, and `m_ij = 0`
/// whenever `ω_i = ω_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelOmegaElement {
    weight: Weight,
    field: FieldSpec,
    matrix: Vec<Vec<Scalar>>,
}

fn check_sorted(w: &Weight) -> Result<()> {
    if w.is_non_increasing() {
        Ok(())
    } else {
        Err(Error::InvalidWeight(format!("{w} is not sorted non-increasingly")))
    }
}

impl BorelOmegaElement {
    pub fn identity(w: &Weight, field: FieldSpec) -> Result<Self> {
        check_sorted(w)?;
        let n = w.len();
        let matrix =
            (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
        Ok(BorelOmegaElement { weight: w.clone(), field, matrix })
    }

    /// Validates membership in `B_ω`.
    pub fn from_matrix(w: &Weight, field: FieldSpec, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        check_sorted(w)?;
        let n = w.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.len() });
        }
        let matrix = matrix
            .iter()
            .map(|r| r.iter().map(|c| field.from_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if !is_borel_omega(&matrix, w) {
            return Err(Error::InvalidWeight(format!("matrix is not in the subgroup for {w}")));
        }
        Ok(BorelOmegaElement { weight: w.clone(), field, matrix })
    }

    /// Random entries at the free positions, drawn from `stream`.
    pub fn sample(w: &Weight, field: FieldSpec, spec: &RandomSpec, stream: u64) -> Result<Self> {
        let mut b = Self::identity(w, field)?;
        let mut rng = spec.rng(STREAM_BOREL | stream);
        let e = w.entries();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] != e[j] {
                    b.matrix[i][j] = random_scalar(&mut rng, field, spec.entry_bound);
                }
            }
        }
        Ok(b)
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    /// Whether only the identity satisfies the constraints.
    pub fn is_trivial_group(w: &Weight) -> bool {
        w.entries().windows(2).all(|p| p[0] == p[1])
    }

    pub fn product(&self, other: &BorelOmegaElement) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::InvalidWeight(format!("{} vs {}", self.weight, other.weight)));
        }
        let matrix = dense::mat_mul(&self.matrix, &other.matrix, self.field);
        Ok(BorelOmegaElement { weight: self.weight.clone(), field: self.field, matrix })
    }

    pub fn inverse(&self) -> Self {
        let matrix = dense::inverse(&self.matrix, self.field).expect("unit diagonal");
        BorelOmegaElement { weight: self.weight.clone(), field: self.field, matrix }
    }

    pub fn is_member(&self) -> bool {
        is_borel_omega(&self.matrix, &self.weight)
    }

    /// The change of variables `X_j ↦ Σ_{i≤j} m_ij X_i`.
    pub fn substitution(&self, ring: &alloc::sync::Arc<PolyRing>) -> Result<Substitution> {
        Substitution::new(ring, self.matrix.clone(), Convention::Column)
    }
}

/// Membership test for `B_ω`.
pub fn is_borel_omega(m: &[Vec<Scalar>], w: &Weight) -> bool {
    let e = w.entries();
    let n = e.len();
    m.len() == n
        && m.iter().enumerate().all(|(i, row)| {
            row.len() == n
                && row.iter().enumerate().all(|(j, c)| match i.cmp(&j) {
                    core::cmp::Ordering::Equal => c.is_one(),
                    core::cmp::Ordering::Greater => c.is_zero(),
                    core::cmp::Ordering::Less => e[i] != e[j] || c.is_zero(),
                })
        })
}

/// Evidence for one failed `(g, b)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabWitness {
    pub g: Vec<Vec<Scalar>>,
    pub b: Vec<Vec<Scalar>>,
    /// Reduced basis of `J = in_ω(gI)`.
    pub initial: Vec<Polynomial>,
    /// Reduced basis of `bJ`.
    pub moved: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabTrial {
    pub g_index: u32,
    pub b_index: u32,
    pub passed: bool,
    pub witness: Option<StabWitness>,
}

/// Outcome of checking `b · in_ω(gI) = in_ω(gI)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabReport {
    pub normalized: NormalizedWeight,
    pub trials: Vec<StabTrial>,
    pub note: Option<String>,
}

impl StabReport {
    pub fn passed(&self) -> bool {
        self.trials.iter().all(|t| t.passed)
    }

    pub fn failures(&self) -> usize {
        self.trials.iter().filter(|t| !t.passed).count()
    }
}

fn check_pair(
    j: &IdealHandle,
    b: &BorelOmegaElement,
    g: &Substitution,
    g_index: u32,
    b_index: u32,
) -> Result<StabTrial> {
    let moved = j.transform(&b.substitution(j.ring())?)?;
    let passed = ideal_equal(&moved, j)?;
    let witness = (!passed).then(|| StabWitness {
        g: g.matrix().to_vec(),
        b: b.matrix().to_vec(),
        initial: j.canonical_basis().elements().to_vec(),
        moved: moved.canonical_basis().elements().to_vec(),
    });
    Ok(StabTrial { g_index, b_index, passed, witness })
}

/// For `g_trials` random `g` and `b_trials` random `b ∈ B_ω`, checks that
/// `b` fixes `J = in_ω(gI)` (ties by degrevlex). The weight is normalized
/// first and the variables relabelled to match. A pass is evidence, not a
/// proof: the open set of good `g` is not effectively known.
pub fn stab_check(
    ideal: &IdealHandle,
    w: &Weight,
    spec: &RandomSpec,
    g_trials: u32,
    b_trials: u32,
) -> Result<StabReport> {
    let ring = ideal.ring();
    let normalized = normalize_weight(w, ring.num_vars())?;
    let sorted = ideal.permute_variables(&normalized.perm);
    let field = ring.field();
    let mut trials = Vec::new();
    for t in 0..g_trials {
        let mut rng = spec.rng(STREAM_STAB_G | t as u64);
        let g = random_invertible(ring, &mut rng, spec.entry_bound, Convention::Row)?;
        let j = initial_ideal_w(&sorted.transform(&g)?, &normalized.weight, &MonomialOrder::DegRevLex)?;
        for k in 0..b_trials {
            let stream = STREAM_STAB_B | ((t as u64) << 16) | k as u64;
            let b = BorelOmegaElement::sample(&normalized.weight, field, spec, stream)?;
            trials.push(check_pair(&j, &b, &g, t, k)?);
        }
    }
    let note = BorelOmegaElement::is_trivial_group(&normalized.weight).then(|| String::from("B_ω trivial"));
    Ok(StabReport { normalized, trials, note })
}

/// [`stab_check`] with a fixed `g` and fixed elements of `B_ω`. The weight
/// must already be sorted and non-negative.
pub fn stab_check_fixed(
    ideal: &IdealHandle,
    w: &Weight,
    g: &Substitution,
    bs: &[BorelOmegaElement],
) -> Result<StabReport> {
    let normalized = normalize_weight(w, ideal.ring().num_vars())?;
    if normalized.weight != *w {
        return Err(Error::InvalidWeight(format!("{w} is not normalized")));
    }
    let j = initial_ideal_w(&ideal.transform(g)?, w, &MonomialOrder::DegRevLex)?;
    let trials = bs.iter().enumerate().map(|(k, b)| check_pair(&j, b, g, 0, k as u32)).collect::<Result<Vec<_>>>()?;
    let note = BorelOmegaElement::is_trivial_group(w).then(|| String::from("B_ω trivial"));
    Ok(StabReport { normalized, trials, note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::Circuit;
    use crate::ring::Monomial;
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::from_names(names, FieldSpec::Rationals).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()).unwrap()
    }

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn weight_normalization() {
        let n = normalize_weight(&Weight::new(vec![0, 1]), 2).unwrap();
        assert_eq!((n.weight.entries(), n.perm.as_slice(), n.shift), (&[1, 0][..], &[1, 0][..], 0));
        let n = normalize_weight(&Weight::new(vec![1, -1]), 2).unwrap();
        assert_eq!((n.weight.entries(), n.shift), (&[2, 0][..], 1));
        let n = normalize_weight(&Weight::new(vec![3, 2, 2]), 3).unwrap();
        assert_eq!(n.weight.entries(), &[3, 2, 2]);
        assert!(n.is_identity_perm());
    }

    #[test]
    fn random_changes_are_reproducible() {
        let r = ring(&["x", "y", "z"]);
        let spec = RandomSpec::new(7);
        let a = random_change(&spec, &r).unwrap();
        assert_eq!(a, random_change(&spec, &r).unwrap());
        assert!(!dense::determinant(a.matrix(), r.field()).is_zero());
        assert_ne!(a, random_change(&RandomSpec::new(8), &r).unwrap());
        let one = ring(&["x"]);
        assert!(!random_change(&spec, &one).unwrap().matrix()[0][0].is_zero());
    }

    #[test]
    fn gcs_of_a_line() {
        let r = ring(&["x", "y"]);
        let cert = gcs_truncated(&ideal(&r, &["x"]), 2, &RandomSpec::new(1), 3).unwrap();
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        let c = |ms: &[&[u32]]| Circuit::new(ms.iter().map(|e| m(e)).collect()).unwrap();
        let mut expected = CircuitsSet::new(Some(2));
        expected.extend([
            c(&[&[1, 0], &[0, 1]]),
            c(&[&[2, 0], &[1, 1]]),
            c(&[&[2, 0], &[0, 2]]),
            c(&[&[1, 1], &[0, 2]]),
        ]);
        assert_eq!(cert.circuits, expected);
        assert!(!cert.heuristic);

        let all = gcs_truncated(&ideal(&r, &["x", "y"]), 1, &RandomSpec::new(1), 3).unwrap();
        assert_eq!(all.circuits.len(), 2);
    }

    #[test]
    fn borel_omega_shapes() {
        let f = FieldSpec::Rationals;
        let spec = RandomSpec::new(3);
        let b = BorelOmegaElement::sample(&Weight::new(vec![1, 1]), f, &spec, 0).unwrap();
        assert_eq!(b, BorelOmegaElement::identity(&Weight::new(vec![1, 1]), f).unwrap());
        let b = BorelOmegaElement::sample(&Weight::new(vec![2, 1]), f, &spec, 0).unwrap();
        assert!(!b.matrix()[0][1].is_zero());
        let b = BorelOmegaElement::sample(&Weight::new(vec![1, 1, 0]), f, &spec, 0).unwrap();
        assert!(b.matrix()[0][1].is_zero());
        assert!(!b.matrix()[0][2].is_zero() && !b.matrix()[1][2].is_zero());
        assert!(BorelOmegaElement::sample(&Weight::new(vec![0, 1]), f, &spec, 0).is_err());

        let c = BorelOmegaElement::sample(&Weight::new(vec![1, 1, 0]), f, &spec, 1).unwrap();
        assert!(b.product(&c).unwrap().is_member());
        let inv = b.inverse();
        assert!(inv.is_member());
        assert_eq!(b.product(&inv).unwrap(), BorelOmegaElement::identity(b.weight(), f).unwrap());
    }

    #[test]
    fn stab_examples() {
        let r = ring(&["x", "y"]);
        let w = Weight::new(vec![1, 0]);
        let b = BorelOmegaElement::from_matrix(&w, r.field(), vec![vec![q(1), q(5)], vec![q(0), q(1)]]).unwrap();
        let id = Substitution::identity(&r);

        let pass = stab_check_fixed(&ideal(&r, &["x + y"]), &w, &id, core::slice::from_ref(&b)).unwrap();
        assert!(pass.passed());
        let fail = stab_check_fixed(&ideal(&r, &["y"]), &w, &id, &[b]).unwrap();
        assert!(!fail.passed());
        let witness = fail.trials[0].witness.as_ref().unwrap();
        assert_eq!(witness.moved, vec![Polynomial::parse(&r, "x + 1/5*y").unwrap()]);

        let report = stab_check(&ideal(&r, &["x^2 + x*y"]), &Weight::new(vec![1, 1]), &RandomSpec::new(1), 1, 2)
            .unwrap();
        assert!(report.passed());
        assert_eq!(report.note.as_deref(), Some("B_ω trivial"));
        let report = stab_check(&ideal(&r, &["x*y + y^2"]), &w, &RandomSpec::new(1), 2, 3).unwrap();
        assert!(report.passed());
    }
}
