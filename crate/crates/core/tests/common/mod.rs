//! Shared fixtures for the integration tests: a seeded suite of random
//! homogeneous ideals and a small exact-rank oracle that does not go through
//! the library's linear algebra.
#![allow(dead_code)]

use std::sync::Arc;

use gencircuits::ring::{FieldSpec, Monomial, PolyRing, Polynomial, Scalar, Weight};
use gencircuits::IdealHandle;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITE_SEED: u64 = 0x5eed_c1c7;

pub fn ring(n: usize) -> Arc<PolyRing> {
    let names = ["x", "y", "z", "w"];
    PolyRing::from_names(&names[..n], FieldSpec::Rationals).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All degree-`d` monomials in `n` variables, by plain recursion.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// A random homogeneous polynomial of degree `d` with `terms` distinct
/// monomials and coefficients in `[−3, 3] ∖ {0}`.
pub fn random_form(rng: &mut ChaCha8Rng, r: &Arc<PolyRing>, d: u32, terms: usize) -> Polynomial {
    let mut ms = monomials(r.num_vars(), d);
    ms.shuffle(rng);
    ms.truncate(terms.max(1));
    let coeffs: Vec<(Monomial, Scalar)> = ms
        .into_iter()
        .map(|m| {
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-3..=3);
            }
            (m, Scalar::from_integer(c.into()))
        })
        .collect();
    Polynomial::from_terms(r, coeffs).unwrap()
}

/// The 20 suite ideals: 2 or 3 variables, two homogeneous generators of
/// degree 1 to 3 with one to three terms each.
pub fn suite() -> Vec<IdealHandle> {
    let mut rng = rng(SUITE_SEED);
    (0..20)
        .map(|_| {
            let n = rng.gen_range(2..=3);
            let r = ring(n);
            let gens = (0..2)
                .map(|_| {
                    let d = rng.gen_range(1..=3);
                    let t = rng.gen_range(1..=3);
                    random_form(&mut rng, &r, d, t)
                })
                .collect();
            IdealHandle::new(&r, gens).unwrap()
        })
        .collect()
}

pub fn random_weight(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Weight {
    Weight::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rank over ℚ by textbook Gaussian elimination.
pub fn oracle_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            let (upper, lower) = m.split_at_mut(i);
            for (x, p) in lower[0][c..].iter_mut().zip(&upper[rank][c..]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Coordinate rows of `polys` on the given column monomials.
pub fn coordinate_rows(polys: &[Polynomial], cols: &[Monomial]) -> Vec<Vec<BigRational>> {
    polys.iter().map(|f| cols.iter().map(|m| f.coefficient(m)).collect()).collect()
}

/// Spanning set of `I_d`: every generator times every monomial of the
/// complementary degree.
pub fn spanning_set(ideal: &IdealHandle, d: u32) -> Vec<Polynomial> {
    let n = ideal.ring().num_vars();
    let mut out = Vec::new();
    for g in ideal.generators() {
        let e = g.degree().unwrap();
        if e <= d {
            for m in monomials(n, d - e) {
                out.push(g.mul_term(&m, &BigRational::one()));
            }
        }
    }
    out
}

/// Reduced row echelon form over ℚ with zero rows dropped.
pub fn oracle_rref(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// A subspace of `A_d` held as its reduced echelon rows, for oracle
/// computations.
pub struct OracleSpace {
    pub cols: Vec<Monomial>,
    pub rows: Vec<Vec<BigRational>>,
    pub dim: usize,
}

impl OracleSpace {
    pub fn new(n: usize, d: u32, polys: &[Polynomial]) -> Self {
        let cols = monomials(n, d);
        let rows = oracle_rref(&coordinate_rows(polys, &cols));
        let dim = rows.len();
        OracleSpace { cols, rows, dim }
    }

    /// `dim(W ∩ ⟨S⟩)`: `W` meets `⟨S⟩` in the kernel of the projection onto
    /// the columns outside `S`.
    pub fn intersection_dim(&self, subset: &[usize]) -> usize {
        let outside: Vec<usize> = (0..self.cols.len()).filter(|c| !subset.contains(c)).collect();
        self.dim - oracle_rank(&self.project(&outside))
    }

    fn project(&self, cols: &[usize]) -> Vec<Vec<BigRational>> {
        self.rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect()
    }

    pub fn index_of(&self, m: &Monomial) -> usize {
        self.cols.iter().position(|c| c == m).expect("monomial of the right degree")
    }

    /// Circuit test straight from the definition: the support carries a
    /// nonzero element and no one-smaller subset does.
    pub fn is_circuit(&self, subset: &[usize]) -> bool {
        if subset.is_empty() || self.intersection_dim(subset) == 0 {
            return false;
        }
        (0..subset.len()).all(|skip| {
            let smaller: Vec<usize> = subset.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &c)| c).collect();
            smaller.is_empty() || self.intersection_dim(&smaller) == 0
        })
    }

    /// Every circuit, by checking every subset of the columns.
    pub fn all_circuits_brute_force(&self) -> Vec<Vec<Monomial>> {
        let k = self.cols.len();
        assert!(k <= 16, "brute force limited to small spaces");
        let dependent: Vec<bool> = (0u32..1 << k)
            .map(|mask| {
                let subset: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
                !subset.is_empty() && self.intersection_dim(&subset) > 0
            })
            .collect();
        let mut out = Vec::new();
        for mask in 1u32..1 << k {
            if !dependent[mask as usize] {
                continue;
            }
            let minimal = (0..k).filter(|i| mask & (1 << i) != 0).all(|i| !dependent[(mask & !(1 << i)) as usize]);
            if minimal {
                let mut ms: Vec<Monomial> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| self.cols[i].clone()).collect();
                ms.sort();
                out.push(ms);
            }
        }
        out.sort();
        out
    }
}
