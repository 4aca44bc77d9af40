//! Dense exact elimination.
//!
//! Rational ranks use fraction-free (Bareiss) elimination over the integers
//! after clearing row denominators. A rank computed modulo a large prime is a
//! lower bound for the rational rank, so a full rank found there is accepted
//! directly and only deficient cases fall back to Bareiss.

use alloc::vec::Vec;
use core::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::ring::{FieldSpec, Scalar};

/// Gauss–Jordan elimination in place. Zero rows are dropped, pivots are
/// scaled to one, and the pivot columns are returned in increasing order.
pub fn rref(rows: &mut Vec<Vec<Scalar>>, field: FieldSpec) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for v in &mut rows[r][c..] {
            *v = field.mul(v, &inv);
        }
        let pivot_row = mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = field.sub(&row[j], &field.mul(&factor, &pivot_row[j]));
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn determinant(m: &[Vec<Scalar>], field: FieldSpec) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]).expect("nonzero pivot");
        let (upper, lower) = a.split_at_mut(c + 1);
        let pivot = &upper[c];
        for row in lower.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = field.mul(&row[c], &inv);
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                let t = field.mul(&factor, p);
                *x = field.sub(x, &t);
            }
        }
    }
    det
}

pub fn inverse(m: &[Vec<Scalar>], field: FieldSpec) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, field);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], field: FieldSpec) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(field.zero(), |acc, k| field.add(&acc, &field.mul(&row[k], &b[k][j])))
                })
                .collect()
        })
        .collect()
}

/// Rank of a matrix of field elements.
pub fn rank(rows: &[Vec<Scalar>], field: FieldSpec) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let all: Vec<usize> = (0..rows[0].len()).collect();
    RankOracle::new(rows, field).rank_on_columns(&all)
}

/// Fraction-free rank over the integers.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = mem::take(&mut m[r]);
        for row in m.iter_mut().skip(r + 1) {
            let lead = mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                row[j] = v.div_floor(&prev);
            }
        }
        prev = pivot_row[c].clone();
        m[r] = pivot_row;
        r += 1;
    }
    r
}

const CHECK_PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = invmod(m[r][c], p);
        let pivot_row = mem::take(&mut m[r]);
        for row in m.iter_mut().skip(r + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = mulmod(row[c], inv, p);
            for j in c..cols {
                let t = mulmod(f, pivot_row[j], p);
                row[j] = (row[j] + p - t) % p;
            }
        }
        m[r] = pivot_row;
        r += 1;
    }
    r
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

enum Form {
    Integer { exact: Vec<Vec<BigInt>>, check: Vec<Vec<u64>> },
    Prime { rows: Vec<Vec<u64>>, p: u64 },
}

/// Answers repeated rank queries on column subsets of one matrix.
pub struct RankOracle {
    form: Form,
    ncols: usize,
}

impl RankOracle {
    pub fn new(rows: &[Vec<Scalar>], field: FieldSpec) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let form = match field {
            FieldSpec::Rationals => {
                let exact: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|row| {
                        let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                        row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
                    })
                    .collect();
                let check = exact
                    .iter()
                    .map(|row| row.iter().map(|v| reduce_mod(v, CHECK_PRIME)).collect())
                    .collect();
                Form::Integer { exact, check }
            }
            FieldSpec::Prime(p) => Form::Prime {
                rows: rows
                    .iter()
                    .map(|row| row.iter().map(|q| q.numer().to_u64().unwrap() % p).collect())
                    .collect(),
                p,
            },
        };
        RankOracle { form, ncols }
    }

    pub fn num_cols(&self) -> usize {
        self.ncols
    }

    pub fn num_rows(&self) -> usize {
        match &self.form {
            Form::Integer { exact, .. } => exact.len(),
            Form::Prime { rows, .. } => rows.len(),
        }
    }

    /// Rank of the submatrix on the given columns.
    pub fn rank_on_columns(&self, cols: &[usize]) -> usize {
        let full = self.num_rows().min(cols.len());
        if full == 0 {
            return 0;
        }
        match &self.form {
            Form::Prime { rows, p } => {
                rank_mod_p(rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect(), *p)
            }
            Form::Integer { exact, check } => {
                let quick = rank_mod_p(
                    check.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect(),
                    CHECK_PRIME,
                );
                if quick == full {
                    return quick;
                }
                let sub: Vec<Vec<BigInt>> = exact
                    .iter()
                    .filter(|r| cols.iter().any(|&c| !r[c].is_zero()))
                    .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                    .collect();
                bareiss_rank(sub)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn rref_of_small_matrix() {
        let mut m = qm(&[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]);
        let piv = rref(&mut m, FieldSpec::Rationals);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m, qm(&[&[1, 0, -1], &[0, 1, 1]]));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = qm(&[&[1, 2], &[3, 4]]);
        assert_eq!(determinant(&m, FieldSpec::Rationals), q(-2));
        let inv = inverse(&m, FieldSpec::Rationals).unwrap();
        let id = mat_mul(&m, &inv, FieldSpec::Rationals);
        assert_eq!(id, qm(&[&[1, 0], &[0, 1]]));
        assert!(inverse(&qm(&[&[1, 2], &[2, 4]]), FieldSpec::Rationals).is_none());
    }

    #[test]
    fn bareiss_matches_rref() {
        let rows: &[&[i64]] = &[&[2, 4, 6, 8], &[1, 3, 5, 7], &[3, 7, 11, 15], &[0, 0, 0, 1]];
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let mut m = qm(rows);
        assert_eq!(bareiss_rank(ints), rref(&mut m, FieldSpec::Rationals).len());
        assert_eq!(rank(&qm(rows), FieldSpec::Rationals), 3);
    }

    #[test]
    fn column_subset_ranks() {
        let m = qm(&[&[1, 1, 0], &[0, 0, 1]]);
        let o = RankOracle::new(&m, FieldSpec::Rationals);
        assert_eq!(o.rank_on_columns(&[0, 1]), 1);
        assert_eq!(o.rank_on_columns(&[1, 2]), 2);
        let f = FieldSpec::prime(3).unwrap();
        let m3 = vec![vec![f.from_int(1), f.from_int(2)], vec![f.from_int(2), f.from_int(1)]];
        assert_eq!(RankOracle::new(&m3, f).rank_on_columns(&[0, 1]), 1);
    }
}
