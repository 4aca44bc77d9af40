use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A monomial `X^a`, stored as its exponent vector with the total degree
/// cached.
///
/// `Ord` is the canonical storage order: total degree first, then the
/// exponent vectors compared lexicographically. It is used for deterministic
/// iteration and hashing only; monomial orders in the algebraic sense live in
/// [`crate::order`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n], degree: 0 }
    }

    /// The variable `X_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector as signed integers.
    pub fn to_i64(&self) -> Vec<i64> {
        self.exps.iter().map(|&e| e as i64).collect()
    }

    /// `self - other` as an integer vector.
    pub fn exponent_difference(&self, other: &Monomial) -> Vec<i64> {
        self.exps.iter().zip(&other.exps).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    /// Appends a variable with the given exponent.
    pub fn extended(&self, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(e);
        Monomial { exps, degree: self.degree + e }
    }

    /// Removes the last variable, returning its exponent.
    pub fn split_last(&self) -> (Monomial, u32) {
        let mut exps = self.exps.clone();
        let e = exps.pop().unwrap_or(0);
        (Monomial { exps, degree: self.degree - e }, e)
    }

    /// Reindexes variables: position `k` of the result holds exponent
    /// `self[perm[k]]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial { exps: perm.iter().map(|&i| self.exps[i]).collect(), degree: self.degree }
    }

    /// All monomials of degree `d` in `n` variables, lex-descending
    /// (`X_1^d` first).
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fill(&mut out, &mut cur, 0, d);
        out
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    let n = cur.len();
    if n == 0 {
        if left == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left;
        out.push(Monomial::new(cur.clone()));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::new(vec![2, 0, 3]);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.mul(&Monomial::var(3, 1)).degree(), 6);
    }

    #[test]
    fn enumerates_degree_pieces() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].exponents(), &[2, 0, 0]);
        assert_eq!(ms[5].exponents(), &[0, 0, 2]);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
    }

    #[test]
    fn division() {
        let a = Monomial::new(vec![1, 1]);
        let b = Monomial::new(vec![2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![1, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert!(Monomial::new(vec![2, 0]).is_coprime(&Monomial::new(vec![0, 3])));
    }
}
