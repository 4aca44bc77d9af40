use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::polynomial::same_ring;
use super::{PolyRing, Polynomial, Scalar, Weight};
use crate::error::{Error, Result};
use crate::linalg::dense;

/// How a matrix `M` acts on the variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `X_i ↦ Σ_j m_ij X_j`, the convention of the generic change `γ`.
    Row,
    /// `X_j ↦ Σ_i m_ij X_i`, the convention under which upper-triangular
    /// matrices only add variables of larger weight.
    Column,
}

/// An invertible linear change of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    ring: Arc<PolyRing>,
    matrix: Vec<Vec<Scalar>>,
    convention: Convention,
}

impl Substitution {
    /// Rejects non-square or singular matrices. Entries are mapped into the
    /// ring's field.
    pub fn new(ring: &Arc<PolyRing>, matrix: Vec<Vec<Scalar>>, convention: Convention) -> Result<Self> {
        let n = ring.num_vars();
        if matrix.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.len() });
        }
        let field = ring.field();
        let mut mapped = Vec::with_capacity(n);
        for row in matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            mapped.push(row.iter().map(|c| field.from_rational(c)).collect::<Result<Vec<_>>>()?);
        }
        if dense::determinant(&mapped, field).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Substitution { ring: ring.clone(), matrix: mapped, convention })
    }

    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        let n = ring.num_vars();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        Substitution { ring: ring.clone(), matrix, convention: Convention::Row }
    }

    /// `D_a`: `X_i ↦ a^{-ω_i} X_i`.
    pub fn diagonal_scaling(ring: &Arc<PolyRing>, w: &Weight, a: &Scalar) -> Result<Self> {
        let n = ring.num_vars();
        if w.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: w.len() });
        }
        let field = ring.field();
        let a = field.from_rational(a)?;
        let mut matrix = alloc::vec![alloc::vec![Scalar::zero(); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = field.pow(&a, -w.entries()[i])?;
        }
        Self::new(ring, matrix, Convention::Row)
    }

    /// Relabelling with `X_{perm[k]} ↦ X_k`.
    pub fn permutation(ring: &Arc<PolyRing>, perm: &[usize]) -> Result<Self> {
        let n = ring.num_vars();
        let mut matrix = alloc::vec![alloc::vec![Scalar::zero(); n]; n];
        for (k, &i) in perm.iter().enumerate() {
            if i >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i + 1 });
            }
            matrix[i][k] = Scalar::one();
        }
        Self::new(ring, matrix, Convention::Row)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn inverse(&self) -> Substitution {
        let inv = dense::inverse(&self.matrix, self.ring.field()).expect("substitution matrix is invertible");
        Substitution { ring: self.ring.clone(), matrix: inv, convention: self.convention }
    }

    /// The image of `X_i` as a linear form.
    pub fn image_of_variable(&self, i: usize) -> Polynomial {
        let n = self.ring.num_vars();
        let mut out = Polynomial::zero(&self.ring);
        for j in 0..n {
            let c = match self.convention {
                Convention::Row => &self.matrix[i][j],
                Convention::Column => &self.matrix[j][i],
            };
            out.add_term(crate::ring::Monomial::var(n, j), c.clone());
        }
        out
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch);
        }
        let n = self.ring.num_vars();
        let images: Vec<Polynomial> = (0..n).map(|i| self.image_of_variable(i)).collect();
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in f.terms() {
            let mut acc = Polynomial::constant(&self.ring, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| images[i].pow(e));
                acc = &acc * pw;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    pub fn apply_all(&self, fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
        fs.iter().map(|f| self.apply(f)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;
    use alloc::vec;
    use num_rational::BigRational;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn row_action_binomial() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let s = Substitution::new(&r, vec![vec![q(1), q(1)], vec![q(0), q(1)]], Convention::Row).unwrap();
        let f = Polynomial::parse(&r, "x^2").unwrap();
        assert_eq!(s.apply(&f).unwrap(), Polynomial::parse(&r, "x^2 + 2*x*y + y^2").unwrap());
    }

    #[test]
    fn row_action_linear() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let s = Substitution::new(&r, vec![vec![q(1), q(2)], vec![q(3), q(4)]], Convention::Row).unwrap();
        let f = Polynomial::parse(&r, "x + y").unwrap();
        assert_eq!(s.apply(&f).unwrap(), Polynomial::parse(&r, "4*x + 6*y").unwrap());
    }

    #[test]
    fn column_action_transposes() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let s = Substitution::new(&r, vec![vec![q(1), q(5)], vec![q(0), q(1)]], Convention::Column).unwrap();
        assert_eq!(s.apply(&Polynomial::parse(&r, "y").unwrap()).unwrap(), Polynomial::parse(&r, "y + 5*x").unwrap());
        assert_eq!(s.apply(&Polynomial::parse(&r, "x").unwrap()).unwrap(), Polynomial::parse(&r, "x").unwrap());
    }

    #[test]
    fn diagonal_change() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let d = Substitution::diagonal_scaling(&r, &Weight::new(vec![1, 0]), &q(2)).unwrap();
        let out = d.apply(&Polynomial::parse(&r, "x*y").unwrap()).unwrap();
        assert_eq!(out.coefficient(&crate::ring::Monomial::new(vec![1, 1])), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn singular_rejected() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let e = Substitution::new(&r, vec![vec![q(1), q(2)], vec![q(2), q(4)]], Convention::Row);
        assert_eq!(e, Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_round_trip() {
        let r = PolyRing::from_names(&["x", "y", "z"], FieldSpec::Rationals).unwrap();
        let m = vec![vec![q(2), q(1), q(0)], vec![q(0), q(1), q(3)], vec![q(1), q(0), q(1)]];
        let f = Polynomial::parse(&r, "x^2*y - 3/2*z^3 + x*y*z").unwrap();
        for conv in [Convention::Row, Convention::Column] {
            let s = Substitution::new(&r, m.clone(), conv).unwrap();
            assert_eq!(s.inverse().apply(&s.apply(&f).unwrap()).unwrap(), f);
        }
    }
}
