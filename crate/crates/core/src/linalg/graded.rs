use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use super::dense::{self, RankOracle};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::order::MonomialOrder;
use crate::ring::{same_ring, Monomial, PolyRing, Polynomial, Scalar, Substitution, Weight};

/// Which relative rank to take against a set of monomials `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// `rk_S W = dim (W + ⟨S⟩) / W`.
    Sub,
    /// `rk^S W = dim (W + ⟨S⟩) / ⟨S⟩`.
    Sup,
}

/// A subspace `W` of the degree-`d` piece `A_d`, held as the reduced row
/// echelon form of its coordinate matrix `M_W`. Columns are the degree-`d`
/// monomials, degrevlex-descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: Arc<PolyRing>,
    degree: u32,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    rows: Vec<Vec<Scalar>>,
}

fn canonical_columns(n: usize, d: u32) -> Vec<Monomial> {
    let mut basis = Monomial::all_of_degree(n, d);
    MonomialOrder::DegRevLex.sort_descending(&mut basis);
    basis
}

impl GradedMatrix {
    /// The span of `polys`, all of which must be zero or homogeneous of
    /// degree `degree`.
    pub fn from_polynomials(ring: &Arc<PolyRing>, degree: u32, polys: &[Polynomial]) -> Result<Self> {
        let basis = canonical_columns(ring.num_vars(), degree);
        let index: BTreeMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::with_capacity(polys.len());
        for f in polys {
            if !same_ring(ring, f.ring()) {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() {
                continue;
            }
            let mut row = alloc::vec![Scalar::zero(); basis.len()];
            for (m, c) in f.terms() {
                if m.degree() != degree {
                    return Err(Error::WrongDegree { expected: degree, found: m.degree() });
                }
                row[index[m]] = c.clone();
            }
            rows.push(row);
        }
        Ok(Self::from_rows(ring.clone(), degree, basis, index, rows))
    }

    fn from_rows(
        ring: Arc<PolyRing>,
        degree: u32,
        basis: Vec<Monomial>,
        index: BTreeMap<Monomial, usize>,
        mut rows: Vec<Vec<Scalar>>,
    ) -> Self {
        dense::rref(&mut rows, ring.field());
        GradedMatrix { ring, degree, basis, index, rows }
    }

    /// All of `A_d`.
    pub fn full_space(ring: &Arc<PolyRing>, degree: u32) -> Self {
        let polys: Vec<Polynomial> = Monomial::all_of_degree(ring.num_vars(), degree)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m))
            .collect();
        Self::from_polynomials(ring, degree, &polys).expect("monomials of the right degree")
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Column monomials.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.basis.len()
    }

    pub fn column_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn row_polynomials(&self) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                let terms = self
                    .basis
                    .iter()
                    .zip(row)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect();
                Polynomial::from_map(&self.ring, terms)
            })
            .collect()
    }

    pub fn rank_oracle(&self) -> RankOracle {
        RankOracle::new(&self.rows, self.ring.field())
    }

    /// Column indices of `s`, rejecting monomials of the wrong degree.
    pub fn columns_of(&self, s: &[Monomial]) -> Result<Vec<usize>> {
        let mut cols = BTreeSet::new();
        for m in s {
            if m.num_vars() != self.ring.num_vars() {
                return Err(Error::DimensionMismatch { expected: self.ring.num_vars(), found: m.num_vars() });
            }
            match self.column_of(m) {
                Some(c) => {
                    cols.insert(c);
                }
                None => return Err(Error::WrongDegree { expected: self.degree, found: m.degree() }),
            }
        }
        Ok(cols.into_iter().collect())
    }

    /// `rk_S W` or `rk^S W`.
    ///
    /// Since `⟨S⟩` is a coordinate subspace, `dim(W + ⟨S⟩) = |S| + r` where
    /// `r` is the rank of `W` projected onto the columns outside `S`.
    pub fn rank_rel(&self, s: &[Monomial], mode: RankMode) -> Result<usize> {
        let cols = self.columns_of(s)?;
        let outside = complement(&cols, self.num_cols());
        let projected = self.rank_oracle().rank_on_columns(&outside);
        Ok(match mode {
            RankMode::Sub => cols.len() + projected - self.dim(),
            RankMode::Sup => projected,
        })
    }

    /// `in_ω(W)`: re-echelonize with columns in `≺_ω`-descending order, then
    /// keep the maximal-weight part of every row.
    pub fn initial_space_w(&self, w: &Weight, tie: &MonomialOrder) -> Result<GradedMatrix> {
        let order = MonomialOrder::weighted(w.clone(), tie.clone())?;
        order.validate(self.ring.num_vars())?;
        let mut perm: Vec<usize> = (0..self.num_cols()).collect();
        perm.sort_by(|&a, &b| order.cmp_monomials(&self.basis[b], &self.basis[a]));
        let mut permuted: Vec<Vec<Scalar>> =
            self.rows.iter().map(|row| perm.iter().map(|&c| row[c].clone()).collect()).collect();
        dense::rref(&mut permuted, self.ring.field());
        let mut forms = Vec::with_capacity(permuted.len());
        for row in &permuted {
            let terms = perm
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&col, c)| (self.basis[col].clone(), c.clone()))
                .collect();
            forms.push(Polynomial::from_map(&self.ring, terms).initial_form(w)?);
        }
        Self::from_polynomials(&self.ring, self.degree, &forms)
    }

    /// The image `sW` of the space under a change of variables.
    pub fn transform(&self, s: &Substitution) -> Result<GradedMatrix> {
        let images = s.apply_all(&self.row_polynomials())?;
        Self::from_polynomials(&self.ring, self.degree, &images)
    }

    /// Membership test for a homogeneous polynomial of the right degree.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let mut polys = self.row_polynomials();
        polys.push(f.clone());
        Ok(Self::from_polynomials(&self.ring, self.degree, &polys)?.dim() == self.dim())
    }

    /// Dimension of `W ∩ ⟨S⟩`.
    pub fn intersection_dim(&self, s: &[Monomial]) -> Result<usize> {
        let cols = self.columns_of(s)?;
        let outside = complement(&cols, self.num_cols());
        Ok(self.dim() - self.rank_oracle().rank_on_columns(&outside))
    }
}

pub(crate) fn complement(cols: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - cols.len());
    let mut it = cols.iter().peekable();
    for c in 0..n {
        if it.peek() == Some(&&c) {
            it.next();
        } else {
            out.push(c);
        }
    }
    out
}

/// `I_d` as a graded matrix, spanned by all `m·g` with `g` a generator and
/// `m` a monomial of complementary degree.
pub fn graded_basis(ideal: &IdealHandle, d: u32) -> Result<GradedMatrix> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    let mut spanning = Vec::new();
    for g in ideal.generators() {
        let e = g.degree().unwrap_or(0);
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(n, d - e) {
            spanning.push(g.mul_term(&m, &Scalar::from_integer(1.into())));
        }
    }
    GradedMatrix::from_polynomials(ring, d, &spanning)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;
    use alloc::vec;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degree_two_piece_of_principal_ideal() {
        let r = ring2();
        let w = graded_basis(&ideal(&r, &["x + y"]), 2).unwrap();
        assert_eq!(w.dim(), 2);
        assert!(w.contains(&p(&r, "x^2 + x*y")).unwrap());
        assert!(w.contains(&p(&r, "x*y + y^2")).unwrap());
        assert!(!w.contains(&p(&r, "x^2")).unwrap());
    }

    #[test]
    fn monomial_pieces() {
        let r = ring2();
        let w = graded_basis(&ideal(&r, &["x"]), 1).unwrap();
        assert_eq!(w.row_polynomials(), vec![p(&r, "x")]);
        let full = graded_basis(&ideal(&r, &["x^2", "x*y", "y^2"]), 2).unwrap();
        assert_eq!(full.dim(), 3);
        assert_eq!(full, GradedMatrix::full_space(&r, 2));
        assert_eq!(graded_basis(&ideal(&r, &["x^2"]), 1).unwrap().dim(), 0);
    }

    #[test]
    fn relative_ranks() {
        let r = ring2();
        let w = GradedMatrix::from_polynomials(&r, 1, &[p(&r, "x + y")]).unwrap();
        assert_eq!(w.rank_rel(&[m(&[1, 0])], RankMode::Sub).unwrap(), 1);
        assert_eq!(w.rank_rel(&[m(&[1, 0]), m(&[0, 1])], RankMode::Sub).unwrap(), 1);
        assert_eq!(w.rank_rel(&[m(&[1, 0]), m(&[0, 1])], RankMode::Sup).unwrap(), 0);
        assert!(w.rank_rel(&[m(&[2, 0])], RankMode::Sub).is_err());
    }

    #[test]
    fn initial_spaces() {
        let r = ring2();
        let w = GradedMatrix::from_polynomials(&r, 2, &[p(&r, "x^2 + x*y")]).unwrap();
        let init = w.initial_space_w(&Weight::new(vec![1, 0]), &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(init.row_polynomials(), vec![p(&r, "x^2")]);
        let h = GradedMatrix::from_polynomials(&r, 2, &[p(&r, "x^2 + y^2"), p(&r, "x*y")]).unwrap();
        assert_eq!(h.initial_space_w(&Weight::new(vec![1, 1]), &MonomialOrder::Lex).unwrap(), h);
        let full = GradedMatrix::full_space(&r, 2);
        assert_eq!(full.initial_space_w(&Weight::new(vec![3, -1]), &MonomialOrder::Lex).unwrap(), full);
    }
}
