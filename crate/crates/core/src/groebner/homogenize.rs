use alloc::sync::Arc;
use alloc::vec::Vec;

use super::IdealHandle;
use crate::error::Result;
use crate::order::MonomialOrder;
use crate::ring::{PolyRing, Polynomial, Scalar, Substitution, Weight};

/// The one-parameter family `Ĩ ⊂ K[X, t]` joining `I` (at `t = 1`) to
/// `in_ω(I)` (at `t = 0`).
#[derive(Clone, Debug)]
pub struct HomogenizedIdeal {
    pub base: IdealHandle,
    pub weight: Weight,
    pub ring_t: Arc<PolyRing>,
    pub generators: Vec<Polynomial>,
}

/// Homogenizes the reduced basis of `I` for `≺_ω` (ties by degrevlex).
pub fn homogenize_ideal_w(ideal: &IdealHandle, w: &Weight) -> Result<HomogenizedIdeal> {
    let order = MonomialOrder::weighted(w.clone(), MonomialOrder::DegRevLex)?;
    let gb = ideal.groebner(&order)?;
    let ring_t = ideal.ring().with_extra_variable("t");
    let generators = gb.elements().iter().map(|g| g.homogenize_in(w, &ring_t)).collect::<Result<Vec<_>>>()?;
    Ok(HomogenizedIdeal { base: ideal.clone(), weight: w.clone(), ring_t, generators })
}

/// The fibre of the family at `t = a`.
pub fn specialize_t(h: &HomogenizedIdeal, a: &Scalar) -> Result<IdealHandle> {
    let ring = h.base.ring();
    let gens = h.generators.iter().map(|g| g.evaluate_last(a, ring)).collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ring, gens)
}

/// `D_a(I)` where `D_a` sends `X_i` to `a^{-ω_i} X_i`.
pub fn diagonal_image(ideal: &IdealHandle, w: &Weight, a: &Scalar) -> Result<IdealHandle> {
    ideal.transform(&Substitution::diagonal_scaling(ideal.ring(), w, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_equal, initial_ideal_w};
    use crate::ring::FieldSpec;
    use alloc::vec;
    use num_traits::{One, Zero};

    #[test]
    fn flat_family_fibres() {
        let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let i = IdealHandle::new(&r, vec![p("x^2 + x*y")]).unwrap();
        let w = Weight::new(vec![1, 0]);
        let h = homogenize_ideal_w(&i, &w).unwrap();
        assert_eq!(h.generators, vec![Polynomial::parse(&h.ring_t, "x^2 + t*x*y").unwrap()]);

        let at_one = specialize_t(&h, &Scalar::one()).unwrap();
        assert!(ideal_equal(&at_one, &i).unwrap());
        let at_zero = specialize_t(&h, &Scalar::zero()).unwrap();
        assert!(ideal_equal(&at_zero, &IdealHandle::new(&r, vec![p("x^2")]).unwrap()).unwrap());
        assert!(ideal_equal(&at_zero, &initial_ideal_w(&i, &w, &MonomialOrder::DegRevLex).unwrap()).unwrap());
        let two = Scalar::from_integer(2.into());
        let at_two = specialize_t(&h, &two).unwrap();
        assert!(ideal_equal(&at_two, &IdealHandle::new(&r, vec![p("x^2 + 2*x*y")]).unwrap()).unwrap());
        assert!(ideal_equal(&at_two, &diagonal_image(&i, &w, &two).unwrap()).unwrap());
    }
}
