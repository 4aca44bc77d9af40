//! Exact scalars, monomials, sparse polynomials, weights and linear changes
//! of variables.

mod field;
mod monomial;
mod parse;
mod polynomial;
mod substitution;
mod weight;

pub use field::{scalar_to_string, FieldSpec, Scalar, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use polynomial::{format_monomial, PolyRing, Polynomial};
pub use substitution::{Convention, Substitution};
pub use weight::{weight_value, Weight};

pub(crate) use polynomial::same_ring;

use alloc::sync::Arc;

use crate::error::Result;

/// `in_ω(f)`.
pub fn initial_form_w(f: &Polynomial, w: &Weight) -> Result<Polynomial> {
    f.initial_form(w)
}

/// Homogenizes `f` with respect to `w` into `K[X_1,…,X_n,t]`.
pub fn homogenize_w(f: &Polynomial, w: &Weight) -> Result<Polynomial> {
    let ring_t: Arc<PolyRing> = f.ring().with_extra_variable("t");
    f.homogenize_in(w, &ring_t)
}

/// Applies a change of variables.
pub fn apply_substitution(s: &Substitution, f: &Polynomial) -> Result<Polynomial> {
    s.apply(f)
}
