//! Graded coordinate matrices, exact ranks and the relative ranks `rk_S`,
//! `rk^S`.

pub mod dense;
mod graded;

pub use graded::{graded_basis, GradedMatrix, RankMode};

pub(crate) use graded::complement;

use crate::error::Result;
use crate::order::MonomialOrder;
use crate::ring::{Monomial, Weight};

/// `rk_S W` (`RankMode::Sub`) or `rk^S W` (`RankMode::Sup`).
pub fn rank_rel(w: &GradedMatrix, s: &[Monomial], mode: RankMode) -> Result<usize> {
    w.rank_rel(s, mode)
}

/// `in_ω(W)`.
pub fn initial_space_w(w: &GradedMatrix, weight: &Weight, tie: &MonomialOrder) -> Result<GradedMatrix> {
    w.initial_space_w(weight, tie)
}
