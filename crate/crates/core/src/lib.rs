//! Circuits sets, generic circuits sets and weight initial ideals of
//! homogeneous polynomial ideals.
//!
//! Everything here is exact: coefficients live in the rationals (arbitrary
//! precision) or in a prime field, and every rank, basis and cone is computed
//! without floating point. The crate is `no_std` and only needs `alloc`; file
//! formats and the command line live in the `gencircuits-cli` crate.
//!
//! Module map:
//!
//! * [`ring`]: scalars, monomials, sparse polynomials, weights, substitutions.
//! * [`order`]: lex, degrevlex and weight-refined monomial orders.
//! * [`linalg`]: graded coordinate matrices, exact ranks, relative ranks.
//! * [`groebner`]: reduced Gröbner bases, weight initial ideals, Hilbert
//!   functions, lex-segment ideals, homogenization with respect to a weight.
//! * [`circuits`]: circuits of graded pieces, initial circuits, rank vectors.
//! * [`generic`]: random coordinate changes, certified truncated generic
//!   circuits sets, the unipotent subgroup attached to a weight and the
//!   invariance checker for general initial ideals.
//! * [`fan`]: Gröbner-fan cells, box enumeration, the Newton-polytope oracle
//!   for principal ideals, universal bases and fan comparison.
//!
//! ```
//! use gencircuits::{circuits::circuits_truncated, FieldSpec, IdealHandle, PolyRing, Polynomial};
//!
//! let r = PolyRing::from_names(&["x", "y"], FieldSpec::Rationals)?;
//! let gens = ["x + y", "x^2", "x*y", "y^2"].iter().map(|s| Polynomial::parse(&r, s)).collect::<Result<_, _>>()?;
//! let ideal = IdealHandle::new(&r, gens)?;
//! let cs = circuits_truncated(&ideal, 2)?;
//! assert_eq!(cs.len(), 4);
//! assert_eq!(cs.in_degree(1).next().unwrap().to_strings(&r), ["x", "y"]);
//! # Ok::<(), gencircuits::Error>(())
//! ```
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod circuits;
pub mod error;
pub mod fan;
pub mod generic;
pub mod groebner;
pub mod linalg;
pub mod order;
pub mod ring;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, IdealHandle};
pub use order::MonomialOrder;
pub use ring::{FieldSpec, Monomial, PolyRing, Polynomial, Scalar, Substitution, Weight};
