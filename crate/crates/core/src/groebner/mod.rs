//! Reduced Gröbner bases, weight initial ideals, ideal equality, Hilbert
//! functions, lex-segment ideals and homogenization with respect to a weight.

mod buchberger;
mod hilbert;
mod homogenize;

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use spin::Mutex;

use self::buchberger::{Elem, Engine};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::ring::{same_ring, Monomial, PolyRing, Polynomial, Substitution, Weight};

pub use hilbert::{
    default_lex_cap, hilbert_function, lex_segment, lex_segment_of, lex_segment_search, HilbertData, LexSegment,
};
pub use homogenize::{diagonal_image, homogenize_ideal_w, specialize_t, HomogenizedIdeal};

/// A reduced Gröbner basis. Elements are monic and sorted by leading
/// monomial, ascending under `order`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    elems: Vec<Elem>,
    ring: Arc<PolyRing>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lead.clone()).collect()
    }

    /// Largest degree of an element (0 for the zero ideal).
    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Remainder of `f` on division by the basis; zero exactly when `f` lies
    /// in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch);
        }
        let engine = Engine { order: &self.order, field: self.ring.field() };
        let rem = engine.reduce(engine.to_terms(f), &self.elems, None);
        Ok(Polynomial::from_map(&self.ring, rem.into_values().collect()))
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

/// A homogeneous ideal given by generators, with reduced Gröbner bases
/// cached per order.
pub struct IdealHandle {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().clone()),
        }
    }
}

impl core::fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IdealHandle").field("ring", &self.ring).field("generators", &self.generators).finish()
    }
}

impl IdealHandle {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !same_ring(ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
            gens.push(g);
        }
        Ok(IdealHandle { ring: ring.clone(), generators: gens, cache: Mutex::new(BTreeMap::new()) })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        IdealHandle { ring: ring.clone(), generators: Vec::new(), cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// The reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        order.validate(self.ring.num_vars())?;
        if let Some(gb) = self.cache.lock().get(order) {
            return Ok(gb.clone());
        }
        let engine = Engine { order, field: self.ring.field() };
        let elems = engine.reduced_basis(&self.generators);
        let elements = elems.iter().map(|e| engine.to_polynomial(&self.ring, e)).collect();
        let gb = Arc::new(GroebnerBasis {
            order: order.clone(),
            elements,
            elems,
            ring: self.ring.clone(),
            reduced: true,
        });
        self.cache.lock().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    /// The reduced basis under the canonical (degrevlex) order.
    pub fn canonical_basis(&self) -> Arc<GroebnerBasis> {
        self.groebner(&MonomialOrder::canonical()).expect("degrevlex is valid in every ring")
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.canonical_basis().normal_form(f)?.is_zero())
    }

    /// Whether the ideal is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
            || self.canonical_basis().elements().iter().all(Polynomial::is_monomial)
    }

    /// The image of the ideal under a change of variables.
    pub fn transform(&self, s: &Substitution) -> Result<IdealHandle> {
        IdealHandle::new(&self.ring, s.apply_all(&self.generators)?)
    }

    /// Relabels variables so that variable `k` of the result is variable
    /// `perm[k]` of `self`.
    pub fn permute_variables(&self, perm: &[usize]) -> IdealHandle {
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.iter().map(|g| g.permute_variables(perm)).collect(),
            cache: Mutex::new(BTreeMap::new()),
        }
    }
}

/// Reduced Gröbner basis of `I` for `o`.
pub fn buchberger_reduced(ideal: &IdealHandle, o: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
    ideal.groebner(o)
}

/// Remainder of `f` modulo `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(f)
}

/// `in_≺(I)`, generated by the leading monomials of the reduced basis.
pub fn initial_ideal(ideal: &IdealHandle, o: &MonomialOrder) -> Result<IdealHandle> {
    let gb = ideal.groebner(o)?;
    let gens = gb.leading_monomials().into_iter().map(|m| Polynomial::monomial(&ideal.ring, m)).collect();
    IdealHandle::new(&ideal.ring, gens)
}

/// `in_ω(I)`, generated by the initial forms of the reduced basis under
/// `≺_ω` refined by `tie`.
pub fn initial_ideal_w(ideal: &IdealHandle, w: &Weight, tie: &MonomialOrder) -> Result<IdealHandle> {
    let order = MonomialOrder::weighted(w.clone(), tie.clone())?;
    let gb = ideal.groebner(&order)?;
    let gens = gb.elements().iter().map(|g| g.initial_form(w)).collect::<Result<Vec<_>>>()?;
    IdealHandle::new(&ideal.ring, gens)
}

/// Equality of ideals through their canonical reduced bases.
pub fn ideal_equal(a: &IdealHandle, b: &IdealHandle) -> Result<bool> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(a.canonical_basis().elements() == b.canonical_basis().elements())
}

/// A canonical fingerprint of an ideal: its reduced degrevlex basis.
pub fn fingerprint(ideal: &IdealHandle) -> Vec<Polynomial> {
    ideal.canonical_basis().elements().to_vec()
}
