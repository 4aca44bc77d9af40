//! Buchberger's algorithm for homogeneous input.
//!
//! Pairs are processed by smallest lcm (degree first, then the active order)
//! and pairs with coprime leading monomials are skipped. Every polynomial is
//! homogeneous, so each reduction stays inside one finite graded piece and
//! terminates for any order that is total on monomials of a fixed degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::order::MonomialOrder;
use crate::ring::{FieldSpec, Monomial, Polynomial, Scalar};

type Terms = BTreeMap<Vec<i64>, (Monomial, Scalar)>;

/// A monic basis element with terms sorted descending under the order.
#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub(crate) lead: Monomial,
    pub(crate) terms: Vec<(Monomial, Scalar)>,
}

pub(crate) struct Engine<'a> {
    pub(crate) order: &'a MonomialOrder,
    pub(crate) field: FieldSpec,
}

impl<'a> Engine<'a> {
    pub(crate) fn to_terms(&self, f: &Polynomial) -> Terms {
        f.terms().map(|(m, c)| (self.order.sort_key(m), (m.clone(), c.clone()))).collect()
    }

    fn add_into(&self, p: &mut Terms, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = self.order.sort_key(&m);
        match p.get_mut(&key) {
            Some(entry) => {
                let s = self.field.add(&entry.1, &c);
                if s.is_zero() {
                    p.remove(&key);
                } else {
                    entry.1 = s;
                }
            }
            None => {
                p.insert(key, (m, c));
            }
        }
    }

    /// Full reduction of every term of `p` by the elements of `basis` (except
    /// the one at `skip`).
    pub(crate) fn reduce(&self, mut p: Terms, basis: &[Elem], skip: Option<usize>) -> Terms {
        let mut rem = Terms::new();
        while let Some((key, (m, c))) = p.pop_last() {
            let divisor = basis
                .iter()
                .enumerate()
                .find(|(i, g)| Some(*i) != skip && g.lead.divides(&m))
                .map(|(_, g)| g);
            match divisor {
                Some(g) => {
                    let q = g.lead.quotient_of(&m).expect("lead divides");
                    for (gm, gc) in &g.terms[1..] {
                        let t = self.field.mul(&c, gc);
                        self.add_into(&mut p, gm.mul(&q), self.field.neg(&t));
                    }
                }
                None => {
                    rem.insert(key, (m, c));
                }
            }
        }
        rem
    }

    /// Turns nonzero terms into a monic element.
    pub(crate) fn make_elem(&self, p: Terms) -> Elem {
        let lc = p.last_key_value().expect("nonzero").1 .1.clone();
        let inv = self.field.inv(&lc).expect("nonzero leading coefficient");
        let terms: Vec<(Monomial, Scalar)> =
            p.into_values().rev().map(|(m, c)| (m, self.field.mul(&c, &inv))).collect();
        Elem { lead: terms[0].0.clone(), terms }
    }

    fn s_polynomial(&self, f: &Elem, g: &Elem) -> Terms {
        let l = f.lead.lcm(&g.lead);
        let qf = f.lead.quotient_of(&l).unwrap();
        let qg = g.lead.quotient_of(&l).unwrap();
        let mut p = Terms::new();
        for (m, c) in &f.terms[1..] {
            self.add_into(&mut p, m.mul(&qf), c.clone());
        }
        for (m, c) in &g.terms[1..] {
            self.add_into(&mut p, m.mul(&qg), self.field.neg(c));
        }
        p
    }

    pub(crate) fn to_polynomial(&self, ring: &alloc::sync::Arc<crate::ring::PolyRing>, e: &Elem) -> Polynomial {
        Polynomial::from_map(ring, e.terms.iter().cloned().collect())
    }

    /// The reduced Gröbner basis of the span of `gens`, leads ascending.
    pub(crate) fn reduced_basis(&self, gens: &[Polynomial]) -> Vec<Elem> {
        let mut basis: Vec<Elem> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();

        let push = |basis: &mut Vec<Elem>, pairs: &mut Vec<(usize, usize)>, e: Elem| {
            let k = basis.len();
            for (i, other) in basis.iter().enumerate() {
                if !other.lead.is_coprime(&e.lead) {
                    pairs.push((i, k));
                }
            }
            basis.push(e);
        };

        let mut sorted: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
        sorted.sort_by_key(|g| g.degree());
        for g in sorted {
            let r = self.reduce(self.to_terms(g), &basis, None);
            if !r.is_empty() {
                let e = self.make_elem(r);
                push(&mut basis, &mut pairs, e);
            }
        }

        while !pairs.is_empty() {
            let (pos, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    let la = basis[a.0].lead.lcm(&basis[a.1].lead);
                    let lb = basis[b.0].lead.lcm(&basis[b.1].lead);
                    la.degree()
                        .cmp(&lb.degree())
                        .then_with(|| self.order.cmp_monomials(&la, &lb))
                        .then_with(|| a.cmp(b))
                })
                .unwrap();
            let (i, j) = pairs.swap_remove(pos);
            let s = self.s_polynomial(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis, None);
            if !r.is_empty() {
                let e = self.make_elem(r);
                push(&mut basis, &mut pairs, e);
            }
        }

        // Keep one element per minimal leading monomial.
        let mut minimal: Vec<Elem> = Vec::new();
        for (i, e) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(j, other)| {
                j != i && other.lead.divides(&e.lead) && (other.lead != e.lead || j < i)
            });
            if !redundant {
                minimal.push(e.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let terms: Terms =
                minimal[i].terms.iter().map(|(m, c)| (self.order.sort_key(m), (m.clone(), c.clone()))).collect();
            let r = self.reduce(terms, &minimal, Some(i));
            reduced.push(self.make_elem(r));
        }
        reduced.sort_by(|a, b| self.order.cmp_monomials(&a.lead, &b.lead));
        reduced
    }
}
