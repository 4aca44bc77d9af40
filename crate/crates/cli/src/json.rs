//! JSON shapes for library values. Polynomials and monomials are written in
//! the text grammar so that they parse back.

use gencircuits::circuits::CircuitsSet;
use gencircuits::fan::{Cone, FanCell};
use gencircuits::ring::{format_monomial, scalar_to_string};
use gencircuits::{GroebnerBasis, IdealHandle, Monomial, PolyRing, Polynomial, Scalar, Weight};
use serde_json::{json, Value};

pub fn ring(r: &PolyRing) -> Value {
    json!({ "field": r.field().to_string(), "vars": r.names() })
}

pub fn polys(ps: &[Polynomial]) -> Value {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn monomials(r: &PolyRing, ms: &[Monomial]) -> Value {
    ms.iter().map(|m| format_monomial(r, m)).collect()
}

pub fn weight(w: &Weight) -> Value {
    json!(w.entries())
}

pub fn matrix(m: &[Vec<Scalar>]) -> Value {
    m.iter().map(|row| row.iter().map(scalar_to_string).collect::<Vec<_>>()).collect()
}

pub fn basis(gb: &GroebnerBasis) -> Value {
    json!({ "order": gb.order().to_string(), "elements": polys(gb.elements()), "reduced": gb.is_reduced() })
}

/// The reduced degrevlex basis of an ideal.
pub fn ideal(i: &IdealHandle) -> Value {
    polys(i.canonical_basis().elements())
}

pub fn circuits(r: &PolyRing, cs: &CircuitsSet) -> Value {
    cs.degrees()
        .map(|d| {
            let list: Vec<Vec<String>> = cs.in_degree(d).map(|c| c.to_strings(r)).collect();
            json!({ "degree": d, "circuits": list })
        })
        .collect()
}

pub fn cone(c: &Cone) -> Value {
    json!({
        "equalities": c.equalities(),
        "inequalities": c.inequalities(),
        "full_dimensional": c.is_full_dimensional(),
    })
}

pub fn cell(c: &FanCell) -> Value {
    let mut v = cone(&c.cone);
    v["initial_ideal"] = polys(&c.fingerprint);
    v["rep_weight"] = weight(&c.representative);
    v
}
