use gencircuits::circuits::{
    alpha_vector, circuits_of_space, circuits_truncated, circuits_truncated_capped, max_circuit_size, CircuitsSet,
};
use gencircuits::fan::{
    cone_of, enumerate_fan, generic_fan_compare, universal_basis, CompareMode, FanVerdict,
};
use gencircuits::generic::{gcs_truncated, normalize_weight, stab_check, RandomSpec};
use gencircuits::groebner::{
    default_lex_cap, diagonal_image, hilbert_function, homogenize_ideal_w, ideal_equal, initial_ideal_w,
    lex_segment_of, lex_segment_search, specialize_t,
};
use gencircuits::linalg::graded_basis;
use gencircuits::order::parse_weight;
use gencircuits::{Error, FieldSpec, IdealHandle, MonomialOrder, Scalar, Weight};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::input::{parse_field, read_ideal_file, IdealFile};
use crate::{json as js, CliError, Command, Common, Outcome, Randomness};

/// Reason codes for the errors that mean "not certified" rather than "bad
/// input".
pub fn certification_reason(e: &Error) -> Option<&'static str> {
    match e {
        Error::Uncertified { .. } => Some("gcs-uncertified"),
        Error::LexCapTooSmall { .. } => Some("lexseg-cap"),
        Error::MacaulayViolation { .. } => Some("lexseg-macaulay"),
        Error::CircuitsTruncated { .. } => Some("circuits-truncated"),
        Error::FanInconsistent(_) => Some("fan-inconsistent"),
        Error::ResampleExhausted { .. } => Some("resample-exhausted"),
        _ => None,
    }
}

fn load(common: &Common) -> Result<IdealFile, CliError> {
    let field: Option<FieldSpec> = common.field.as_deref().map(parse_field).transpose()?;
    read_ideal_file(&common.input, field)
}

fn weight_for(s: &str, n: usize) -> Result<Weight, CliError> {
    let w = parse_weight(s)?;
    if w.len() != n {
        return Err(CliError::Input(format!("weight {w} has {} entries for {n} variables", w.len())));
    }
    Ok(w)
}

fn order(s: &str, n: usize) -> Result<MonomialOrder, CliError> {
    let o: MonomialOrder = s.parse()?;
    o.validate(n)?;
    Ok(o)
}

fn spec(r: &Randomness) -> RandomSpec {
    RandomSpec::new(r.seed).with_entry_bound(r.entry_bound)
}

fn truncation(cs: &CircuitsSet) -> Value {
    json!(cs.truncation())
}

pub fn dispatch(cmd: &Command) -> Result<(Value, Outcome), CliError> {
    let file = load(cmd.common())?;
    let ring = &file.ring;
    let ideal = &file.ideal;
    let n = ring.num_vars();
    let outcome = match cmd {
        Command::Gb { order: o, .. } => Outcome::Done(js::basis(&*ideal.groebner(&order(o, n)?)?)),
        Command::Inw { weight, tie, .. } => {
            let w = weight_for(weight, n)?;
            let init = initial_ideal_w(ideal, &w, &order(tie, n)?)?;
            Outcome::Done(json!({ "initial_ideal": js::ideal(&init), "monomial": init.is_monomial() }))
        }
        Command::Circuits { trunc, degree, size_cap, .. } => match (trunc, degree) {
            (Some(d), _) => {
                let cs = match size_cap {
                    Some(cap) => circuits_truncated_capped(ideal, *d, *cap)?,
                    None => circuits_truncated(ideal, *d)?,
                };
                Outcome::Done(json!({ "truncation": truncation(&cs), "degrees": js::circuits(ring, &cs) }))
            }
            (None, Some(d)) => {
                let space = graded_basis(ideal, *d)?;
                let cap = size_cap.unwrap_or_else(|| max_circuit_size(&space));
                let mut cs = CircuitsSet::new(None);
                cs.extend(circuits_of_space(&space, cap)?);
                let list: Vec<Vec<String>> = cs.iter().map(|c| c.to_strings(ring)).collect();
                Outcome::Done(json!({ "degree": d, "dimension": space.dim(), "circuits": list }))
            }
            (None, None) => return Err(CliError::Input("one of --trunc and --degree is required".into())),
        },
        Command::Gcs { trunc, random, retries, .. } => {
            let cert = gcs_truncated(ideal, *trunc, &spec(random), *retries)?;
            Outcome::Done(json!({
                "truncation": truncation(&cert.circuits),
                "degrees": js::circuits(ring, &cert.circuits),
                "rounds": cert.rounds,
                "entry_bound": cert.entry_bound,
                "heuristic": cert.heuristic,
                "witnesses": cert.witnesses.iter().map(|m| js::matrix(m)).collect::<Vec<_>>(),
            }))
        }
        Command::Alpha { weight, degree, .. } => {
            let w = weight_for(weight, n)?;
            let norm = normalize_weight(&w, n)?;
            let sorted = ideal.permute_variables(&norm.perm);
            let alpha = alpha_vector(&graded_basis(&sorted, *degree)?, &norm.weight)?;
            let top = alpha.values.len() as i64;
            let values: Vec<Value> = alpha.values.iter().zip((1..=top).rev()).map(|(r, a)| json!({ "a": a, "rank": r })).collect();
            Outcome::Done(json!({
                "degree": degree,
                "normalized_weight": js::weight(&norm.weight),
                "permutation": norm.perm,
                "shift": norm.shift,
                "values": values,
            }))
        }
        Command::FanCell { weight, tie, .. } => {
            let w = weight_for(weight, n)?;
            let tie = order(tie, n)?;
            let mut v = js::cone(&cone_of(ideal, &w, &tie)?);
            v["initial_ideal"] = js::ideal(&initial_ideal_w(ideal, &w, &tie)?);
            v["rep_weight"] = js::weight(&w);
            Outcome::Done(v)
        }
        Command::FanEnum { bound, step, tie, seed, .. } => {
            let sketch = enumerate_fan(ideal, *bound, *step, &order(tie, n)?)?;
            Outcome::Done(json!({
                "cells": sketch.cells.iter().map(js::cell).collect::<Vec<_>>(),
                "box": sketch.bound,
                "step": sketch.step,
                "seed": seed,
                "samples": sketch.samples,
                "note": "cells found within box",
            }))
        }
        Command::FanCompare { other, deterministic, random, retries, cap, .. } => {
            let second = read_ideal_file(other, Some(ring.field()))?;
            if second.ring.names() != ring.names() {
                return Err(CliError::Input("the two files use different variables".into()));
            }
            let gens = second.ideal.generators().iter().map(|g| g.to_ring(ring)).collect::<Result<_, _>>()?;
            let j = IdealHandle::new(ring, gens)?;
            let mode = if *deterministic { CompareMode::Deterministic } else { CompareMode::Generic };
            let c = generic_fan_compare(ideal, &j, &spec(random), mode, *retries, *cap)?;
            let verdict = match c.verdict {
                FanVerdict::EqualFanCertified => "equal-fan-certified",
                FanVerdict::Inconclusive => "inconclusive",
                FanVerdict::Incomparable => "incomparable: Hilbert mismatch",
            };
            Outcome::Done(json!({
                "verdict": verdict,
                "mode": if *deterministic { "deterministic" } else { "generic" },
                "bound": c.bound,
                "cap": c.cap,
                "heuristic": c.heuristic,
            }))
        }
        Command::Stab { weight, gtrials, btrials, random, .. } => {
            let w = weight_for(weight, n)?;
            let report = stab_check(ideal, &w, &spec(random), *gtrials, *btrials)?;
            let trials: Vec<Value> = report
                .trials
                .iter()
                .map(|t| {
                    let mut v = json!({ "g": t.g_index, "b": t.b_index, "passed": t.passed });
                    if let Some(wit) = &t.witness {
                        v["witness"] = json!({
                            "g": js::matrix(&wit.g),
                            "b": js::matrix(&wit.b),
                            "initial_ideal": js::polys(&wit.initial),
                            "moved": js::polys(&wit.moved),
                        });
                    }
                    v
                })
                .collect();
            let result = json!({
                "passed": report.passed(),
                "failures": report.failures(),
                "normalized_weight": js::weight(&report.normalized.weight),
                "permutation": report.normalized.perm,
                "note": report.note,
                "trials": trials,
            });
            if report.passed() {
                Outcome::Done(result)
            } else {
                Outcome::Uncertified {
                    reason: "stab-failed",
                    message: format!("{} of {} (g, b) pairs moved the initial ideal", report.failures(), report.trials.len()),
                    result,
                }
            }
        }
        Command::Hf { max_degree, .. } => {
            let h = hilbert_function(ideal, max_degree.unwrap_or_else(|| default_lex_cap(ideal)));
            Outcome::Done(json!({ "ideal": h.ideal_dims(), "quotient": h.quotient_dims() }))
        }
        Command::Lexseg { cap, max_cap, .. } => {
            let seg = match max_cap {
                Some(m) => lex_segment_search(ideal, *m)?,
                None => lex_segment_of(ideal, *cap)?,
            };
            Outcome::Done(json!({
                "generators": js::monomials(ring, &seg.generators),
                "bound": seg.bound,
                "cap": seg.cap,
                "hilbert": seg.hilbert.ideal_dims(),
            }))
        }
        Command::Ugb { bound, step, .. } => {
            let sketch = enumerate_fan(ideal, *bound, *step, &MonomialOrder::DegRevLex)?;
            let ugb = universal_basis(ideal, &sketch)?;
            Outcome::Done(json!({
                "elements": js::polys(&ugb),
                "cells": sketch.full_dimensional().count(),
                "box": bound,
                "step": step,
                "note": "union over the full-dimensional cells found within box",
            }))
        }
        Command::Flatfam { weight, at, .. } => {
            let w = weight_for(weight, n)?;
            let family = homogenize_ideal_w(ideal, &w)?;
            let init = initial_ideal_w(ideal, &w, &MonomialOrder::DegRevLex)?;
            let mut fibres = Vec::new();
            for part in at.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let a: BigInt = part.parse().map_err(|_| CliError::Input(format!("bad value of t: `{part}`")))?;
                let a = ring.field().from_int(a);
                let fibre = specialize_t(&family, &a)?;
                let (expected, equals) = if a == Scalar::from_integer(0.into()) {
                    ("initial ideal", ideal_equal(&fibre, &init)?)
                } else {
                    ("diagonal image", ideal_equal(&fibre, &diagonal_image(ideal, &w, &a)?)?)
                };
                fibres.push(json!({
                    "t": part,
                    "generators": js::ideal(&fibre),
                    "expected": expected,
                    "matches": equals,
                }));
            }
            Outcome::Done(json!({
                "ring_t": js::ring(&family.ring_t),
                "generators": js::polys(&family.generators),
                "fibres": fibres,
            }))
        }
    };
    Ok((js::ring(ring), outcome))
}
