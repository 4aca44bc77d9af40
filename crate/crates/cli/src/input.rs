//! Ideal files.
//!
//! ```text
//! ring: Q; vars: x,y,z
//! gens:
//! x^2 - y*z
//! x*y - z^2
//! ```
//!
//! The header may also be split over several lines. `#` starts a comment.

use std::sync::Arc;

use gencircuits::{FieldSpec, IdealHandle, PolyRing, Polynomial};

use crate::CliError;

/// `Q`, `QQ`, `GF(p)` or `gf:p`.
pub fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    let t = s.trim();
    if matches!(t, "Q" | "QQ" | "q" | "qq") {
        return Ok(FieldSpec::Rationals);
    }
    let lower = t.to_ascii_lowercase();
    let p = lower
        .strip_prefix("gf:")
        .or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| CliError::Input(format!("unknown field `{t}`")))?;
    let p: u64 = p.trim().parse().map_err(|_| CliError::Input(format!("bad modulus in `{t}`")))?;
    Ok(FieldSpec::prime(p)?)
}

#[derive(Debug)]
pub struct IdealFile {
    pub ring: Arc<PolyRing>,
    pub ideal: IdealHandle,
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a).trim()
}

/// Parses the file text. `field` overrides the field named in the header.
pub fn parse_ideal_file(text: &str, field: Option<FieldSpec>) -> Result<IdealFile, CliError> {
    let mut header_field = None;
    let mut vars: Option<Vec<String>> = None;
    let mut lines = text.lines().enumerate();
    let mut saw_gens = false;
    for (no, raw) in lines.by_ref() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        for item in line.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("line {}: expected `key: value`", no + 1)))?;
            match key.trim() {
                "ring" => header_field = Some(parse_field(value)?),
                "vars" => {
                    vars = Some(value.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect())
                }
                "gens" if value.trim().is_empty() => saw_gens = true,
                other => return Err(CliError::Input(format!("line {}: unknown header key `{other}`", no + 1))),
            }
        }
        if saw_gens {
            break;
        }
    }
    if !saw_gens {
        return Err(CliError::Input("missing `gens:` section".into()));
    }
    let vars = vars.ok_or_else(|| CliError::Input("missing `vars:` in the header".into()))?;
    let field = field.or(header_field).ok_or_else(|| CliError::Input("missing `ring:` in the header".into()))?;
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let ring = PolyRing::from_names(&names, field)?;
    let mut gens = Vec::new();
    for (no, raw) in lines {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let f = Polynomial::parse(&ring, line).map_err(|e| CliError::Input(format!("line {}: {e}", no + 1)))?;
        gens.push(f);
    }
    let ideal = IdealHandle::new(&ring, gens)?;
    Ok(IdealFile { ring, ideal })
}

pub fn read_ideal_file(path: &std::path::Path, field: Option<FieldSpec>) -> Result<IdealFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_ideal_file(&text, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headers() {
        let f = parse_ideal_file("ring: Q; vars: x,y\ngens:\nx + y\nx^2\n", None).unwrap();
        assert_eq!(f.ring.names(), ["x", "y"]);
        assert_eq!(f.ideal.generators().len(), 2);
        let f = parse_ideal_file("# pair\nring: GF(2)\nvars: x, y\n\ngens:\nx - y  # same as x + y\n", None).unwrap();
        assert_eq!(f.ring.field(), FieldSpec::Prime(2));
        assert_eq!(f.ideal.generators()[0].to_string(), "x + y");
        let f = parse_ideal_file("ring: Q; vars: x\ngens:\nx\n", Some(FieldSpec::Prime(7))).unwrap();
        assert_eq!(f.ring.field(), FieldSpec::Prime(7));
    }

    #[test]
    fn malformed_files() {
        for text in [
            "vars: x\ngens:\nx\n",
            "ring: Q\ngens:\nx\n",
            "ring: Q; vars: x\nx\n",
            "ring: R; vars: x\ngens:\nx\n",
            "ring: GF(4); vars: x\ngens:\nx\n",
            "ring: Q; vars: x,y\ngens:\nx + y^2\n",
            "ring: Q; vars: x\ngens:\nx + z\n",
            "ring: Q; vars: x; colour: red\ngens:\n",
        ] {
            assert!(parse_ideal_file(text, None).is_err(), "{text}");
        }
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("gf:32003").unwrap(), FieldSpec::Prime(32003));
        assert_eq!(parse_field("QQ").unwrap(), FieldSpec::Rationals);
        assert!(parse_field("gf:1").is_err());
    }
}
