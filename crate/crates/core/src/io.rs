//! Line-oriented CAF text format.
//!
//! ```text
//! # comment
//! arg a1
//! arg a2
//! arg phi
//! claim a1 a
//! claim a2 a
//! claim phi phi
//! att phi a2
//! ```
//!
//! Every argument must be declared with `arg` before any directive mentions
//! it and must receive exactly one `claim`. Argument ids follow declaration
//! order. Names and labels are runs of `[A-Za-z0-9_]`. Repeated attacks are
//! accepted and collapse into one.

use std::collections::HashMap;
use std::fmt::Write;

use crate::model::{is_valid_name, ArgumentId, Caf, CafBuilder};
use crate::{Error, Result};

pub fn parse_caf(text: &str) -> Result<Caf> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, (ArgumentId, usize)> = HashMap::new();
    let mut claims: Vec<Option<String>> = Vec::new();
    let mut attacks: Vec<(ArgumentId, ArgumentId)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let lookup = |name: &str| {
            ids.get(name)
                .map(|&(id, _)| id)
                .ok_or_else(|| Error::caf_syntax(line_no, format!("undeclared argument {name:?}")))
        };
        match fields.as_slice() {
            ["arg", name] => {
                if !is_valid_name(name) {
                    return Err(Error::caf_syntax(line_no, format!("invalid name {name:?}")));
                }
                if let Some((_, first)) = ids.get(*name) {
                    return Err(Error::caf_syntax(
                        line_no,
                        format!("argument {name:?} already declared on line {first}"),
                    ));
                }
                ids.insert(name.to_string(), (ArgumentId(names.len()), line_no));
                names.push(name.to_string());
                claims.push(None);
            }
            ["claim", name, label] => {
                let id = lookup(name)?;
                if !is_valid_name(label) {
                    return Err(Error::caf_syntax(
                        line_no,
                        format!("invalid claim {label:?}"),
                    ));
                }
                if claims[id.0].is_some() {
                    return Err(Error::caf_syntax(
                        line_no,
                        format!("second claim for argument {name:?}"),
                    ));
                }
                claims[id.0] = Some(label.to_string());
            }
            ["att", from, to] => {
                let (a, b) = (lookup(from)?, lookup(to)?);
                attacks.push((a, b));
            }
            [kw @ ("arg" | "claim" | "att"), ..] => {
                return Err(Error::caf_syntax(
                    line_no,
                    format!("wrong number of fields for {kw:?}"),
                ));
            }
            [other, ..] => {
                return Err(Error::caf_syntax(
                    line_no,
                    format!("unknown directive {other:?}"),
                ));
            }
            [] => unreachable!("blank lines are skipped"),
        }
    }

    let mut b = CafBuilder::new();
    for (name, claim) in names.iter().zip(&claims) {
        let Some(claim) = claim else {
            let line = ids[name].1;
            return Err(Error::caf_syntax(
                line,
                format!("argument {name:?} has no claim"),
            ));
        };
        b.add_argument(name, claim)?;
    }
    for (a, c) in attacks {
        b.add_attack(a, c);
    }
    b.build()
}

/// Canonical document: `arg` lines in id order, then `claim` lines in id
/// order, then `att` lines by ascending `(attacker, target)` id.
pub fn emit_caf(caf: &Caf) -> String {
    let af = caf.af();
    let mut out = String::new();
    for a in af.arguments() {
        let _ = writeln!(out, "arg {}", af.name(a));
    }
    for a in af.arguments() {
        let _ = writeln!(
            out,
            "claim {} {}",
            af.name(a),
            caf.claim_label(caf.claim(a))
        );
    }
    for (a, b) in af.attacks() {
        let _ = writeln!(out, "att {} {}", af.name(a), af.name(b));
    }
    out
}
