//! Propositional search for a non-concurrence witness.
//!
//! The complement of concurrence is decided by guessing two argument sets
//! `E` and `G` and checking that both are naive and `cl(E) ⊊ cl(G)`. The
//! encoding below expresses exactly that check, so a model is a witness and
//! unsatisfiability means the CAF is concurrent.
//!
//! Variables, for `n` arguments and `m` claims:
//!
//! | range                   | meaning                         |
//! |-------------------------|---------------------------------|
//! | `1 ..= n`               | argument `a` is in `E`          |
//! | `n+1 ..= 2n`            | argument `a` is in `G`          |
//! | `2n+1 ..= 2n+m`         | claim `k` is in `cl(E)`         |
//! | `2n+m+1 ..= 2n+2m`      | claim `k` is in `cl(G)`         |
//! | `2n+2m+1 ..= 2n+3m`     | claim `k` is in `cl(G) \ cl(E)` |

use std::fmt::Write;

use crate::cnf::{write_clauses, Clause, Literal};
use crate::model::{ArgumentId, Caf, ClaimId, Extension};
use crate::semantics::{verify_witness, ConcurrenceVerdict, Witness};
use crate::solver::solve_clauses;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    E,
    G,
}

impl Side {
    fn tag(self) -> &'static str {
        match self {
            Side::E => "E",
            Side::G => "G",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncodingVar {
    Member(Side, ArgumentId),
    Claim(Side, ClaimId),
    /// Auxiliary for `cG_k ∧ ¬cE_k`.
    Gain(ClaimId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessEncoding {
    n_args: usize,
    n_claims: usize,
    clauses: Vec<Clause>,
}

impl WitnessEncoding {
    pub fn n_vars(&self) -> usize {
        2 * self.n_args + 3 * self.n_claims
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn var(&self, v: EncodingVar) -> u32 {
        let (n, m) = (self.n_args, self.n_claims);
        let idx = match v {
            EncodingVar::Member(Side::E, a) => a.0,
            EncodingVar::Member(Side::G, a) => n + a.0,
            EncodingVar::Claim(Side::E, k) => 2 * n + k.0,
            EncodingVar::Claim(Side::G, k) => 2 * n + m + k.0,
            EncodingVar::Gain(k) => 2 * n + 2 * m + k.0,
        };
        idx as u32 + 1
    }

    pub fn describe(&self, var: u32) -> Option<EncodingVar> {
        let (n, m) = (self.n_args, self.n_claims);
        let i = (var as usize).checked_sub(1)?;
        Some(if i < n {
            EncodingVar::Member(Side::E, ArgumentId(i))
        } else if i < 2 * n {
            EncodingVar::Member(Side::G, ArgumentId(i - n))
        } else if i < 2 * n + m {
            EncodingVar::Claim(Side::E, ClaimId(i - 2 * n))
        } else if i < 2 * n + 2 * m {
            EncodingVar::Claim(Side::G, ClaimId(i - 2 * n - m))
        } else if i < 2 * n + 3 * m {
            EncodingVar::Gain(ClaimId(i - 2 * n - 2 * m))
        } else {
            return None;
        })
    }

    fn lit(&self, v: EncodingVar, positive: bool) -> Literal {
        Literal::new(self.var(v), positive)
    }

    /// Reads `E` and `G` off a model indexed by `var - 1`.
    pub fn decode(&self, model: &[bool]) -> Witness {
        let side = |s| {
            Extension::from_ids(
                self.n_args,
                (0..self.n_args)
                    .map(ArgumentId)
                    .filter(|&a| model[self.var(EncodingVar::Member(s, a)) as usize - 1]),
            )
        };
        Witness {
            smaller: side(Side::E),
            larger: side(Side::G),
        }
    }
}

/// Builds the witness encoding for `caf`.
pub fn encode_nonconcurrence(caf: &Caf) -> WitnessEncoding {
    let mut enc = WitnessEncoding {
        n_args: caf.n_args(),
        n_claims: caf.n_claims(),
        clauses: Vec::new(),
    };
    let af = caf.af();
    let mut clauses = Vec::new();

    for side in [Side::E, Side::G] {
        let m = |a: ArgumentId, pos| enc.lit(EncodingVar::Member(side, a), pos);

        for (a, b) in af.attacks() {
            if a == b {
                clauses.push(vec![m(a, false)]);
            } else {
                clauses.push(vec![m(a, false), m(b, false)]);
            }
        }

        for a in af.arguments().filter(|&a| !af.is_self_attacking(a)) {
            let mut c = vec![m(a, true)];
            c.extend(
                af.conflict_neighbors(a)
                    .iter()
                    .map(|b| m(ArgumentId(b), true)),
            );
            clauses.push(c);
        }

        for k in (0..caf.n_claims()).map(ClaimId) {
            let claim = enc.lit(EncodingVar::Claim(side, k), true);
            let holders: Vec<ArgumentId> = af.arguments().filter(|&a| caf.claim(a) == k).collect();
            let mut back = vec![!claim];
            for &a in &holders {
                clauses.push(vec![m(a, false), claim]);
                back.push(m(a, true));
            }
            clauses.push(back);
        }
    }

    let mut some_gain = Vec::with_capacity(caf.n_claims());
    for k in (0..caf.n_claims()).map(ClaimId) {
        let ce = enc.lit(EncodingVar::Claim(Side::E, k), true);
        let cg = enc.lit(EncodingVar::Claim(Side::G, k), true);
        let gain = enc.lit(EncodingVar::Gain(k), true);
        clauses.push(vec![!ce, cg]);
        clauses.push(vec![!gain, cg]);
        clauses.push(vec![!gain, !ce]);
        clauses.push(vec![gain, !cg, ce]);
        some_gain.push(gain);
    }
    clauses.push(some_gain);

    enc.clauses = clauses;
    enc
}

/// Runs the built-in solver. Returns a model indexed by `var - 1`.
pub fn solve_encoding(enc: &WitnessEncoding) -> Option<Vec<bool>> {
    solve_clauses(enc.n_vars(), enc.clauses())
}

/// Decides concurrence through the witness encoding. A decoded witness is
/// re-verified against the semantic predicates before being returned.
pub fn is_concurrent_sat(caf: &Caf) -> Result<ConcurrenceVerdict> {
    let enc = encode_nonconcurrence(caf);
    match solve_encoding(&enc) {
        None => Ok(ConcurrenceVerdict::Concurrent),
        Some(model) => {
            let witness = enc.decode(&model);
            verify_witness(caf, &witness)
                .map_err(|e| Error::Internal(format!("decoded witness rejected: {e}")))?;
            Ok(ConcurrenceVerdict::NotConcurrent(witness))
        }
    }
}

/// DIMACS text preceded by `c var <index> <role> <name>` lines, one per
/// variable. Roles are `inE`/`inG` (argument membership), `clE`/`clG`
/// (claim membership) and `gain` (claim in `cl(G)` but not `cl(E)`). For a
/// CAF without claims the only clause is the empty strictness clause, which
/// is emitted as a bare `0` line.
pub fn export_encoding_dimacs(enc: &WitnessEncoding, caf: &Caf) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "c non-concurrence witness encoding");
    for v in 1..=enc.n_vars() as u32 {
        let (role, name) = match enc.describe(v).expect("variable in range") {
            EncodingVar::Member(s, a) => (format!("in{}", s.tag()), caf.af().name(a)),
            EncodingVar::Claim(s, k) => (format!("cl{}", s.tag()), caf.claim_label(k)),
            EncodingVar::Gain(k) => ("gain".to_string(), caf.claim_label(k)),
        };
        let _ = writeln!(out, "c var {v} {role} {name}");
    }
    let _ = writeln!(out, "p cnf {} {}", enc.n_vars(), enc.clauses().len());
    write_clauses(&mut out, enc.clauses());
    out
}
