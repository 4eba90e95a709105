//! From a CNF formula to a well-formed CAF that is concurrent exactly when
//! the formula is unsatisfiable.
//!
//! Arguments, in id order: `x1, nx1, …, xN, nxN` (one pair per variable,
//! occurring or not), `c1, …, cM` (one per clause), `phi`, `a1`, `a2`.
//! Attacks:
//!
//! * `x → c` when literal `x` occurs in clause `c`, `nx → c` for `¬x`;
//! * `x ↔ nx` for every variable;
//! * `c → phi` for every clause;
//! * `phi → a2`.
//!
//! Every argument carries its own name as claim, except `a1` and `a2`, which
//! share the claim `a`. Both attack nothing, so the result is well-formed.

use std::fmt;

use crate::cnf::{sat_oracle, Assignment, CnfFormula};
use crate::model::{ArgumentId, Caf, CafBuilder, Extension};
use crate::semantics::{is_concurrent_brute, is_naive, naive_extensions};
use crate::{Error, Limits, Result};

/// Where an argument of the reduction comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Positive(u32),
    Negative(u32),
    /// 0-based clause index.
    Clause(usize),
    Phi,
    A1,
    A2,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Positive(v) => write!(f, "x{v}"),
            Role::Negative(v) => write!(f, "nx{v}"),
            Role::Clause(i) => write!(f, "c{}", i + 1),
            Role::Phi => f.write_str("phi"),
            Role::A1 => f.write_str("a1"),
            Role::A2 => f.write_str("a2"),
        }
    }
}

impl Role {
    pub fn claim_label(&self) -> String {
        match self {
            Role::A1 | Role::A2 => "a".to_string(),
            other => other.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    caf: Caf,
    roles: Vec<Role>,
    n_vars: u32,
    n_clauses: usize,
}

impl ReductionArtifact {
    pub fn caf(&self) -> &Caf {
        &self.caf
    }

    pub fn into_caf(self) -> Caf {
        self.caf
    }

    pub fn role(&self, a: ArgumentId) -> Role {
        self.roles[a.0]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn argument(&self, role: Role) -> ArgumentId {
        let n = self.n_vars as usize;
        let m = self.n_clauses;
        ArgumentId(match role {
            Role::Positive(v) => 2 * (v as usize - 1),
            Role::Negative(v) => 2 * (v as usize - 1) + 1,
            Role::Clause(i) => 2 * n + i,
            Role::Phi => 2 * n + m,
            Role::A1 => 2 * n + m + 1,
            Role::A2 => 2 * n + m + 2,
        })
    }

    /// The literal arguments true under `model`.
    pub fn literal_arguments(&self, model: &Assignment) -> Vec<ArgumentId> {
        (1..=self.n_vars)
            .map(|v| {
                self.argument(if model.value(v) {
                    Role::Positive(v)
                } else {
                    Role::Negative(v)
                })
            })
            .collect()
    }

    /// For a model `M`: `(M ∪ {phi, a1}, M ∪ {a1, a2})`, with `M` read as
    /// its true literals.
    pub fn model_extensions(&self, model: &Assignment) -> (Extension, Extension) {
        let n = self.caf.n_args();
        let lits = self.literal_arguments(model);
        let with_phi = Extension::from_ids(
            n,
            lits.iter()
                .copied()
                .chain([self.argument(Role::Phi), self.argument(Role::A1)]),
        );
        let with_a2 = Extension::from_ids(
            n,
            lits.iter()
                .copied()
                .chain([self.argument(Role::A1), self.argument(Role::A2)]),
        );
        (with_phi, with_a2)
    }
}

/// Builds the reduction of `f`. Tautological clauses are rejected.
pub fn reduce_unsat(f: &CnfFormula) -> Result<ReductionArtifact> {
    if let Some(index) = f.first_tautological_clause() {
        return Err(Error::TautologicalClause { index });
    }
    let mut roles = Vec::new();
    for v in 1..=f.n_vars() {
        roles.push(Role::Positive(v));
        roles.push(Role::Negative(v));
    }
    roles.extend((0..f.n_clauses()).map(Role::Clause));
    roles.extend([Role::Phi, Role::A1, Role::A2]);

    let mut b = CafBuilder::new();
    for role in &roles {
        b.add_argument(&role.to_string(), &role.claim_label())?;
    }
    let n = f.n_vars() as usize;
    let lit_arg =
        |var: u32, positive: bool| ArgumentId(2 * (var as usize - 1) + usize::from(!positive));
    let phi = ArgumentId(2 * n + f.n_clauses());
    let a2 = ArgumentId(phi.0 + 2);

    for (i, clause) in f.clauses().iter().enumerate() {
        let c = ArgumentId(2 * n + i);
        for l in clause {
            b.add_attack(lit_arg(l.var(), l.is_positive()), c);
        }
        b.add_attack(c, phi);
    }
    for v in 1..=f.n_vars() {
        b.add_attack(lit_arg(v, true), lit_arg(v, false));
        b.add_attack(lit_arg(v, false), lit_arg(v, true));
    }
    b.add_attack(phi, a2);

    Ok(ReductionArtifact {
        caf: b.build()?,
        roles,
        n_vars: f.n_vars(),
        n_clauses: f.n_clauses(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub satisfiable: bool,
    pub concurrent: bool,
    pub checks: Vec<Check>,
}

impl ReductionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the construction against its correctness argument:
///
/// 1. the CAF is well-formed;
/// 2. `f` is satisfiable iff the CAF is not concurrent;
/// 3. for the oracle's model `M`, `M ∪ {phi, a1}` and `M ∪ {a1, a2}` are naive;
/// 4. `a1` is in every naive extension;
/// 5. every naive extension containing `phi` holds exactly one literal
///    argument per variable.
pub fn verify_reduction(
    art: &ReductionArtifact,
    f: &CnfFormula,
    limits: &Limits,
) -> Result<ReductionReport> {
    let caf = art.caf();
    let af = caf.af();
    let model = sat_oracle(f, limits.max_vars)?;
    let verdict = is_concurrent_brute(caf, limits)?;
    let naive = naive_extensions(af, limits)?;
    let mut checks = Vec::new();

    checks.push(match caf.well_formedness_violation() {
        None => Check {
            name: "well-formed",
            passed: true,
            detail: "arguments sharing a claim attack the same arguments".into(),
        },
        Some((a, b)) => Check {
            name: "well-formed",
            passed: false,
            detail: format!(
                "{} and {} share a claim but attack different arguments",
                af.name(a),
                af.name(b)
            ),
        },
    });

    let satisfiable = model.is_some();
    let concurrent = verdict.is_concurrent();
    checks.push(Check {
        name: "sat-iff-not-concurrent",
        passed: satisfiable != concurrent,
        detail: format!(
            "formula {}, framework {}",
            if satisfiable {
                "satisfiable"
            } else {
                "unsatisfiable"
            },
            if concurrent {
                "concurrent"
            } else {
                "not concurrent"
            }
        ),
    });

    checks.push(match &model {
        None => Check {
            name: "model-extensions-naive",
            passed: true,
            detail: "no model; nothing to check".into(),
        },
        Some(m) => {
            let (with_phi, with_a2) = art.model_extensions(m);
            let bad: Vec<String> = [&with_phi, &with_a2]
                .into_iter()
                .filter(|e| !is_naive(af, e))
                .map(|e| caf.format_extension(e))
                .collect();
            Check {
                name: "model-extensions-naive",
                passed: bad.is_empty(),
                detail: if bad.is_empty() {
                    format!(
                        "{} and {} are naive",
                        caf.format_extension(&with_phi),
                        caf.format_extension(&with_a2)
                    )
                } else {
                    format!("not naive: {}", bad.join(" "))
                },
            }
        }
    });

    let a1 = art.argument(Role::A1);
    let missing_a1: Vec<String> = naive
        .iter()
        .filter(|e| !e.contains(a1))
        .map(|e| caf.format_extension(e))
        .collect();
    checks.push(Check {
        name: "a1-in-every-naive",
        passed: missing_a1.is_empty(),
        detail: if missing_a1.is_empty() {
            format!("a1 in all {} naive extensions", naive.len())
        } else {
            format!("a1 missing from {}", missing_a1.join(" "))
        },
    });

    let phi = art.argument(Role::Phi);
    let mut with_phi = 0;
    let mut broken = Vec::new();
    for e in naive.iter().filter(|e| e.contains(phi)) {
        with_phi += 1;
        let exact = (1..=f.n_vars()).all(|v| {
            e.contains(art.argument(Role::Positive(v)))
                != e.contains(art.argument(Role::Negative(v)))
        });
        if !exact {
            broken.push(caf.format_extension(e));
        }
    }
    checks.push(Check {
        name: "phi-extensions-are-assignments",
        passed: broken.is_empty(),
        detail: if broken.is_empty() {
            format!("{with_phi} naive extensions contain phi, each picks one literal per variable")
        } else {
            format!("not an assignment: {}", broken.join(" "))
        },
    });

    Ok(ReductionReport {
        satisfiable,
        concurrent,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> CnfFormula {
        CnfFormula::from_dimacs_clauses(4, &[&[1, 3, 4], &[-3, -4, -2], &[-1, -3, 2]]).unwrap()
    }

    fn names(caf: &Caf, e: &Extension) -> String {
        caf.format_extension(e)
    }

    #[test]
    fn worked_shape() {
        let art = reduce_unsat(&worked()).unwrap();
        let caf = art.caf();
        assert_eq!(caf.n_args(), 14);
        assert_eq!(caf.af().n_attacks(), 21);
        assert!(caf.is_well_formed());

        let c1 = art.argument(Role::Clause(0));
        let c2 = art.argument(Role::Clause(1));
        assert_eq!(names(caf, &caf.attackers_of(c1).unwrap()), "{x1,x3,x4}");
        assert_eq!(names(caf, &caf.attackers_of(c2).unwrap()), "{nx2,nx3,nx4}");
        let phi = art.argument(Role::Phi);
        assert_eq!(names(caf, &caf.attacked_by(phi).unwrap()), "{a2}");
        let x1 = art.argument(Role::Positive(1));
        assert_eq!(names(caf, &caf.attacked_by(x1).unwrap()), "{nx1,c1}");
        let a1 = art.argument(Role::A1);
        assert!(caf.attackers_of(a1).unwrap().is_empty());
        assert!(caf.attacked_by(a1).unwrap().is_empty());
    }

    #[test]
    fn roles_and_claims() {
        let art = reduce_unsat(&worked()).unwrap();
        let caf = art.caf();
        for (i, role) in art.roles().iter().enumerate() {
            let a = ArgumentId(i);
            assert_eq!(art.argument(*role), a);
            assert_eq!(caf.af().name(a), role.to_string());
        }
        assert_eq!(caf.n_claims(), 13);
        assert_eq!(
            caf.claim(art.argument(Role::A1)),
            caf.claim(art.argument(Role::A2))
        );
        assert_eq!(caf.claim_label(caf.claim(art.argument(Role::A2))), "a");
    }

    #[test]
    fn no_clauses() {
        let f = CnfFormula::new(1, []).unwrap();
        let art = reduce_unsat(&f).unwrap();
        assert_eq!(art.caf().n_args(), 5);
        assert_eq!(art.caf().af().n_attacks(), 3);
        let listed: Vec<String> = art.roles().iter().map(Role::to_string).collect();
        assert_eq!(listed, ["x1", "nx1", "phi", "a1", "a2"]);
    }

    #[test]
    fn tautology_is_rejected_with_index() {
        let f = CnfFormula::from_dimacs_clauses(2, &[&[1], &[2, -2]]).unwrap();
        assert_eq!(
            reduce_unsat(&f),
            Err(Error::TautologicalClause { index: 1 })
        );
    }

    #[test]
    fn verify_worked() {
        let f = worked();
        let art = reduce_unsat(&f).unwrap();
        let report = verify_reduction(&art, &f, &Limits::default()).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert!(report.satisfiable);
        assert!(!report.concurrent);
        assert_eq!(report.checks.len(), 5);

        let m = Assignment::from_values(vec![true, true, true, false]);
        let (e, e2) = art.model_extensions(&m);
        assert_eq!(names(art.caf(), &e), "{x1,x2,x3,nx4,phi,a1}");
        assert_eq!(names(art.caf(), &e2), "{x1,x2,x3,nx4,a1,a2}");
        assert!(is_naive(art.caf().af(), &e));
        assert!(is_naive(art.caf().af(), &e2));
    }

    #[test]
    fn verify_unsat_branch() {
        let f = CnfFormula::from_dimacs_clauses(1, &[&[1], &[-1]]).unwrap();
        let art = reduce_unsat(&f).unwrap();
        let report = verify_reduction(&art, &f, &Limits::default()).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert!(!report.satisfiable);
        assert!(report.concurrent);
    }

    #[test]
    fn verify_single_unit() {
        let f = CnfFormula::from_dimacs_clauses(1, &[&[1]]).unwrap();
        let art = reduce_unsat(&f).unwrap();
        assert_eq!(art.caf().n_args(), 6);
        let report = verify_reduction(&art, &f, &Limits::default()).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert!(report.satisfiable);
        assert!(!report.concurrent);
    }

    #[test]
    fn verify_detects_tampering() {
        // the reduction of one formula checked against a different one
        let f = CnfFormula::from_dimacs_clauses(1, &[&[1], &[-1]]).unwrap();
        let art = reduce_unsat(&CnfFormula::from_dimacs_clauses(1, &[&[1]]).unwrap()).unwrap();
        let report = verify_reduction(&art, &f, &Limits::default()).unwrap();
        assert!(!report.all_passed());
    }
}
