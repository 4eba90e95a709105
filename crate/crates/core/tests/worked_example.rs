//! The worked reduction instance: clauses {x1,x3,x4}, {¬x3,¬x4,¬x2},
//! {¬x1,¬x3,x2}.

mod common;

use caf_core::cnf::{parse_dimacs, Assignment};
use caf_core::encoding::{
    encode_nonconcurrence, export_encoding_dimacs, is_concurrent_sat, solve_encoding,
};
use caf_core::io::{emit_caf, parse_caf};
use caf_core::reduction::{reduce_unsat, ReductionArtifact};
use caf_core::semantics::{
    claim_level_naive, inherited_naive, is_concurrent_brute, is_conflict_free, verify_witness,
};
use caf_core::{Caf, Extension, Limits};

use common::*;

const WORKED: &str = "p cnf 4 3\n1 3 4 0\n-3 -4 -2 0\n-1 -3 2 0\n";

fn artifact() -> ReductionArtifact {
    reduce_unsat(&parse_dimacs(WORKED).unwrap()).unwrap()
}

fn ext(caf: &Caf, names: &[&str]) -> Extension {
    Extension::from_ids(
        caf.n_args(),
        names.iter().map(|n| caf.af().id_of(n).unwrap()),
    )
}

#[test]
fn conflict_freeness_examples() {
    let art = artifact();
    let caf = art.caf();
    assert!(!is_conflict_free(caf.af(), &ext(caf, &["x1", "nx1"])));
    assert!(is_conflict_free(
        caf.af(),
        &ext(caf, &["a1", "a2", "x1", "x2", "x3", "nx4"])
    ));
}

#[test]
fn liftings_separate_model_claim_sets() {
    let art = artifact();
    let caf = art.caf();
    let l = Limits::default();
    let inherited = labels(caf, &inherited_naive(caf, &l).unwrap());
    let level = labels(caf, &claim_level_naive(caf, &l).unwrap());
    let with_phi = set(&["a", "phi", "x1", "x2", "x3", "nx4"]);
    let without = set(&["a", "x1", "x2", "x3", "nx4"]);
    assert!(inherited.contains(&with_phi));
    assert!(inherited.contains(&without));
    assert!(level.contains(&with_phi));
    assert!(!level.contains(&without));
    assert_eq!(level, claim_level(caf));
    assert_eq!(inherited, common::inherited(caf));
}

#[test]
fn both_engines_find_verified_witnesses() {
    let art = artifact();
    let caf = art.caf();
    let brute = is_concurrent_brute(caf, &Limits::default()).unwrap();
    let sat = is_concurrent_sat(caf).unwrap();
    for v in [brute, sat] {
        let w = v.witness().expect("not concurrent");
        verify_witness(caf, w).unwrap();
        assert!(witness_ok(caf, &w.smaller, &w.larger));
    }
}

#[test]
fn encoding_and_export_agree() {
    let art = artifact();
    let caf = art.caf();
    let enc = encode_nonconcurrence(caf);
    let model = solve_encoding(&enc).expect("satisfiable");
    let w = enc.decode(&model);
    assert!(witness_ok(caf, &w.smaller, &w.larger));

    let exported = parse_dimacs(&export_encoding_dimacs(&enc, caf)).unwrap();
    assert_eq!(exported.n_vars() as usize, enc.n_vars());
    assert_eq!(exported.n_clauses(), enc.clauses().len());
    assert!(Assignment::from_values(model).satisfies(&exported));
}

#[test]
fn minimal_caf_export_parses() {
    let caf =
        parse_caf("arg a1\narg a2\narg phi\nclaim a1 a\nclaim a2 a\nclaim phi phi\natt phi a2\n")
            .unwrap();
    let enc = encode_nonconcurrence(&caf);
    let parsed = parse_dimacs(&export_encoding_dimacs(&enc, &caf)).unwrap();
    assert_eq!(parsed.clauses(), enc.clauses());
}

#[test]
fn document_round_trip_is_fixpoint() {
    let caf = artifact().into_caf();
    let first = emit_caf(&caf);
    let reparsed = parse_caf(&first).unwrap();
    assert_eq!(reparsed, caf);
    assert_eq!(emit_caf(&reparsed), first);
    assert!(first.starts_with("arg x1\narg nx1\n"));
    assert!(first.contains("claim a2 a\n"));
    assert!(first.ends_with("att phi a2\n"));
}
