//! Test-side reference implementations. Everything here works on plain
//! integer masks and the raw attack list, never on the library's enumerator,
//! encoder or solver.

#![allow(dead_code)]

use std::collections::BTreeSet;

use caf_core::cnf::CnfFormula;
use caf_core::{Caf, Extension};

pub fn attack_pairs(caf: &Caf) -> Vec<(usize, usize)> {
    caf.af().attacks().map(|(a, b)| (a.0, b.0)).collect()
}

pub fn mask_of(e: &Extension) -> u32 {
    e.members().map(|a| 1u32 << a.0).sum()
}

pub fn conflict_free(attacks: &[(usize, usize)], mask: u32) -> bool {
    attacks
        .iter()
        .all(|&(a, b)| mask >> a & 1 == 0 || mask >> b & 1 == 0)
}

/// Conflict-free with no conflict-free single-argument extension.
pub fn naive(n: usize, attacks: &[(usize, usize)], mask: u32) -> bool {
    conflict_free(attacks, mask)
        && (0..n)
            .filter(|i| mask >> i & 1 == 0)
            .all(|i| !conflict_free(attacks, mask | 1 << i))
}

pub fn claims_of(caf: &Caf, mask: u32) -> BTreeSet<String> {
    (0..caf.n_args())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| {
            caf.claim_label(caf.claim(caf_core::ArgumentId(i)))
                .to_string()
        })
        .collect()
}

pub type Family = BTreeSet<BTreeSet<String>>;

pub fn naive_masks(caf: &Caf) -> Vec<u32> {
    let n = caf.n_args();
    let att = attack_pairs(caf);
    (0u32..1 << n).filter(|&m| naive(n, &att, m)).collect()
}

pub fn inherited(caf: &Caf) -> Family {
    naive_masks(caf)
        .into_iter()
        .map(|m| claims_of(caf, m))
        .collect()
}

/// Maximal claim-sets among claim-sets of all conflict-free sets.
pub fn claim_level(caf: &Caf) -> Family {
    let att = attack_pairs(caf);
    let cf_c: Family = (0u32..1 << caf.n_args())
        .filter(|&m| conflict_free(&att, m))
        .map(|m| claims_of(caf, m))
        .collect();
    cf_c.iter()
        .filter(|s| !cf_c.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect()
}

pub fn is_antichain(fam: &Family) -> bool {
    fam.iter()
        .all(|s| !fam.iter().any(|t| t != s && s.is_subset(t)))
}

/// Library family converted to label sets.
pub fn labels(caf: &Caf, fam: &caf_core::semantics::ClaimFamily) -> Family {
    fam.iter()
        .map(|s| {
            s.members()
                .map(|c| caf.claim_label(c).to_string())
                .collect()
        })
        .collect()
}

pub fn satisfiable(f: &CnfFormula) -> bool {
    let n = f.n_vars();
    (0u64..1 << n).any(|m| {
        f.clauses().iter().all(|c| {
            c.iter()
                .any(|l| (m >> (l.var() - 1) & 1 == 1) == l.is_positive())
        })
    })
}

/// Both sides naive and claim-sets strictly nested, judged by the masks
/// above.
pub fn witness_ok(caf: &Caf, smaller: &Extension, larger: &Extension) -> bool {
    let att = attack_pairs(caf);
    let (s, l) = (mask_of(smaller), mask_of(larger));
    let (cs, cl) = (claims_of(caf, s), claims_of(caf, l));
    naive(caf.n_args(), &att, s) && naive(caf.n_args(), &att, l) && cs.is_subset(&cl) && cs != cl
}

pub fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}
