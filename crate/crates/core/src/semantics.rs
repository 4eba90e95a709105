//! Conflict-free and naive semantics, their two claim-level liftings, and the
//! brute-force concurrence decision.
//!
//! Concurrence of inherited and claim-level naive semantics holds exactly when
//! the inherited family is an antichain under `⊆`, so the brute engine
//! enumerates all naive extensions, lifts them to claim-sets and looks for a
//! strictly nested pair.

use std::collections::BTreeSet;

use crate::bitset::Bitset;
use crate::model::{Af, Caf, ClaimSet, Extension};
use crate::{Error, Limits, Result};

/// Naive extensions in ascending [`Extension`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveFamily {
    extensions: Vec<Extension>,
}

impl NaiveFamily {
    pub fn extensions(&self) -> &[Extension] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Extension> {
        self.extensions.iter()
    }
}

/// A set of claim-sets, deduplicated and kept in ascending order. Equality
/// is set-of-sets equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClaimFamily {
    sets: Vec<ClaimSet>,
}

impl ClaimFamily {
    pub fn sets(&self) -> &[ClaimSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &ClaimSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &ClaimFamily) -> bool {
        self.sets.iter().all(|s| other.contains(s))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ClaimSet> {
        self.sets.iter()
    }
}

impl FromIterator<ClaimSet> for ClaimFamily {
    fn from_iter<I: IntoIterator<Item = ClaimSet>>(iter: I) -> Self {
        let sets: BTreeSet<ClaimSet> = iter.into_iter().collect();
        ClaimFamily {
            sets: sets.into_iter().collect(),
        }
    }
}

/// No attack between two members of `s`, self-attacks included.
pub fn is_conflict_free(af: &Af, s: &Extension) -> bool {
    s.members().all(|a| !af.outgoing(a).intersects(s.bits()))
}

/// Every argument outside `s` that could be added conflicts with `s`.
/// Assumes `s` is conflict-free.
pub fn is_maximal_conflict_free(af: &Af, s: &Extension) -> bool {
    af.arguments().all(|a| {
        s.contains(a) || af.is_self_attacking(a) || af.conflict_neighbors(a).intersects(s.bits())
    })
}

pub fn is_naive(af: &Af, s: &Extension) -> bool {
    s.bits().universe() == af.n_args() && is_conflict_free(af, s) && is_maximal_conflict_free(af, s)
}

fn check_cap(af: &Af, limits: &Limits) -> Result<()> {
    if af.n_args() > limits.max_args {
        return Err(Error::Capacity {
            what: "framework argument count",
            size: af.n_args(),
            cap: limits.max_args,
        });
    }
    Ok(())
}

/// All `⊆`-maximal conflict-free sets.
///
/// Self-attackers are dropped first; the remaining maximal conflict-free
/// sets are the maximal independent sets of the symmetrised conflict graph,
/// enumerated as maximal cliques of its complement by Bron–Kerbosch with
/// Tomita pivoting.
pub fn naive_extensions(af: &Af, limits: &Limits) -> Result<NaiveFamily> {
    check_cap(af, limits)?;
    let n = af.n_args();
    let candidates = Bitset::from_indices(
        n,
        af.arguments()
            .filter(|&a| !af.is_self_attacking(a))
            .map(|a| a.0),
    );
    let compatible: Vec<Bitset> = af
        .arguments()
        .map(|a| {
            let mut c = candidates.difference(&af.conflict_neighbors(a));
            c.remove(a.0);
            c
        })
        .collect();

    let mut found = Vec::new();
    let mut current = Bitset::new(n);
    bron_kerbosch(
        &compatible,
        &mut current,
        candidates,
        Bitset::new(n),
        &mut found,
    );
    found.sort();
    Ok(NaiveFamily {
        extensions: found.into_iter().map(Extension::from_bits).collect(),
    })
}

fn bron_kerbosch(
    adj: &[Bitset],
    current: &mut Bitset,
    mut candidates: Bitset,
    mut excluded: Bitset,
    out: &mut Vec<Bitset>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| (adj[u].intersection_count(&candidates), std::cmp::Reverse(u)))
        .expect("candidates is non-empty");
    let branch = candidates.difference(&adj[pivot]);
    for v in branch.iter() {
        current.insert(v);
        bron_kerbosch(
            adj,
            current,
            candidates.intersection(&adj[v]),
            excluded.intersection(&adj[v]),
            out,
        );
        current.remove(v);
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// `na_c(F) = { cl(E) | E ∈ na(F) }`
pub fn inherited_naive(caf: &Caf, limits: &Limits) -> Result<ClaimFamily> {
    let naive = naive_extensions(caf.af(), limits)?;
    Ok(naive.iter().map(|e| caf.claim_set(e)).collect())
}

/// The `⊆`-maximal members of `{ cl(E) | E conflict-free }`.
///
/// Every conflict-free set lies inside some naive extension and `cl` is
/// monotone, so the maximal claim-sets of conflict-free sets are exactly the
/// maximal members of the inherited family.
pub fn claim_level_naive(caf: &Caf, limits: &Limits) -> Result<ClaimFamily> {
    Ok(maximal_members(&inherited_naive(caf, limits)?))
}

/// Members of `fam` not strictly contained in another member.
pub fn maximal_members(fam: &ClaimFamily) -> ClaimFamily {
    fam.iter()
        .filter(|s| !fam.iter().any(|t| s.is_strict_subset(t)))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Incomparability {
    Incomparable,
    /// `smaller ⊊ larger`, both members of the family.
    Nested {
        smaller: ClaimSet,
        larger: ClaimSet,
    },
}

impl Incomparability {
    pub fn is_incomparable(&self) -> bool {
        matches!(self, Incomparability::Incomparable)
    }
}

/// Looks for `S ⊊ S'` in `fam`, scanning ordered pairs in family order.
pub fn is_incomparable(fam: &ClaimFamily) -> Incomparability {
    for s in fam.iter() {
        for t in fam.iter() {
            if s.is_strict_subset(t) {
                return Incomparability::Nested {
                    smaller: s.clone(),
                    larger: t.clone(),
                };
            }
        }
    }
    Incomparability::Incomparable
}

/// Two naive extensions with `cl(smaller) ⊊ cl(larger)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub smaller: Extension,
    pub larger: Extension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConcurrenceVerdict {
    Concurrent,
    NotConcurrent(Witness),
}

impl ConcurrenceVerdict {
    pub fn is_concurrent(&self) -> bool {
        matches!(self, ConcurrenceVerdict::Concurrent)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            ConcurrenceVerdict::Concurrent => None,
            ConcurrenceVerdict::NotConcurrent(w) => Some(w),
        }
    }
}

/// Checks both sides are naive and their claim-sets strictly nested.
pub fn verify_witness(caf: &Caf, w: &Witness) -> std::result::Result<(), String> {
    for (side, e) in [("smaller", &w.smaller), ("larger", &w.larger)] {
        if !is_naive(caf.af(), e) {
            return Err(format!(
                "{side} side {} is not a naive extension",
                caf.format_extension(e)
            ));
        }
    }
    let (cs, cl) = (caf.claim_set(&w.smaller), caf.claim_set(&w.larger));
    if !cs.is_strict_subset(&cl) {
        return Err(format!(
            "claim-sets {} and {} are not strictly nested",
            caf.format_claim_set(&cs),
            caf.format_claim_set(&cl)
        ));
    }
    Ok(())
}

/// Decides concurrence by enumerating `na(F)`.
pub fn is_concurrent_brute(caf: &Caf, limits: &Limits) -> Result<ConcurrenceVerdict> {
    let naive = naive_extensions(caf.af(), limits)?;
    let lifted: Vec<ClaimSet> = naive.iter().map(|e| caf.claim_set(e)).collect();
    let family: ClaimFamily = lifted.iter().cloned().collect();
    match is_incomparable(&family) {
        Incomparability::Incomparable => Ok(ConcurrenceVerdict::Concurrent),
        Incomparability::Nested { smaller, larger } => {
            let pick = |target: &ClaimSet| {
                let i = lifted
                    .iter()
                    .position(|s| s == target)
                    .expect("family member comes from some extension");
                naive.extensions()[i].clone()
            };
            Ok(ConcurrenceVerdict::NotConcurrent(Witness {
                smaller: pick(&smaller),
                larger: pick(&larger),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ArgumentId, CafBuilder, ClaimId};

    fn triangle() -> Caf {
        let mut b = CafBuilder::new();
        b.add_argument("a1", "a").unwrap();
        b.add_argument("a2", "a").unwrap();
        b.add_argument("phi", "phi").unwrap();
        b.add_attack_by_name("phi", "a2").unwrap();
        b.build().unwrap()
    }

    fn ext(n: usize, ids: &[usize]) -> Extension {
        Extension::from_ids(n, ids.iter().map(|&i| ArgumentId(i)))
    }

    fn claims(n: usize, ids: &[usize]) -> ClaimSet {
        ClaimSet::from_ids(n, ids.iter().map(|&i| ClaimId(i)))
    }

    #[test]
    fn conflict_freeness() {
        let caf = triangle();
        assert!(is_conflict_free(caf.af(), &ext(3, &[])));
        assert!(is_conflict_free(caf.af(), &ext(3, &[0, 1])));
        assert!(!is_conflict_free(caf.af(), &ext(3, &[1, 2])));

        let mut b = CafBuilder::new();
        let s = b.add_argument("s", "s").unwrap();
        b.add_attack(s, s);
        let caf = b.build().unwrap();
        assert!(!is_conflict_free(caf.af(), &ext(1, &[0])));
    }

    #[test]
    fn naive_of_minimal_caf() {
        let caf = triangle();
        let fam = naive_extensions(caf.af(), &Limits::default()).unwrap();
        assert_eq!(fam.extensions(), &[ext(3, &[0, 1]), ext(3, &[0, 2])]);
    }

    #[test]
    fn naive_degenerate_frameworks() {
        let empty = CafBuilder::new().build().unwrap();
        let fam = naive_extensions(empty.af(), &Limits::default()).unwrap();
        assert_eq!(fam.extensions(), &[ext(0, &[])]);

        let mut b = CafBuilder::new();
        let s = b.add_argument("s", "s").unwrap();
        b.add_attack(s, s);
        let caf = b.build().unwrap();
        let fam = naive_extensions(caf.af(), &Limits::default()).unwrap();
        assert_eq!(fam.extensions(), &[ext(1, &[])]);
    }

    #[test]
    fn cap_is_enforced() {
        let mut b = CafBuilder::new();
        for i in 0..5 {
            b.add_argument(&format!("a{i}"), "c").unwrap();
        }
        let caf = b.build().unwrap();
        let limits = Limits {
            max_args: 4,
            ..Limits::default()
        };
        assert!(matches!(
            naive_extensions(caf.af(), &limits),
            Err(Error::Capacity {
                size: 5,
                cap: 4,
                ..
            })
        ));
        assert!(is_concurrent_brute(&caf, &limits).is_err());
    }

    #[test]
    fn liftings_of_minimal_caf() {
        let caf = triangle();
        let l = Limits::default();
        let inherited = inherited_naive(&caf, &l).unwrap();
        assert_eq!(inherited.sets(), &[claims(2, &[0, 1]), claims(2, &[0])]);
        let level = claim_level_naive(&caf, &l).unwrap();
        assert_eq!(level.sets(), &[claims(2, &[0, 1])]);
        assert!(level.is_subfamily_of(&inherited));
    }

    #[test]
    fn incomparability() {
        let fam: ClaimFamily = [claims(2, &[0, 1]), claims(2, &[0])].into_iter().collect();
        assert_eq!(
            is_incomparable(&fam),
            Incomparability::Nested {
                smaller: claims(2, &[0]),
                larger: claims(2, &[0, 1]),
            }
        );
        assert!(is_incomparable(&ClaimFamily::default()).is_incomparable());
        let one: ClaimFamily = [claims(3, &[1])].into_iter().collect();
        assert!(is_incomparable(&one).is_incomparable());
        let singletons: ClaimFamily = (0..3).map(|i| claims(3, &[i])).collect();
        assert!(is_incomparable(&singletons).is_incomparable());
    }

    #[test]
    fn brute_verdict_on_minimal_caf() {
        let caf = triangle();
        let verdict = is_concurrent_brute(&caf, &Limits::default()).unwrap();
        let w = verdict.witness().expect("not concurrent");
        assert_eq!(w.smaller, ext(3, &[0, 1]));
        assert_eq!(w.larger, ext(3, &[0, 2]));
        verify_witness(&caf, w).unwrap();
    }

    #[test]
    fn witness_verification_rejects_bad_pairs() {
        let caf = triangle();
        let bad = Witness {
            smaller: ext(3, &[0]),
            larger: ext(3, &[0, 2]),
        };
        assert!(verify_witness(&caf, &bad).is_err());
        let flipped = Witness {
            smaller: ext(3, &[0, 2]),
            larger: ext(3, &[0, 1]),
        };
        assert!(verify_witness(&caf, &flipped).is_err());
    }

    #[test]
    fn injective_claims_are_concurrent() {
        let mut b = CafBuilder::new();
        for n in ["p", "q", "r", "s"] {
            b.add_argument(n, n).unwrap();
        }
        for (x, y) in [("p", "q"), ("q", "r"), ("r", "s"), ("s", "s")] {
            b.add_attack_by_name(x, y).unwrap();
        }
        let caf = b.build().unwrap();
        let l = Limits::default();
        assert!(is_concurrent_brute(&caf, &l).unwrap().is_concurrent());
        let naive = naive_extensions(caf.af(), &l).unwrap();
        assert_eq!(inherited_naive(&caf, &l).unwrap().len(), naive.len());
    }
}
