//! Argumentation frameworks, claim-augmented frameworks and the sets that
//! live on top of them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::bitset::Bitset;
use crate::{Error, Result};

/// Dense index of an argument within one framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(pub usize);

/// Interned claim label. Keys are handed out in order of first use by
/// ascending argument id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClaimId(pub usize);

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Names and claim labels: non-empty runs of `[A-Za-z0-9_]`.
pub fn is_valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A set of arguments.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Extension(Bitset);

impl Extension {
    pub fn empty(n_args: usize) -> Self {
        Extension(Bitset::new(n_args))
    }

    pub fn from_ids(n_args: usize, ids: impl IntoIterator<Item = ArgumentId>) -> Self {
        Extension(Bitset::from_indices(n_args, ids.into_iter().map(|a| a.0)))
    }

    pub fn from_bits(bits: Bitset) -> Self {
        Extension(bits)
    }

    pub fn bits(&self) -> &Bitset {
        &self.0
    }

    pub fn contains(&self, a: ArgumentId) -> bool {
        self.0.contains(a.0)
    }

    pub fn insert(&mut self, a: ArgumentId) {
        self.0.insert(a.0)
    }

    pub fn remove(&mut self, a: ArgumentId) {
        self.0.remove(a.0)
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = ArgumentId> + '_ {
        self.0.iter().map(ArgumentId)
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_strict_subset(&self, other: &Extension) -> bool {
        self.0.is_strict_subset(&other.0)
    }
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Extension{:?}", self.0)
    }
}

/// A set of claims, keyed by interned [`ClaimId`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClaimSet(Bitset);

impl ClaimSet {
    pub fn empty(n_claims: usize) -> Self {
        ClaimSet(Bitset::new(n_claims))
    }

    pub fn from_ids(n_claims: usize, ids: impl IntoIterator<Item = ClaimId>) -> Self {
        ClaimSet(Bitset::from_indices(n_claims, ids.into_iter().map(|c| c.0)))
    }

    pub fn bits(&self) -> &Bitset {
        &self.0
    }

    pub fn contains(&self, c: ClaimId) -> bool {
        self.0.contains(c.0)
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = ClaimId> + '_ {
        self.0.iter().map(ClaimId)
    }

    pub fn is_subset(&self, other: &ClaimSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_strict_subset(&self, other: &ClaimSet) -> bool {
        self.0.is_strict_subset(&other.0)
    }
}

impl fmt::Debug for ClaimSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClaimSet{:?}", self.0)
    }
}

/// An argumentation framework: named arguments and a deduplicated attack
/// relation, with adjacency kept as bitsets in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Af {
    names: Vec<String>,
    attacks: BTreeSet<(ArgumentId, ArgumentId)>,
    outgoing: Vec<Bitset>,
    incoming: Vec<Bitset>,
}

impl Af {
    pub fn new(
        names: Vec<String>,
        attacks: impl IntoIterator<Item = (ArgumentId, ArgumentId)>,
    ) -> Result<Self> {
        let n = names.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::Structural(format!("invalid argument name {name:?}")));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::Structural(format!(
                    "duplicate argument name {name:?}"
                )));
            }
        }
        let mut relation = BTreeSet::new();
        let mut outgoing = vec![Bitset::new(n); n];
        let mut incoming = vec![Bitset::new(n); n];
        for (a, b) in attacks {
            if a.0 >= n || b.0 >= n {
                return Err(Error::Structural(format!(
                    "attack ({}, {}) references an argument outside 0..{n}",
                    a.0, b.0
                )));
            }
            relation.insert((a, b));
            outgoing[a.0].insert(b.0);
            incoming[b.0].insert(a.0);
        }
        Ok(Af {
            names,
            attacks: relation,
            outgoing,
            incoming,
        })
    }

    pub fn n_args(&self) -> usize {
        self.names.len()
    }

    pub fn arguments(&self) -> impl Iterator<Item = ArgumentId> {
        (0..self.n_args()).map(ArgumentId)
    }

    pub fn name(&self, a: ArgumentId) -> &str {
        &self.names[a.0]
    }

    pub fn id_of(&self, name: &str) -> Option<ArgumentId> {
        self.names.iter().position(|n| n == name).map(ArgumentId)
    }

    /// Attacks in ascending `(attacker, target)` id order.
    pub fn attacks(&self) -> impl Iterator<Item = (ArgumentId, ArgumentId)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn n_attacks(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_arg(&self, a: ArgumentId, b: ArgumentId) -> bool {
        self.outgoing.get(a.0).is_some_and(|out| out.contains(b.0))
    }

    pub fn is_self_attacking(&self, a: ArgumentId) -> bool {
        self.attacks_arg(a, a)
    }

    fn check(&self, a: ArgumentId) -> Result<()> {
        if a.0 < self.n_args() {
            Ok(())
        } else {
            Err(Error::Structural(format!(
                "argument id {} outside 0..{}",
                a.0,
                self.n_args()
            )))
        }
    }

    /// `{ b | (b, a) ∈ R }`
    pub fn attackers_of(&self, a: ArgumentId) -> Result<Extension> {
        self.check(a)?;
        Ok(Extension::from_bits(self.incoming[a.0].clone()))
    }

    /// `{ b | (a, b) ∈ R }`
    pub fn attacked_by(&self, a: ArgumentId) -> Result<Extension> {
        self.check(a)?;
        Ok(Extension::from_bits(self.outgoing[a.0].clone()))
    }

    pub(crate) fn outgoing(&self, a: ArgumentId) -> &Bitset {
        &self.outgoing[a.0]
    }

    /// Arguments in conflict with `a` in either direction, `a` itself excluded.
    pub fn conflict_neighbors(&self, a: ArgumentId) -> Bitset {
        let mut n = self.outgoing[a.0].clone();
        n.union_with(&self.incoming[a.0]);
        n.remove(a.0);
        n
    }
}

/// A claim-augmented argumentation framework `(A, R, cl)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caf {
    af: Af,
    claim_of: Vec<ClaimId>,
    labels: Vec<String>,
}

impl Caf {
    /// Pairs `af` with one claim label per argument (indexed by id).
    pub fn new(af: Af, claims: Vec<String>) -> Result<Self> {
        if claims.len() != af.n_args() {
            return Err(Error::Structural(format!(
                "{} claims given for {} arguments",
                claims.len(),
                af.n_args()
            )));
        }
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, ClaimId> = HashMap::new();
        let mut claim_of = Vec::with_capacity(claims.len());
        for label in claims {
            if !is_valid_name(&label) {
                return Err(Error::Structural(format!("invalid claim label {label:?}")));
            }
            let id = *index.entry(label.clone()).or_insert_with(|| {
                labels.push(label);
                ClaimId(labels.len() - 1)
            });
            claim_of.push(id);
        }
        Ok(Caf {
            af,
            claim_of,
            labels,
        })
    }

    pub fn af(&self) -> &Af {
        &self.af
    }

    pub fn n_args(&self) -> usize {
        self.af.n_args()
    }

    pub fn n_claims(&self) -> usize {
        self.labels.len()
    }

    pub fn claim(&self, a: ArgumentId) -> ClaimId {
        self.claim_of[a.0]
    }

    pub fn claim_label(&self, c: ClaimId) -> &str {
        &self.labels[c.0]
    }

    pub fn claim_id(&self, label: &str) -> Option<ClaimId> {
        self.labels.iter().position(|l| l == label).map(ClaimId)
    }

    pub fn attackers_of(&self, a: ArgumentId) -> Result<Extension> {
        self.af.attackers_of(a)
    }

    pub fn attacked_by(&self, a: ArgumentId) -> Result<Extension> {
        self.af.attacked_by(a)
    }

    /// `cl(S) = { cl(a) | a ∈ S }`
    pub fn claim_set(&self, s: &Extension) -> ClaimSet {
        ClaimSet::from_ids(self.n_claims(), s.members().map(|a| self.claim(a)))
    }

    pub fn has_injective_claims(&self) -> bool {
        self.n_claims() == self.n_args()
    }

    /// First pair `(a, b)`, `a < b`, sharing a claim but attacking different
    /// arguments.
    pub fn well_formedness_violation(&self) -> Option<(ArgumentId, ArgumentId)> {
        let mut representative: Vec<Option<ArgumentId>> = vec![None; self.n_claims()];
        for a in self.af.arguments() {
            let slot = &mut representative[self.claim(a).0];
            match slot {
                None => *slot = Some(a),
                Some(rep) => {
                    if self.af.outgoing(*rep) != self.af.outgoing(a) {
                        return Some((*rep, a));
                    }
                }
            }
        }
        None
    }

    pub fn is_well_formed(&self) -> bool {
        self.well_formedness_violation().is_none()
    }

    /// `{a1,a2}` using argument names, ascending id order.
    pub fn format_extension(&self, e: &Extension) -> String {
        let names: Vec<&str> = e.members().map(|a| self.af.name(a)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// `{a,phi}` using claim labels, ascending key order.
    pub fn format_claim_set(&self, s: &ClaimSet) -> String {
        let labels: Vec<&str> = s.members().map(|c| self.claim_label(c)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

/// Incremental construction of a [`Caf`] by name.
#[derive(Debug, Default, Clone)]
pub struct CafBuilder {
    names: Vec<String>,
    claims: Vec<String>,
    index: HashMap<String, ArgumentId>,
    attacks: Vec<(ArgumentId, ArgumentId)>,
}

impl CafBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_argument(&mut self, name: &str, claim: &str) -> Result<ArgumentId> {
        if self.index.contains_key(name) {
            return Err(Error::Structural(format!(
                "duplicate argument name {name:?}"
            )));
        }
        let id = ArgumentId(self.names.len());
        self.names.push(name.to_owned());
        self.claims.push(claim.to_owned());
        self.index.insert(name.to_owned(), id);
        Ok(id)
    }

    pub fn id_of(&self, name: &str) -> Option<ArgumentId> {
        self.index.get(name).copied()
    }

    pub fn add_attack(&mut self, from: ArgumentId, to: ArgumentId) -> &mut Self {
        self.attacks.push((from, to));
        self
    }

    pub fn add_attack_by_name(&mut self, from: &str, to: &str) -> Result<&mut Self> {
        let lookup = |n: &str| {
            self.id_of(n)
                .ok_or_else(|| Error::Structural(format!("unknown argument {n:?}")))
        };
        let (a, b) = (lookup(from)?, lookup(to)?);
        Ok(self.add_attack(a, b))
    }

    pub fn build(self) -> Result<Caf> {
        let af = Af::new(self.names, self.attacks)?;
        Caf::new(af, self.claims)
    }
}
