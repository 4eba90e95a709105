//! Randomized cross-check of the semantics, both engines and the subset
//! reference.

use rayon::prelude::*;

use crate::encoding::is_concurrent_sat;
use crate::io::emit_caf;
use crate::model::Caf;
use crate::oracle;
use crate::random::{instance_rng, random_caf};
use crate::semantics::{
    claim_level_naive, inherited_naive, is_concurrent_brute, is_incomparable, naive_extensions,
    verify_witness,
};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: u64,
    pub max_args: usize,
    pub max_claims: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            count: 100,
            max_args: 10,
            max_claims: 6,
        }
    }
}

impl FuzzConfig {
    /// The `index`-th instance of this run.
    pub fn instance(&self, index: u64) -> Caf {
        random_caf(
            &mut instance_rng(self.seed, index),
            self.max_args,
            self.max_claims,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzFailure {
    pub index: u64,
    pub invariant: &'static str,
    pub detail: String,
    /// The offending instance in CAF text format.
    pub document: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub instances: u64,
    pub concurrent: u64,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of [`check_instance`] on success: whether the CAF is concurrent.
pub type InstanceResult = Result<bool, (&'static str, String)>;

/// Checks every cross-module invariant on one CAF:
///
/// * naive enumeration matches the subset reference;
/// * claim-level naive is included in inherited naive;
/// * inherited naive is an antichain iff it equals claim-level naive, the
///   latter computed by the subset reference;
/// * claim-level naive matches the subset reference;
/// * brute and SAT engines agree and their witnesses verify.
pub fn check_instance(caf: &Caf, limits: &Limits) -> InstanceResult {
    let fail = |name: &'static str| move |e: crate::Error| (name, e.to_string());
    let naive = naive_extensions(caf.af(), limits).map_err(fail("enumeration"))?;
    let reference = oracle::naive_by_subsets(caf).map_err(fail("reference"))?;
    if naive.extensions() != reference.as_slice() {
        return Err((
            "naive-matches-reference",
            format!(
                "enumerated {} extensions, reference {}",
                naive.len(),
                reference.len()
            ),
        ));
    }

    let inherited = inherited_naive(caf, limits).map_err(fail("enumeration"))?;
    let claim_level = claim_level_naive(caf, limits).map_err(fail("enumeration"))?;
    if !claim_level.is_subfamily_of(&inherited) {
        return Err((
            "inclusion",
            format!("{claim_level:?} not within {inherited:?}"),
        ));
    }

    let reference_level = oracle::claim_level_by_subsets(caf).map_err(fail("reference"))?;
    if claim_level != reference_level {
        return Err((
            "claim-level-matches-reference",
            format!("{claim_level:?} vs {reference_level:?}"),
        ));
    }
    let antichain = is_incomparable(&inherited).is_incomparable();
    if antichain != (inherited == reference_level) {
        return Err((
            "incomparability-equivalence",
            format!(
                "antichain={antichain}, families equal={}",
                inherited == reference_level
            ),
        ));
    }

    let brute = is_concurrent_brute(caf, limits).map_err(fail("brute-engine"))?;
    let sat = is_concurrent_sat(caf).map_err(fail("sat-engine"))?;
    if brute.is_concurrent() != sat.is_concurrent() {
        return Err((
            "engine-agreement",
            format!(
                "brute says {}, sat says {}",
                brute.is_concurrent(),
                sat.is_concurrent()
            ),
        ));
    }
    if brute.is_concurrent() != antichain {
        return Err(("brute-matches-antichain", format!("antichain={antichain}")));
    }
    for verdict in [&brute, &sat] {
        if let Some(w) = verdict.witness() {
            verify_witness(caf, w).map_err(|e| ("witness-verifies", e))?;
        }
    }
    Ok(brute.is_concurrent())
}

/// Runs instances `indices` of `config` in parallel. The report lists
/// failures by ascending index, so it does not depend on scheduling.
pub fn run_indices(
    config: &FuzzConfig,
    limits: &Limits,
    indices: impl IntoParallelIterator<Item = u64>,
) -> FuzzReport {
    let outcomes: Vec<(u64, InstanceResult, Caf)> = indices
        .into_par_iter()
        .map(|i| {
            let caf = config.instance(i);
            (i, check_instance(&caf, limits), caf)
        })
        .collect();
    let mut report = FuzzReport::default();
    for (index, outcome, caf) in outcomes {
        report.instances += 1;
        match outcome {
            Ok(true) => report.concurrent += 1,
            Ok(false) => {}
            Err((invariant, detail)) => report.failures.push(FuzzFailure {
                index,
                invariant,
                detail,
                document: emit_caf(&caf),
            }),
        }
    }
    report.failures.sort_by_key(|f| f.index);
    report
}

pub fn run_fuzz(config: &FuzzConfig, limits: &Limits) -> FuzzReport {
    run_indices(config, limits, 0..config.count)
}
