//! Reference semantics by subset enumeration.
//!
//! These functions walk all `2^n` argument sets and test each one directly
//! against the attack list. They share no code with the enumeration in
//! [`crate::semantics`] and exist to cross-check it.

use crate::model::{ArgumentId, Caf, Extension};
use crate::semantics::ClaimFamily;
use crate::{Error, Result};

/// Largest framework the subset walk accepts.
pub const MAX_ORACLE_ARGS: usize = 20;

fn subsets(caf: &Caf) -> Result<impl Iterator<Item = u32> + '_> {
    let n = caf.n_args();
    if n > MAX_ORACLE_ARGS {
        return Err(Error::Capacity {
            what: "oracle argument count",
            size: n,
            cap: MAX_ORACLE_ARGS,
        });
    }
    Ok(0u32..(1u32 << n))
}

fn conflict_free_mask(caf: &Caf, mask: u32) -> bool {
    caf.af()
        .attacks()
        .all(|(a, b)| mask >> a.0 & 1 == 0 || mask >> b.0 & 1 == 0)
}

fn to_extension(n: usize, mask: u32) -> Extension {
    Extension::from_ids(n, (0..n).filter(|i| mask >> i & 1 == 1).map(ArgumentId))
}

/// Every conflict-free set, as bitmasks.
pub fn conflict_free_masks(caf: &Caf) -> Result<Vec<u32>> {
    Ok(subsets(caf)?
        .filter(|&m| conflict_free_mask(caf, m))
        .collect())
}

/// Naive extensions: conflict-free sets with no conflict-free strict superset.
pub fn naive_by_subsets(caf: &Caf) -> Result<Vec<Extension>> {
    let cf = conflict_free_masks(caf)?;
    let mut out: Vec<Extension> = cf
        .iter()
        .filter(|&&m| !cf.iter().any(|&o| o != m && o & m == m))
        .map(|&m| to_extension(caf.n_args(), m))
        .collect();
    out.sort();
    Ok(out)
}

/// `{ cl(E) | E naive }`
pub fn inherited_by_subsets(caf: &Caf) -> Result<ClaimFamily> {
    Ok(naive_by_subsets(caf)?
        .iter()
        .map(|e| caf.claim_set(e))
        .collect())
}

/// Maximal elements of `cf_c = { cl(E) | E conflict-free }`.
pub fn claim_level_by_subsets(caf: &Caf) -> Result<ClaimFamily> {
    let n = caf.n_args();
    let cf_c: ClaimFamily = conflict_free_masks(caf)?
        .into_iter()
        .map(|m| caf.claim_set(&to_extension(n, m)))
        .collect();
    Ok(cf_c
        .iter()
        .filter(|s| !cf_c.iter().any(|t| s.is_strict_subset(t)))
        .cloned()
        .collect())
}
