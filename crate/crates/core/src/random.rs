//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`), seeded with
//! `seed_from_u64(seed)` and switched to stream `index` for the `index`-th
//! instance. ChaCha8 output is fixed by its definition, so a `(seed,
//! index)` pair names the same instance on every platform, and instances can
//! be generated in any order or in parallel.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfFormula, Literal};
use crate::model::{ArgumentId, Caf, CafBuilder};

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A CAF with up to `max_args` arguments `a0, a1, …` and up to `max_claims`
/// distinct claims `k0, k1, …`. The attack density is drawn per instance from
/// `[0, 0.6)`; self-attacks appear at a quarter of that rate.
pub fn random_caf(rng: &mut impl Rng, max_args: usize, max_claims: usize) -> Caf {
    let n = rng.random_range(0..=max_args);
    let n_claims = rng.random_range(1..=max_claims.max(1));
    let density: f64 = rng.random_range(0.0..0.6);
    let mut b = CafBuilder::new();
    for i in 0..n {
        let k = rng.random_range(0..n_claims);
        b.add_argument(&format!("a{i}"), &format!("k{k}"))
            .expect("generated names are unique");
    }
    for i in 0..n {
        for j in 0..n {
            let p = if i == j { density / 4.0 } else { density };
            if rng.random_bool(p) {
                b.add_attack(ArgumentId(i), ArgumentId(j));
            }
        }
    }
    b.build().expect("generated CAF is valid")
}

/// A formula with `1..=max_vars` variables and `0..=max_clauses` clauses of
/// width 1 to 3 over distinct variables, hence never tautological.
pub fn random_cnf(rng: &mut impl Rng, max_vars: u32, max_clauses: usize) -> CnfFormula {
    let n_vars = rng.random_range(1..=max_vars.max(1));
    let n_clauses = rng.random_range(0..=max_clauses);
    let clauses: Vec<Vec<Literal>> = (0..n_clauses)
        .map(|_| {
            let width = rng.random_range(1..=n_vars.min(3)) as usize;
            sample(rng, n_vars as usize, width)
                .into_iter()
                .map(|v| Literal::new(v as u32 + 1, rng.random_bool(0.5)))
                .collect()
        })
        .collect();
    CnfFormula::new(n_vars, clauses).expect("generated formula is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::emit_caf;

    #[test]
    fn same_seed_and_index_same_instance() {
        let a = random_caf(&mut instance_rng(7, 3), 10, 6);
        let b = random_caf(&mut instance_rng(7, 3), 10, 6);
        assert_eq!(emit_caf(&a), emit_caf(&b));
        let f = random_cnf(&mut instance_rng(7, 3), 4, 6);
        let g = random_cnf(&mut instance_rng(7, 3), 4, 6);
        assert_eq!(f, g);
    }

    #[test]
    fn respects_bounds() {
        for i in 0..200 {
            let caf = random_caf(&mut instance_rng(1, i), 10, 6);
            assert!(caf.n_args() <= 10);
            assert!(caf.n_claims() <= 6);
            let f = random_cnf(&mut instance_rng(1, i), 4, 6);
            assert!(f.n_vars() <= 4 && f.n_clauses() <= 6);
            assert!(!f.has_tautological_clause());
        }
    }
}
