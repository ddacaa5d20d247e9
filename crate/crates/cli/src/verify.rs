//! Exhaustive closed-form vs oracle sweep over sorted triples.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use cidim_core::{dimension, dimension_oracle, ExponentTriple};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PERMUTATION_SEED: u64 = 0x6369_6469_6d5f_7633;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub triple: ExponentTriple,
    pub formula: u64,
    pub oracle: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// Sorted representatives visited.
    pub checked: u64,
    /// The lexicographically smallest failing representative, if any.
    pub mismatch: Option<Mismatch>,
}

/// Number of triples `1 <= d1 <= d2 <= d3 <= max`.
#[cfg(test)]
fn sorted_triple_count(max: u64) -> u64 {
    max * (max + 1) * (max + 2) / 6
}

/// The ordering checked alongside a sorted representative. Depends only on
/// the triple, so the sweep is reproducible for any job count.
pub fn companion_permutation(t: ExponentTriple) -> ExponentTriple {
    let key = PERMUTATION_SEED ^ (t.d1 << 42) ^ (t.d2 << 21) ^ t.d3;
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    t.permutations()[rng.gen_range(0..6)]
}

/// Compares both routes on `t` and on its companion permutation.
pub fn check_triple(t: ExponentTriple) -> Option<Mismatch> {
    let formula = dimension(t).dimension;
    let oracle = dimension_oracle(t);
    if formula != oracle {
        return Some(Mismatch {
            triple: t,
            formula,
            oracle,
        });
    }
    let p = companion_permutation(t);
    let pf = dimension(p).dimension;
    let po = dimension_oracle(p);
    (pf != formula || po != oracle).then_some(Mismatch {
        triple: p,
        formula: pf,
        oracle: po,
    })
}

/// Sweeps the slab of sorted triples with first entry `d1`, in
/// lexicographic order, stopping at the first failure.
fn sweep_slab<F>(d1: u64, max: u64, check: &F) -> Report
where
    F: Fn(ExponentTriple) -> Option<Mismatch>,
{
    let mut checked = 0;
    for d2 in d1..=max {
        for d3 in d2..=max {
            checked += 1;
            if let Some(m) = check(ExponentTriple::new(d1, d2, d3)) {
                return Report {
                    checked,
                    mismatch: Some(m),
                };
            }
        }
    }
    Report {
        checked,
        mismatch: None,
    }
}

/// Runs `check` over all sorted triples up to `max` on `jobs` threads.
///
/// Work is split into slabs of fixed `d1`, each a contiguous run of the
/// lexicographic order; slab results are merged in order, so the verdict
/// and the reported mismatch do not depend on `jobs`. The count covers
/// every triple up to and including the first mismatch.
pub fn run_with<F>(max: u64, jobs: usize, check: F) -> Report
where
    F: Fn(ExponentTriple) -> Option<Mismatch> + Sync,
{
    let slabs: Vec<u64> = (1..=max).collect();
    let results: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; slabs.len()]);
    let next = AtomicU64::new(0);
    let jobs = jobs.max(1);

    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed) as usize;
                let Some(&d1) = slabs.get(i) else { break };
                let r = sweep_slab(d1, max, &check);
                results.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });

    let mut checked = 0;
    for r in results.into_inner().expect("worker panicked") {
        let r = r.expect("every slab visited");
        checked += r.checked;
        if r.mismatch.is_some() {
            return Report {
                checked,
                mismatch: r.mismatch,
            };
        }
    }
    Report {
        checked,
        mismatch: None,
    }
}

pub fn run(max: u64, jobs: usize) -> Report {
    run_with(max, jobs, check_triple)
}
