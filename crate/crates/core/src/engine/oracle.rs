use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::cycles::find_hamiltonian_cycle;
use crate::error::Result;
use crate::graph::Graph;
use crate::matching::{enumerate_perfect_matchings, Matching};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PmhStats {
    pub matchings_tested: u64,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PmhVerdict {
    pub is_pmh: bool,
    /// True when the graph has no perfect matching at all.
    pub vacuous: bool,
    /// The first perfect matching (enumeration order) in no Hamiltonian
    /// cycle.
    pub witness: Option<Matching>,
    pub stats: PmhStats,
}

/// Exact PMH verdict: a forced Hamiltonian search for every perfect
/// matching, stopping at the first failure.
pub fn is_pmh(h: &Graph, meter: &mut Meter) -> Result<PmhVerdict> {
    let start = meter.nodes();
    let mut tested = 0;
    for m in enumerate_perfect_matchings(h) {
        tested += 1;
        if find_hamiltonian_cycle(h, m.edges(), meter)?.is_none() {
            let stats = PmhStats {
                matchings_tested: tested,
                nodes: meter.nodes() - start,
            };
            return Ok(PmhVerdict {
                is_pmh: false,
                vacuous: false,
                witness: Some(m),
                stats,
            });
        }
    }
    let stats = PmhStats {
        matchings_tested: tested,
        nodes: meter.nodes() - start,
    };
    Ok(PmhVerdict {
        is_pmh: true,
        vacuous: tested == 0,
        witness: None,
        stats,
    })
}

/// [`is_pmh`] on `threads` workers, each with its own copy of `budget`.
///
/// Matchings are handed out in enumeration order. The verdict and witness
/// agree with the sequential run; `matchings_tested` counts every search
/// that finished, so it can differ when the graph is not PMH.
pub fn is_pmh_parallel(h: &Graph, budget: Budget, threads: usize) -> Result<PmhVerdict> {
    let threads = threads.max(1);
    let source = Mutex::new(enumerate_perfect_matchings(h).enumerate());
    let failure: Mutex<Option<(usize, Matching)>> = Mutex::new(None);
    let error = Mutex::new(None);
    let stop = AtomicBool::new(false);
    let tested = AtomicU64::new(0);
    let nodes = AtomicU64::new(0);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| {
                let mut meter = Meter::new(budget);
                loop {
                    if stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let Some((i, m)) = source.lock().unwrap().next() else {
                        break;
                    };
                    if failure
                        .lock()
                        .unwrap()
                        .as_ref()
                        .is_some_and(|(j, _)| *j < i)
                    {
                        break;
                    }
                    let before = meter.nodes();
                    let outcome = find_hamiltonian_cycle(h, m.edges(), &mut meter);
                    nodes.fetch_add(meter.nodes() - before, Ordering::Relaxed);
                    match outcome {
                        Ok(Some(_)) => {
                            tested.fetch_add(1, Ordering::Relaxed);
                        }
                        Ok(None) => {
                            tested.fetch_add(1, Ordering::Relaxed);
                            let mut f = failure.lock().unwrap();
                            if f.as_ref().is_none_or(|(j, _)| i < *j) {
                                *f = Some((i, m));
                            }
                        }
                        Err(e) => {
                            error.lock().unwrap().get_or_insert(e);
                            stop.store(true, Ordering::Relaxed);
                        }
                    }
                }
            });
        }
    });
    if let Some(e) = error.into_inner().unwrap() {
        return Err(e);
    }
    let stats = PmhStats {
        matchings_tested: tested.into_inner(),
        nodes: nodes.into_inner(),
    };
    Ok(match failure.into_inner().unwrap() {
        Some((_, m)) => PmhVerdict {
            is_pmh: false,
            vacuous: false,
            witness: Some(m),
            stats,
        },
        None => PmhVerdict {
            is_pmh: true,
            vacuous: stats.matchings_tested == 0,
            witness: None,
            stats,
        },
    })
}
