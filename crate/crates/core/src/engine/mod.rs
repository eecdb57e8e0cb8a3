//! Perfect-matching-Hamiltonian checks and the constructive extensions.
//!
//! A graph is PMH when every perfect matching lies in some Hamiltonian
//! cycle. [`is_pmh`] decides this by brute force. The `extend_*` functions
//! build such a cycle in `L(G)` directly from structure of the base graph
//! `G`, and every one of them checks its own output before returning it.

mod colour;
mod conditions;
mod dominating;
mod oracle;
mod trace;

pub use colour::{
    colouring_from_matching, count_pc_hamiltonian_cycles, extend_matching_bipartite,
    extend_matching_complete, extend_via_pc_cycle, find_pc_hamiltonian_cycle, stitch_clique_path,
    EdgeColouring,
};
pub use conditions::{haggkvist_condition, lasvergnas_condition};
pub use dominating::{extend_matching_subcubic, extend_via_dominating_cycle, kotzig_partition};
pub use oracle::{is_pmh, is_pmh_parallel, PmhStats, PmhVerdict};
pub use trace::extend_matching_arb_traceable;

use crate::cycles::CycleWalk;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;

/// Close `seq` in `host` and insist it is a Hamiltonian cycle through `m`.
pub(crate) fn certify(
    host: &Graph,
    seq: Vec<usize>,
    m: &Matching,
    what: &str,
) -> Result<CycleWalk> {
    let walk = CycleWalk::close(host, seq);
    if !walk.kind().hamiltonian {
        return Err(Error::Construction(format!(
            "{what} did not produce a Hamiltonian cycle"
        )));
    }
    if let Some(&(x, y)) = m.edges().iter().find(|&&(x, y)| !walk.contains_edge(x, y)) {
        return Err(Error::Construction(format!(
            "{what} dropped matching edge ({x}, {y})"
        )));
    }
    Ok(walk)
}
