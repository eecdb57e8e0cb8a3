//! Node and wall-clock budgets shared by the exhaustive searches.
//!
//! Every search takes a `&mut Meter`. A search that runs out of budget
//! returns [`Error::Inconclusive`]; it never reports absence.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub timeout: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        timeout: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            timeout: None,
        }
    }

    pub fn meter(self) -> Meter {
        Meter::new(self)
    }
}

#[derive(Debug, Clone)]
pub struct Meter {
    budget: Budget,
    nodes: u64,
    started: Instant,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            budget,
            nodes: 0,
            started: Instant::now(),
        }
    }

    pub fn unlimited() -> Self {
        Meter::new(Budget::UNLIMITED)
    }

    /// Count one search node.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                return Err(Error::Inconclusive { nodes: self.nodes });
            }
        }
        if let Some(limit) = self.budget.timeout {
            if self.nodes.is_multiple_of(4096) && self.started.elapsed() > limit {
                return Err(Error::Inconclusive { nodes: self.nodes });
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }
}

impl Default for Meter {
    fn default() -> Self {
        Meter::unlimited()
    }
}
