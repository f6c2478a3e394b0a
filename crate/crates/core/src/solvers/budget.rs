use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Per-invocation search limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    /// Cap on search-tree nodes.
    pub node_limit: u64,
    /// Wall-clock cap, in seconds.
    pub time_limit_secs: f64,
}

impl Budget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Budget {
        Budget {
            node_limit,
            time_limit_secs: time_limit.as_secs_f64(),
        }
    }

    pub fn nodes(node_limit: u64) -> Budget {
        Budget {
            node_limit,
            ..Budget::default()
        }
    }

    pub fn unlimited() -> Budget {
        Budget {
            node_limit: u64::MAX,
            time_limit_secs: f64::INFINITY,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.node_limit > 0 && self.time_limit_secs > 0.0
    }

    pub fn time_limit(&self) -> Duration {
        if self.time_limit_secs.is_finite() {
            Duration::from_secs_f64(self.time_limit_secs)
        } else {
            Duration::MAX
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter::new(*self)
    }
}

impl Default for Budget {
    /// 10^7 search nodes or 10 seconds, whichever comes first.
    fn default() -> Budget {
        Budget {
            node_limit: 10_000_000,
            time_limit_secs: 10.0,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    /// The search was cut off before it could prove its answer. This is an
    /// "unknown", not a negative result.
    #[error("budget exhausted after {nodes} nodes in {elapsed_secs:.3}s (limit {budget:?})")]
    BudgetExhausted {
        nodes: u64,
        elapsed_secs: f64,
        budget: Budget,
    },
}

/// Counts search nodes against a [`Budget`].
pub(crate) struct Meter {
    budget: Budget,
    nodes: u64,
    start: Instant,
    time_limit: Duration,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Meter {
        Meter {
            budget,
            nodes: 0,
            start: Instant::now(),
            time_limit: budget.time_limit(),
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget.node_limit
            || (self.nodes & 0x3ff == 0 && self.start.elapsed() > self.time_limit)
        {
            return Err(self.exhausted());
        }
        Ok(())
    }

    fn exhausted(&self) -> SolveError {
        SolveError::BudgetExhausted {
            nodes: self.nodes,
            elapsed_secs: self.start.elapsed().as_secs_f64(),
            budget: self.budget,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_cap_trips() {
        let mut m = Budget::nodes(3).meter();
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(matches!(m.tick(), Err(SolveError::BudgetExhausted { nodes: 4, .. })));
    }

    #[test]
    fn validity() {
        assert!(Budget::default().is_valid());
        assert!(!Budget::nodes(0).is_valid());
        assert_eq!(Budget::unlimited().time_limit(), Duration::MAX);
    }
}
