use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::config::{Suite, SweepConfig};
use super::{exit, HarnessError};
use crate::solvers::{Budget, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinTihany {
    pub size: usize,
    pub clique: Vec<usize>,
    pub names: Vec<String>,
    pub chi_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub applicable: bool,
    pub instances: usize,
    pub violations: usize,
}

/// A search cut off by its budget. Not a negative answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Unknown {
    pub stage: String,
    pub nodes: u64,
    pub budget: Budget,
}

impl Unknown {
    pub fn from_solve(stage: &str, e: &SolveError) -> Unknown {
        let SolveError::BudgetExhausted { nodes, budget, .. } = e;
        Unknown { stage: stage.into(), nodes: *nodes, budget: *budget }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Claw-free, χ > ω, and no clique of size ≤ kmax is Tihany.
    NoSmallTihany,
    /// A (χ−k)-coloring of G\K with a class missing C(K).
    ColoringProperty,
    DenseClique,
    EqualNeighborhoods,
    DisjointNeighborhoods,
    CliqueCutset,
    WJoinReduction,
    Partition,
    /// The engine rejected its own input; a bug rather than a finding.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub id: String,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub id: String,
    pub family: String,
    pub seed: Option<u64>,
    pub note: String,
    pub graph6: String,
    pub labels: Vec<String>,
    pub n: usize,
    pub edges: usize,
    pub chi: Option<usize>,
    pub omega: usize,
    pub alpha: usize,
    pub claw_free: bool,
    /// χ > ω, when χ is known.
    pub gap: Option<bool>,
    pub min_tihany: Option<MinTihany>,
    /// Cliques found not Tihany before the minimum one.
    pub refuted: usize,
    pub suites: Vec<SuiteOutcome>,
    pub violations: Vec<Violation>,
    pub unknowns: Vec<Unknown>,
    pub millis: u64,
}

impl InstanceRecord {
    pub fn in_scope(&self) -> bool {
        self.claw_free && self.gap == Some(true)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    /// Claw-free with χ > ω.
    pub in_scope: usize,
    pub violations: Vec<Violation>,
    pub unknowns: usize,
    pub max_min_tihany_size: Option<usize>,
    /// Per family: minimum Tihany size → number of instances.
    pub size_histogram: BTreeMap<String, BTreeMap<usize, usize>>,
}

impl Summary {
    pub fn of(records: &[InstanceRecord]) -> Summary {
        let mut size_histogram: BTreeMap<String, BTreeMap<usize, usize>> = BTreeMap::new();
        for r in records {
            if let Some(m) = &r.min_tihany {
                *size_histogram.entry(r.family.clone()).or_default().entry(m.size).or_default() += 1;
            }
        }
        Summary {
            instances: records.len(),
            in_scope: records.iter().filter(|r| r.in_scope()).count(),
            violations: records.iter().flat_map(|r| r.violations.iter().cloned()).collect(),
            unknowns: records.iter().map(|r| r.unknowns.len()).sum(),
            max_min_tihany_size: records.iter().filter_map(|r| r.min_tihany.as_ref().map(|m| m.size)).max(),
            size_histogram,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn new(config: SweepConfig, records: Vec<InstanceRecord>) -> SweepReport {
        let summary = Summary::of(&records);
        SweepReport { config, records, summary }
    }

    /// 2 on any violation, else 3 on any unknown, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.summary.violations.is_empty() {
            exit::VIOLATION
        } else if self.summary.unknowns > 0 {
            exit::UNKNOWN
        } else {
            exit::CLEAN
        }
    }

    pub fn record(&self, id: &str) -> Option<&InstanceRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// The report with every timing zeroed, for replay comparisons.
    pub fn without_timings(&self) -> SweepReport {
        let mut out = self.clone();
        for r in &mut out.records {
            r.millis = 0;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn save(&self, path: &Path) -> Result<(), HarnessError> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| HarnessError::io(path, e))
    }

    pub fn load(path: &Path) -> Result<SweepReport, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| HarnessError::json(path, e))
    }
}
