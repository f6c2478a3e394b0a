use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::engine::{DEFAULT_KMAX, ELT_VERTEX_LIMIT};
use crate::families::random::Family;
use crate::graph::MAX_VERTICES;
use crate::solvers::Budget;

/// `count` instances of one family, seeds `first_seed..first_seed+count`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyBatch {
    pub family: Family,
    pub count: usize,
    #[serde(default = "default_max_n")]
    pub max_n: usize,
    #[serde(default)]
    pub first_seed: u64,
}

fn default_max_n() -> usize {
    20
}

/// Optional property checks run on each instance next to the Tihany search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    DenseCliques,
    EqualNeighborhoods,
    DisjointNeighborhoods,
    CliqueCutset,
    WJoin,
    Partition,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::DenseCliques,
        Suite::EqualNeighborhoods,
        Suite::DisjointNeighborhoods,
        Suite::CliqueCutset,
        Suite::WJoin,
        Suite::Partition,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub families: Vec<FamilyBatch>,
    /// graph6 files, one graph per line.
    #[serde(default)]
    pub corpora: Vec<PathBuf>,
    /// Adds every connected graph on 1..=n vertices, up to isomorphism.
    /// 0 adds none.
    #[serde(default)]
    pub exhaustive_max_n: usize,
    #[serde(default = "default_kmax")]
    pub kmax: usize,
    /// Applied to each solver call separately.
    #[serde(default)]
    pub budget: Budget,
    #[serde(default)]
    pub suites: Vec<Suite>,
    /// Property suites other than the partition check skip larger graphs.
    #[serde(default = "default_lemma_max_n")]
    pub lemma_max_n: usize,
    #[serde(default = "default_partition_max_n")]
    pub partition_max_n: usize,
    /// Worker threads; 0 lets rayon decide.
    #[serde(default)]
    pub workers: usize,
}

fn default_kmax() -> usize {
    DEFAULT_KMAX
}

fn default_lemma_max_n() -> usize {
    14
}

fn default_partition_max_n() -> usize {
    12
}

pub(crate) const EXHAUSTIVE_LIMIT: usize = 8;

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            families: Vec::new(),
            corpora: Vec::new(),
            exhaustive_max_n: 0,
            kmax: DEFAULT_KMAX,
            budget: Budget::default(),
            suites: Vec::new(),
            lemma_max_n: default_lemma_max_n(),
            partition_max_n: default_partition_max_n(),
            workers: 0,
        }
    }
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<SweepConfig, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        let mut config: SweepConfig = serde_json::from_str(&text).map_err(|e| HarnessError::json(path, e))?;
        // Corpus paths are relative to the config file.
        if let Some(dir) = path.parent() {
            for c in &mut config.corpora {
                if c.is_relative() {
                    *c = dir.join(&*c);
                }
            }
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: String| Err(HarnessError::InvalidConfig(m));
        if self.kmax == 0 {
            return bad("kmax must be at least 1".into());
        }
        if !self.budget.is_valid() {
            return bad(format!("budget {:?} allows no work", self.budget));
        }
        if !self.budget.time_limit_secs.is_finite() {
            // JSON has no infinity, so the report could not be read back.
            return bad("budget time limit must be finite".into());
        }
        for b in &self.families {
            if b.count == 0 {
                return bad(format!("{} batch has count 0", b.family.name()));
            }
            if b.max_n == 0 || b.max_n > MAX_VERTICES {
                return bad(format!("{} batch max_n {} out of range", b.family.name(), b.max_n));
            }
        }
        if self.exhaustive_max_n > EXHAUSTIVE_LIMIT {
            return bad(format!("exhaustive_max_n is capped at {EXHAUSTIVE_LIMIT}"));
        }
        if self.partition_max_n > ELT_VERTEX_LIMIT {
            return bad(format!("partition_max_n is capped at {ELT_VERTEX_LIMIT}"));
        }
        Ok(())
    }

    pub fn runs(&self, suite: Suite) -> bool {
        self.suites.contains(&suite)
    }
}
