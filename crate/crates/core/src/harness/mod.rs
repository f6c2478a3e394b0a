//! Batch verification over generated families and graph6 corpora: sweeps,
//! counterexample hunts and human-readable certificate dumps.

mod config;
mod corpus;
mod explain;
mod report;
mod sweep;

use std::path::PathBuf;

use thiserror::Error;

use crate::engine::EngineError;
use crate::families::FamilyError;
use crate::graph::Graph6Error;

pub use config::{FamilyBatch, Suite, SweepConfig};
pub use corpus::{
    canonical_code, collect_instances, connected_graphs, graphs_on, read_graph6_file, write_instances, CorpusItem,
    Sidecar,
};
pub use explain::explain;
pub use report::{InstanceRecord, MinTihany, Summary, SuiteOutcome, SweepReport, Unknown, Violation, ViolationKind};
pub use sweep::{evaluate, hunt, run_sweep, Bundle, HuntOutcome};

/// Process exit codes shared by the sweep and hunt commands.
pub mod exit {
    pub const CLEAN: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const VIOLATION: i32 = 2;
    pub const UNKNOWN: i32 = 3;
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}: {source}", path.display())]
    Graph6 {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("no instance {0:?} in the report")]
    UnknownId(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl HarnessError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> HarnessError {
        HarnessError::Io { path: path.into(), source }
    }

    pub(crate) fn json(path: impl Into<PathBuf>, source: serde_json::Error) -> HarnessError {
        HarnessError::Json { path: path.into(), source }
    }
}
