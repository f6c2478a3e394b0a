//! Exact solvers, structural predicates and family generators for checking
//! Tihany cliques in claw-free graphs.

pub mod clawfree;
pub mod engine;
pub mod families;
pub mod graph;
pub mod harness;
pub mod solvers;

pub use graph::{
    decode_graph6, encode_graph6, CliquePartition, Graph, GraphError, LabeledGraph, Labeling,
    VertexSet,
};
pub use solvers::{Budget, Coloring, Matching, SolveError};
pub use engine::{find_min_tihany, is_tihany, EngineError, TihanyCertificate, TihanyOutcome};
pub use families::random::Family;
pub use harness::{HarnessError, SweepConfig, SweepReport};
