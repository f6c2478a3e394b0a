//! Tihany tests and the structural facts about them: search for a small
//! Tihany clique, dense/good classification, the coloring property of
//! non-Tihany cliques, Gallai-Edmonds, clique-cutset merges, W-join
//! reduction and the brute-force partition check.

mod cutset;
mod elt;
mod gallai;
mod lemmas;
mod tihany;
mod wjoin;

use thiserror::Error;

use crate::clawfree::AnalysisError;
use crate::graph::VertexSet;
use crate::solvers::SolveError;

pub use cutset::merge_cutset_colorings;
pub use elt::{elt_partition_exists, EltPartition, ELT_VERTEX_LIMIT};
pub use gallai::{gallai_edmonds, GEDecomposition};
pub use lemmas::{
    certifying_reasons, check_clique_cutset, check_dense_cliques, check_disjoint_neighborhoods,
    check_equal_neighborhoods, LemmaKind, LemmaReport, LemmaViolation,
};
pub use tihany::{
    check_lemma_basic, classify_clique, find_min_tihany, is_tihany, is_tihany_with_chi, s_f,
    BasicCheck, CliqueClass, Refutation, TihanyCertificate, TihanyOutcome, TihanySearch,
    DEFAULT_KMAX,
};
pub use wjoin::{find_nonreduced_wjoin, reduce_wjoin, WJoin, WJoinParts};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{0:?} is not a clique")]
    NotAClique(VertexSet),
    #[error("invalid clique-cutset separation: {0}")]
    InvalidCutset(String),
    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("not a non-reduced W-join: {0}")]
    NotNonReduced(String),
    #[error("no chromatic-number-preserving reduced pattern for W-join ({a:?}, {b:?})")]
    NoReduction { a: VertexSet, b: VertexSet },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
