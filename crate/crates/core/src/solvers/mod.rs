//! Exact solvers for χ, ω, α, μ and induced-subgraph search.

mod budget;
mod clique;
mod coloring;
mod induced;
mod matching;

pub use budget::{Budget, SolveError};
pub use clique::{clique_number, cliques_up_to, for_each_clique_of_size, stability_number};
pub use coloring::{chromatic_at_least, chromatic_number, find_coloring, greedy_dsatur, Coloring};
pub use induced::{find_induced, is_induced_embedding};
pub use matching::{matching_number, maximum_matching, Matching};
