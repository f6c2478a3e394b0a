//! Generators and validators for the graph families that make up the
//! claw-free structure classes.

pub mod interval;
pub mod named;
pub mod random;
pub mod strips;
pub mod thickening;
pub mod three_cliqued;
pub mod triangle_chain;

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, LabeledGraph, Labeling, VertexSet};

pub use interval::{interval_graph, Arc, IntervalSpec};
pub use thickening::{thicken, BipartitePattern, FuzzyPair, Thickening, ThickeningSpec};
pub use three_cliqued::{hex_chain, ThreeCliquedGraph};
pub use triangle_chain::{triangle_chain, ChainViolation, TriangleChainSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("thickening: {0}")]
    Thickening(String),
    #[error("interval spec: {0}")]
    Interval(String),
    #[error("triangle chain clause {}: {}", .0.clause, .0.detail)]
    TriangleChain(ChainViolation),
    #[error("three-cliqued graph: {0}")]
    ThreeCliqued(String),
    #[error("strip structure {axiom}: {detail}")]
    StripStructure { axiom: &'static str, detail: String },
}

pub(crate) fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams(msg.into())
}

/// Line graph of `h`: one vertex per edge (in `h.edges()` order), adjacent
/// when the edges share an end. Labels read `u-v`.
pub fn line_graph(h: &Graph) -> (LabeledGraph, Vec<(usize, usize)>) {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut pairs = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                pairs.push((i, j));
            }
        }
    }
    let g = Graph::new(edges.len(), &pairs).expect("line graph edges in range");
    let labels = Labeling::new(edges.iter().map(|(u, v)| format!("{u}-{v}")).collect());
    (LabeledGraph::new(g, labels), edges)
}

/// Incremental construction of a graph with named vertices.
#[derive(Debug, Default, Clone)]
pub(crate) struct Builder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub(crate) fn new() -> Builder {
        Builder::default()
    }

    pub(crate) fn vertex(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        if let Some(&v) = self.index.get(&name) {
            return v;
        }
        let v = self.names.len();
        self.index.insert(name.clone(), v);
        self.names.push(name);
        v
    }

    pub(crate) fn id(&self, name: &str) -> usize {
        *self
            .index
            .get(name)
            .unwrap_or_else(|| panic!("no vertex named {name}"))
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.edges.push((u, v));
        }
    }

    pub(crate) fn edge_by_name(&mut self, u: &str, v: &str) {
        let (u, v) = (self.id(u), self.id(v));
        self.edge(u, v);
    }

    pub(crate) fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    pub(crate) fn complete(&mut self, xs: &[usize], ys: &[usize]) {
        for &x in xs {
            for &y in ys {
                self.edge(x, y);
            }
        }
    }

    pub(crate) fn build(self) -> LabeledGraph {
        let g = Graph::new(self.names.len(), &self.edges).expect("builder edges in range");
        LabeledGraph::new(g, Labeling::new(self.names))
    }
}

/// `X` is complete to `Y` in `g`.
pub(crate) fn complete_to(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    x.iter().all(|v| y.is_subset(g.neighbors(v)))
}

/// `X` is anticomplete to `Y` in `g`.
pub(crate) fn anticomplete_to(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    x.iter().all(|v| g.neighbors(v).is_disjoint(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_graph_examples() {
        let k33 = Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap();
        let (l, _) = line_graph(&k33);
        assert_eq!((l.graph.n(), l.graph.edge_count()), (9, 18));
        let (l, _) = line_graph(&Graph::path(3));
        assert_eq!(l.graph, Graph::complete(2));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(line_graph(&star).0.graph, Graph::complete(3));
    }

    #[test]
    fn line_graph_edge_count_formula() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let h = Graph::new(n, &edges).unwrap();
            let expected: usize = (0..n).map(|v| h.degree(v) * h.degree(v).saturating_sub(1) / 2).sum();
            assert_eq!(line_graph(&h).0.graph.edge_count(), expected);
        }
    }
}
