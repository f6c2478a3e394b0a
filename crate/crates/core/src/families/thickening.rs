//! Thickenings: every base vertex becomes a clique `X_v`, base edges become
//! complete pairs, non-edges anticomplete pairs, and each changeable pair in
//! `F` gets a bipartite pattern that is neither complete nor empty.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{invalid, FamilyError};
use crate::graph::{Graph, LabeledGraph, Labeling, VertexSet};

/// Cross edges between `X_u` (indices `0..left`) and `X_v` (`0..right`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitePattern {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartitePattern {
    pub fn new(left: usize, right: usize, mut edges: Vec<(usize, usize)>) -> BipartitePattern {
        edges.sort_unstable();
        edges.dedup();
        BipartitePattern { left, right, edges }
    }

    /// The first `a1` vertices on the left complete to the first `b1` on the
    /// right, nothing else. This is the reduced shape.
    pub fn block(left: usize, right: usize, a1: usize, b1: usize) -> BipartitePattern {
        let edges = (0..a1).flat_map(|i| (0..b1).map(move |j| (i, j))).collect();
        BipartitePattern::new(left, right, edges)
    }

    /// The staircase `i ~ j iff j <= i`: nested neighborhoods, not a single
    /// block once both sides have two vertices.
    pub fn half_graph(left: usize, right: usize) -> BipartitePattern {
        let edges = (0..left)
            .flat_map(|i| (0..right).filter(move |&j| j <= i).map(move |j| (i, j)))
            .collect();
        BipartitePattern::new(left, right, edges)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The edges form exactly `A1 x B1` where `A1`, `B1` are the vertices
    /// with a cross neighbor.
    pub fn is_reduced(&self) -> bool {
        let a1: std::collections::BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        let b1: std::collections::BTreeSet<usize> = self.edges.iter().map(|e| e.1).collect();
        self.edges.len() == a1.len() * b1.len()
    }

    pub fn is_valid(&self) -> bool {
        self.edges.iter().all(|&(i, j)| i < self.left && j < self.right)
            && !self.is_complete()
            && !self.is_empty()
    }

    /// A uniformly chosen block pattern; needs `left * right >= 2`.
    pub fn random_reduced<R: Rng>(rng: &mut R, left: usize, right: usize) -> BipartitePattern {
        assert!(left * right >= 2, "a 1x1 pattern is complete or empty");
        loop {
            let a1 = rng.gen_range(1..=left);
            let b1 = rng.gen_range(1..=right);
            if a1 * b1 < left * right {
                return BipartitePattern::block(left, right, a1, b1);
            }
        }
    }

    /// A random pattern that is not a single block; needs both sides >= 2.
    pub fn random_nonreduced<R: Rng>(rng: &mut R, left: usize, right: usize) -> BipartitePattern {
        assert!(left >= 2 && right >= 2, "non-reduced patterns need 2x2 room");
        loop {
            let edges: Vec<_> = (0..left)
                .flat_map(|i| (0..right).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let p = BipartitePattern::new(left, right, edges);
            if p.is_valid() && !p.is_reduced() {
                return p;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyPair {
    pub u: usize,
    pub v: usize,
    /// Left side indexes `X_u`, right side `X_v`.
    pub pattern: BipartitePattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThickeningSpec {
    pub base: Graph,
    pub sizes: Vec<usize>,
    pub fuzzy: Vec<FuzzyPair>,
}

impl ThickeningSpec {
    /// Every vertex once, no pairs.
    pub fn identity(base: Graph) -> ThickeningSpec {
        let sizes = vec![1; base.n()];
        ThickeningSpec {
            base,
            sizes,
            fuzzy: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let err = |m: String| Err(FamilyError::Thickening(m));
        if self.sizes.len() != self.base.n() {
            return err(format!("{} sizes for {} base vertices", self.sizes.len(), self.base.n()));
        }
        if let Some(v) = self.sizes.iter().position(|&s| s == 0) {
            return err(format!("X_{v} is empty"));
        }
        let mut used = VertexSet::new();
        for p in &self.fuzzy {
            if p.u == p.v || p.u >= self.base.n() || p.v >= self.base.n() {
                return err(format!("bad pair {{{},{}}}", p.u, p.v));
            }
            if !used.insert(p.u) || !used.insert(p.v) {
                return err(format!("pair {{{},{}}} reuses a vertex", p.u, p.v));
            }
            if p.pattern.left != self.sizes[p.u] || p.pattern.right != self.sizes[p.v] {
                return err(format!("pattern shape mismatch on {{{},{}}}", p.u, p.v));
            }
            if !p.pattern.is_valid() {
                return err(format!("pattern on {{{},{}}} is complete or empty", p.u, p.v));
            }
        }
        if self.sizes.iter().sum::<usize>() > crate::graph::MAX_VERTICES {
            return err("too many vertices".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thickening {
    pub graph: LabeledGraph,
    /// Base vertex of each output vertex.
    pub origin: Vec<usize>,
    /// `X_v` for each base vertex.
    pub blocks: Vec<VertexSet>,
}

impl Thickening {
    /// Output vertex pairs `(X_u, X_v)` for the fuzzy pairs.
    pub fn fuzzy_blocks(&self, spec: &ThickeningSpec) -> Vec<(VertexSet, VertexSet)> {
        spec.fuzzy
            .iter()
            .map(|p| (self.blocks[p.u], self.blocks[p.v]))
            .collect()
    }
}

/// Builds the thickening. Vertex `k` of `X_v` is named `{name}` when
/// `|X_v| = 1` and `{name}#{k}` otherwise.
pub fn thicken(spec: &ThickeningSpec, base_labels: &Labeling) -> Result<Thickening, FamilyError> {
    spec.validate()?;
    if base_labels.len() != spec.base.n() {
        return Err(invalid("labeling does not match base graph"));
    }
    let mut start = Vec::with_capacity(spec.base.n());
    let mut origin = Vec::new();
    let mut names = Vec::new();
    let mut blocks = Vec::new();
    for (v, &s) in spec.sizes.iter().enumerate() {
        start.push(origin.len());
        let mut block = VertexSet::new();
        for k in 0..s {
            block.insert(origin.len());
            origin.push(v);
            names.push(if s == 1 {
                base_labels.name(v).to_string()
            } else {
                format!("{}#{k}", base_labels.name(v))
            });
        }
        blocks.push(block);
    }
    let mut fuzzy_of = vec![None; spec.base.n()];
    for (i, p) in spec.fuzzy.iter().enumerate() {
        fuzzy_of[p.u] = Some(i);
        fuzzy_of[p.v] = Some(i);
    }
    let mut edges = Vec::new();
    for v in 0..spec.base.n() {
        for a in 0..spec.sizes[v] {
            for b in a + 1..spec.sizes[v] {
                edges.push((start[v] + a, start[v] + b));
            }
        }
    }
    for (u, v) in spec.base.edges() {
        if fuzzy_of[u].is_some() && fuzzy_of[u] == fuzzy_of[v] {
            continue;
        }
        for a in 0..spec.sizes[u] {
            for b in 0..spec.sizes[v] {
                edges.push((start[u] + a, start[v] + b));
            }
        }
    }
    for p in &spec.fuzzy {
        for &(i, j) in &p.pattern.edges {
            edges.push((start[p.u] + i, start[p.v] + j));
        }
    }
    let graph = Graph::new(origin.len(), &edges).map_err(|e| FamilyError::Thickening(e.to_string()))?;
    Ok(Thickening {
        graph: LabeledGraph::new(graph, Labeling::new(names)),
        origin,
        blocks,
    })
}
