//! Immutable simple graphs over dense vertex ids, plus the vertex-set
//! algebra every other module is written against.

mod graph6;
mod vertex_set;

pub use graph6::{decode_graph6, decode_graph6_lines, encode_graph6, Graph6Error};
pub use vertex_set::{VertexSet, MAX_VERTICES};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("vertex set {0:?} is not a clique")]
    NotAClique(VertexSet),
}

/// A finite simple graph on vertices `0..n`.
///
/// Each row of the adjacency matrix is a [`VertexSet`], so neighborhood
/// intersections are word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::new(); n],
        })
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("complete graph size");
        for v in 0..n {
            g.rows[v] = VertexSet::full(n) - VertexSet::singleton(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are in range")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are in range")
    }

    /// Builds directly from adjacency rows. Rows must be symmetric and
    /// loop-free; this is checked.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        for (u, row) in rows.iter().enumerate() {
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            if let Some(v) = row.last() {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            for v in row {
                assert!(rows[v].contains(u), "asymmetric adjacency {u}-{v}");
            }
        }
        Ok(Graph { n, rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Vertices other than `v` that are not adjacent to `v`.
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::full(self.n) - self.rows[v];
        s.remove(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].above(u).iter().map(move |v| (u, v)).collect::<Vec<_>>())
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = (0..self.n)
            .map(|v| full - self.rows[v] - VertexSet::singleton(v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// The subgraph induced on `s`, relabelled to `0..|s|` in increasing id
    /// order. The returned table maps new ids back to ids of `self`.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| (self.rows[v] & *s).iter().map(|u| index[u]).collect())
            .collect();
        (Graph { n: keep.len(), rows }, keep)
    }

    /// `G \ s`: the subgraph induced on the complement of `s`.
    pub fn remove(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced(&(self.vertices() - *s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| (*s - self.rows[v]).len() == 1)
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Vertices outside `k` adjacent to every member of `k`. For the empty
    /// set this is all of V, the intersection over an empty family.
    pub fn common_neighbors(&self, k: &VertexSet) -> VertexSet {
        let mut c = VertexSet::full(self.n);
        for v in k {
            c &= self.rows[v];
        }
        c - *k
    }

    /// Vertices outside `k` with no neighbor in `k`.
    pub fn common_non_neighbors(&self, k: &VertexSet) -> VertexSet {
        let mut a = VertexSet::full(self.n) - *k;
        for v in k {
            a -= self.rows[v];
        }
        a
    }

    /// Union of the neighborhoods of `s`, excluding `s` itself.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out |= self.rows[v];
        }
        out - *s
    }

    /// Splits V \ k into common neighbors, common non-neighbors and mixed
    /// vertices of the clique `k`.
    pub fn partition_wrt_clique(&self, k: &VertexSet) -> Result<CliquePartition, GraphError> {
        if !self.is_clique(k) {
            return Err(GraphError::NotAClique(*k));
        }
        let c = self.common_neighbors(k);
        let a = if k.is_empty() {
            VertexSet::new()
        } else {
            self.common_non_neighbors(k)
        };
        let m = self.vertices() - *k - c - a;
        Ok(CliquePartition { c, a, m })
    }

    /// Vertex sets of the connected components of `G|within`, each listed
    /// once, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = *within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in &frontier {
                    next |= self.rows[v];
                }
                next &= *within;
                next -= comp;
                comp |= next;
                frontier = next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut rows = self.rows.clone();
        rows.extend(
            other
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v + shift).collect::<VertexSet>()),
        );
        Graph::from_rows(rows).expect("disjoint union stays within bounds")
    }

    /// A copy with the listed edges added.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut all: Vec<_> = self.edges().collect();
        all.extend_from_slice(edges);
        Graph::new(self.n, &all)
    }

    /// A copy with the listed edges removed (absent pairs are ignored).
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.rows[u].remove(v);
            g.rows[v].remove(u);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![VertexSet::new(); self.n];
        for u in 0..self.n {
            rows[perm[u]] = self.rows[u].iter().map(|v| perm[v]).collect();
        }
        Graph { n: self.n, rows }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let line = String::deserialize(d)?;
        decode_graph6(&line).map_err(serde::de::Error::custom)
    }
}

/// The partition of `V \ K` relative to a clique `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    /// Common neighbors C(K).
    pub c: VertexSet,
    /// Common non-neighbors A(K).
    pub a: VertexSet,
    /// Mixed vertices M(K).
    pub m: VertexSet,
}

impl CliquePartition {
    /// C(K) ∪ K.
    pub fn closed(&self, k: &VertexSet) -> VertexSet {
        self.c | *k
    }
}

/// Human-readable names for the vertices of a generated graph, e.g. `v_7`
/// or `a_2^3`, so results can be read against the family definitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    names: Vec<String>,
}

impl Labeling {
    pub fn new(names: Vec<String>) -> Labeling {
        Labeling { names }
    }

    /// `prefix0, prefix1, ...`
    pub fn numbered(prefix: &str, n: usize) -> Labeling {
        Labeling::new((0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ids for several names; panics on a missing name (generator bug).
    pub fn ids(&self, names: &[&str]) -> VertexSet {
        names
            .iter()
            .map(|n| self.id(n).unwrap_or_else(|| panic!("no vertex named {n}")))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn as_map(&self) -> HashMap<&str, usize> {
        self.names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect()
    }

    /// Restricts to the ids listed in `keep` (in that order).
    pub fn restrict(&self, keep: &[usize]) -> Labeling {
        Labeling::new(keep.iter().map(|&v| self.names[v].clone()).collect())
    }

    pub fn format_set(&self, s: &VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A graph together with the names of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Labeling,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: Labeling) -> LabeledGraph {
        assert_eq!(graph.n(), labels.len(), "one label per vertex");
        LabeledGraph { graph, labels }
    }

    pub fn unlabeled(graph: Graph) -> LabeledGraph {
        let labels = Labeling::numbered("v", graph.n());
        LabeledGraph { graph, labels }
    }

    pub fn id(&self, name: &str) -> usize {
        self.labels
            .id(name)
            .unwrap_or_else(|| panic!("no vertex named {name}"))
    }

    /// Induced subgraph on `s` with labels carried over.
    pub fn induced(&self, s: &VertexSet) -> LabeledGraph {
        let (graph, keep) = self.graph.induced(s);
        LabeledGraph {
            graph,
            labels: self.labels.restrict(&keep),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5)
    }

    #[test]
    fn make_graph_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let g = c5();
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
        let dup = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(513), Err(GraphError::TooLarge(513)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement().edge_count(), 0);
        // C5 is self-complementary via v -> 2v mod 5.
        let cc = c5().complement();
        let perm = [0, 2, 4, 1, 3];
        assert_eq!(c5().permuted(&perm), cc);
    }

    #[test]
    fn induced_examples() {
        let (p3, remap) = c5().induced(&VertexSet::from([1, 2, 3]));
        assert_eq!(p3, Graph::path(3));
        assert_eq!(remap, vec![1, 2, 3]);
        let (same, _) = c5().induced(&c5().vertices());
        assert_eq!(same, c5());
    }

    #[test]
    fn partition_examples() {
        // Vertex 3 is opposite the edge and sees neither end.
        let p = c5().partition_wrt_clique(&VertexSet::from([0, 1])).unwrap();
        assert!(p.c.is_empty());
        assert_eq!(p.a.to_vec(), vec![3]);
        assert_eq!(p.m.to_vec(), vec![2, 4]);

        let k4 = Graph::complete(4);
        let p = k4.partition_wrt_clique(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(p.c.to_vec(), vec![3]);
        assert!(p.a.is_empty() && p.m.is_empty());

        // W5: hub 5 over rim 0..4.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::new(6, &edges).unwrap();
        let p = w5.partition_wrt_clique(&VertexSet::singleton(5)).unwrap();
        assert_eq!(p.c.to_vec(), vec![0, 1, 2, 3, 4]);
        assert!(p.a.is_empty() && p.m.is_empty());

        let empty = c5().partition_wrt_clique(&VertexSet::new()).unwrap();
        assert_eq!(empty.c, c5().vertices());
        assert!(empty.a.is_empty() && empty.m.is_empty());

        assert!(matches!(
            c5().partition_wrt_clique(&VertexSet::from([0, 2])),
            Err(GraphError::NotAClique(_))
        ));
    }

    #[test]
    fn components() {
        let g = Graph::new(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps: Vec<_> = g.components().iter().map(VertexSet::to_vec).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        assert!(!g.is_connected());
        assert!(c5().is_connected());
    }
}
