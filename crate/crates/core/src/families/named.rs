//! Fixed and lightly parameterized families: the icosahedron graphs, the
//! rotator and twister, rings of five and mantled L(K3,3).

use serde::{Deserialize, Serialize};

use super::{invalid, Builder, FamilyError};
use crate::clawfree::enumerate_triangles;
use crate::graph::{LabeledGraph, VertexSet};

/// `G0` (k = 0), `G1 = G0 - v11` (k = 1) or `G2 = G1 - v10` (k = 2), with
/// vertices named `v0`..`v11`.
pub fn icosahedron(k: usize) -> LabeledGraph {
    assert!(k <= 2, "icosahedron variant must be 0, 1 or 2");
    let mut b = Builder::new();
    let v: Vec<usize> = (0..12).map(|i| b.vertex(format!("v{i}"))).collect();
    for i in 1..=10 {
        let next = |d: usize| (i - 1 + d) % 10 + 1;
        b.edge(v[i], v[next(1)]);
        b.edge(v[i], v[next(2)]);
    }
    for i in [1, 3, 5, 7, 9] {
        b.edge(v[0], v[i]);
    }
    for i in [2, 4, 6, 8, 10] {
        b.edge(v[11], v[i]);
    }
    let g0 = b.build();
    let keep = VertexSet::full(12 - k);
    g0.induced(&keep)
}

/// Nine vertices `v1`..`v9`: triangle `v1v2v3`, `{v4,v5,v6}` complete to
/// `{v7,v8,v9}`, and `v_i ~ v_{i+3}, v_{i+6}`.
pub fn rotator() -> LabeledGraph {
    let mut b = Builder::new();
    let v: Vec<usize> = std::iter::once(usize::MAX)
        .chain((1..=9).map(|i| b.vertex(format!("v{i}"))))
        .collect();
    b.clique(&[v[1], v[2], v[3]]);
    b.complete(&[v[4], v[5], v[6]], &[v[7], v[8], v[9]]);
    for i in 1..=3 {
        b.edge(v[i], v[i + 3]);
        b.edge(v[i], v[i + 6]);
    }
    b.build()
}

/// Ten vertices: the axis `u1u2`, the 8-cycle `v1..v8` with long diagonals
/// `v_i v_{i+4}`, and `u_i ~ v_i, v_{i+2}, v_{i+4}, v_{i+6}`.
pub fn twister() -> LabeledGraph {
    let mut b = Builder::new();
    let u1 = b.vertex("u1");
    let u2 = b.vertex("u2");
    let v: Vec<usize> = (1..=8).map(|i| b.vertex(format!("v{i}"))).collect();
    b.edge(u1, u2);
    for i in 0..8 {
        b.edge(v[i], v[(i + 1) % 8]);
        b.edge(v[i], v[(i + 4) % 8]);
    }
    for (axis, first) in [(u1, 0), (u2, 1)] {
        for d in [0, 2, 4, 6] {
            b.edge(axis, v[(first + d) % 8]);
        }
    }
    b.build()
}

/// Parameters for a ring of five: sizes of `V_0..V_5` and the free
/// adjacencies between `V_i` and `V_{i+1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingOfFive {
    pub sizes: [usize; 6],
    /// `(i, x, y)`: vertex `x` of `V_i` adjacent to vertex `y` of `V_{i+1}`,
    /// `i` in `1..=5`, read modulo 5.
    pub links: Vec<(usize, usize, usize)>,
}

/// Ring of five. The `b_i` are pairwise nonadjacent; the definition leaves
/// that adjacency open.
pub fn ring_of_five(p: &RingOfFive) -> Result<LabeledGraph, FamilyError> {
    let mut b = Builder::new();
    let a: Vec<usize> = (1..=5).map(|i| b.vertex(format!("a{i}"))).collect();
    let bb: Vec<usize> = (1..=5).map(|i| b.vertex(format!("b{i}"))).collect();
    let sets: Vec<Vec<usize>> = (0..6)
        .map(|i| (0..p.sizes[i]).map(|k| b.vertex(format!("V{i}.{k}"))).collect())
        .collect();
    // 0-based index j stands for subscript j+1.
    for j in 0..5 {
        b.clique(&[a[j], a[(j + 1) % 5], bb[(j + 3) % 5]]);
        b.edge(a[j], bb[j]);
    }
    b.complete(&sets[0], &bb);
    for i in 1..=5 {
        let j = i - 1;
        b.complete(&sets[i], &[a[(j + 4) % 5], bb[j], a[(j + 1) % 5]]);
    }
    for &(i, x, y) in &p.links {
        if !(1..=5).contains(&i) {
            return Err(invalid(format!("ring link index {i} outside 1..=5")));
        }
        let next = i % 5 + 1;
        if x >= p.sizes[i] || y >= p.sizes[next] {
            return Err(invalid(format!("ring link ({i},{x},{y}) out of range")));
        }
        b.edge(sets[i][x], sets[next][y]);
    }
    Ok(b.build())
}

/// Parameters for a mantled L(K3,3): sizes of the upper mantle sets `V^i`
/// and lower sets `V_i`, plus edges inside each mantle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MantledLk33 {
    pub upper: [usize; 3],
    pub lower: [usize; 3],
    /// `((i, x), (j, y))` with `i != j`: `x`-th vertex of `V^i` adjacent to
    /// `y`-th of `V^j` (indices 1-based for the sets).
    pub upper_edges: Vec<((usize, usize), (usize, usize))>,
    pub lower_edges: Vec<((usize, usize), (usize, usize))>,
}

pub fn mantled_lk33(p: &MantledLk33) -> Result<LabeledGraph, FamilyError> {
    let mut b = Builder::new();
    let w: Vec<Vec<usize>> = (1..=3)
        .map(|i| (1..=3).map(|j| b.vertex(format!("a{i}^{j}"))).collect())
        .collect();
    for i in 0..3 {
        for j in 0..3 {
            for i2 in 0..3 {
                for j2 in 0..3 {
                    if i != i2 && j != j2 {
                        b.edge(w[i][j], w[i2][j2]);
                    }
                }
            }
        }
    }
    let upper: Vec<Vec<usize>> = (1..=3)
        .map(|i| (0..p.upper[i - 1]).map(|k| b.vertex(format!("V^{i}.{k}"))).collect())
        .collect();
    let lower: Vec<Vec<usize>> = (1..=3)
        .map(|i| (0..p.lower[i - 1]).map(|k| b.vertex(format!("V_{i}.{k}"))).collect())
        .collect();
    for i in 0..3 {
        b.complete(&upper[i], &w[i]);
        let column: Vec<usize> = (0..3).map(|r| w[r][i]).collect();
        b.complete(&lower[i], &column);
    }
    for (side, sets, edges) in [("upper", &upper, &p.upper_edges), ("lower", &lower, &p.lower_edges)] {
        for &((i, x), (j, y)) in edges {
            if i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
                return Err(invalid(format!("{side} mantle edge joins V{i} to V{j}")));
            }
            if x >= sets[i - 1].len() || y >= sets[j - 1].len() {
                return Err(invalid(format!("{side} mantle edge out of range")));
            }
            b.edge(sets[i - 1][x], sets[j - 1][y]);
        }
    }
    let g = b.build();
    for (side, sets) in [("upper", &upper), ("lower", &lower)] {
        let mantle: VertexSet = sets.iter().flatten().copied().collect();
        let (sub, remap) = g.graph.induced(&mantle);
        if let Some(t) = enumerate_triangles(&sub).first() {
            let names: Vec<&str> = t.iter().map(|v| g.labels.name(remap[v])).collect();
            return Err(invalid(format!("triangle {names:?} inside the {side} mantle")));
        }
    }
    Ok(g)
}

/// The line graph of K3,3 with vertices `a_i^j`.
pub fn l_k33() -> LabeledGraph {
    mantled_lk33(&MantledLk33::default()).expect("empty mantles are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clawfree::{is_orientable_prismatic, is_prismatic};
    use crate::graph::{decode_graph6, Graph};
    use crate::solvers::{chromatic_number, clique_number, find_induced, stability_number, Budget};

    #[test]
    fn icosahedron_counts() {
        let g0 = icosahedron(0);
        assert_eq!((g0.graph.n(), g0.graph.edge_count()), (12, 30));
        assert!((0..12).all(|v| g0.graph.degree(v) == 5));
        assert_eq!(clique_number(&g0.graph).0, 3);
        assert_eq!(stability_number(&g0.graph).0, 3);
        assert_eq!(chromatic_number(&g0.graph, Budget::default()).unwrap().0, 4);
        let g1 = icosahedron(1);
        assert_eq!(g1.graph.n(), 11);
        assert_eq!(g1.labels.id("v11"), None);
        assert_eq!(g1, g0.induced(&VertexSet::full(11)));
        let g2 = icosahedron(2);
        assert_eq!(g2.graph.n(), 10);
        assert!(g2.graph.has_edge(g2.id("v1"), g2.id("v3")));
    }

    #[test]
    fn icosahedron_matches_reference_encoding() {
        // networkx.to_graph6_bytes of the same adjacency list, v0..v11.
        let reference = decode_graph6("KnMW[KBoZ@dT").unwrap();
        assert_eq!(icosahedron(0).graph, reference);
    }

    #[test]
    fn rotator_and_twister() {
        let r = rotator();
        assert_eq!((r.graph.n(), r.graph.edge_count()), (9, 18));
        assert!(is_prismatic(&r.graph));
        assert!(!is_orientable_prismatic(&r.graph).unwrap().is_orientable());
        assert!(find_induced(&r.graph, &r.graph).is_some());
        let t = twister();
        assert_eq!((t.graph.n(), t.graph.edge_count()), (10, 21));
        assert!(is_prismatic(&t.graph));
    }

    #[test]
    fn ring_of_five_base() {
        let g = ring_of_five(&RingOfFive::default()).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (10, 20));
        assert!(is_prismatic(&g.graph));
        let p = RingOfFive {
            sizes: [1, 1, 1, 1, 1, 1],
            links: vec![(1, 0, 0), (5, 0, 0)],
        };
        let g = ring_of_five(&p).unwrap();
        assert!(g.graph.has_edge(g.id("V5.0"), g.id("V1.0")));
        assert!(is_prismatic(&g.graph));
        assert!(ring_of_five(&RingOfFive { sizes: [0; 6], links: vec![(1, 0, 0)] }).is_err());
    }

    #[test]
    fn mantled() {
        let l = l_k33();
        assert_eq!((l.graph.n(), l.graph.edge_count()), (9, 18));
        assert!(is_prismatic(&l.graph));
        let k33 = Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap();
        let (lg, _) = super::super::line_graph(&k33);
        assert!(find_induced(&l.graph, &lg.graph).is_some());
        let p = MantledLk33 {
            upper: [1, 1, 1],
            lower: [1, 0, 0],
            upper_edges: vec![((1, 0), (2, 0))],
            lower_edges: vec![],
        };
        let g = mantled_lk33(&p).unwrap();
        assert!(is_prismatic(&g.graph));
        let bad = MantledLk33 {
            upper: [1, 1, 1],
            upper_edges: vec![((1, 0), (2, 0)), ((2, 0), (3, 0)), ((1, 0), (3, 0))],
            ..MantledLk33::default()
        };
        assert!(mantled_lk33(&bad).is_err());
    }
}
