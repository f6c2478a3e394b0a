use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::solvers::{matching_number, maximum_matching, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GEDecomposition {
    /// Vertices missed by some maximum matching.
    pub d: VertexSet,
    /// N(D) \ D.
    pub a: VertexSet,
    pub c: VertexSet,
    pub matching: Matching,
    pub mu: usize,
    pub components_of_d: usize,
}

impl GEDecomposition {
    /// |V| + |A| − c(D), the number of vertices a maximum matching covers.
    pub fn covered_by_formula(&self, n: usize) -> usize {
        (n + self.a.len()).saturating_sub(self.components_of_d)
    }
}

/// D is computed as {v : μ(G − v) = μ(G)}, one matching run per vertex.
pub fn gallai_edmonds(g: &Graph) -> GEDecomposition {
    let matching = maximum_matching(g);
    let mu = matching.len();
    let d: VertexSet = g
        .vertices()
        .iter()
        .filter(|&v| matching_number(&g.remove(&VertexSet::singleton(v)).0) == mu)
        .collect();
    let a = g.neighborhood(&d);
    let c = g.vertices() - d - a;
    let components_of_d = g.components_within(&d).len();
    let out = GEDecomposition { d, a, c, matching, mu, components_of_d };
    assert_eq!(
        out.covered_by_formula(g.n()),
        2 * mu,
        "Gallai-Edmonds count fails on {g:?}"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_d(g: &Graph) -> VertexSet {
        // Enumerate every matching; D is the set of vertices missed by some
        // matching of maximum size.
        let edges: Vec<_> = g.edges().collect();
        let mut best = 0;
        let mut missed = VertexSet::new();
        fn rec(
            edges: &[(usize, usize)],
            i: usize,
            used: VertexSet,
            size: usize,
            all: VertexSet,
            best: &mut usize,
            missed: &mut VertexSet,
        ) {
            if i == edges.len() {
                if size > *best {
                    *best = size;
                    *missed = VertexSet::new();
                }
                if size == *best {
                    *missed |= all - used;
                }
                return;
            }
            rec(edges, i + 1, used, size, all, best, missed);
            let (u, v) = edges[i];
            if !used.contains(u) && !used.contains(v) {
                rec(edges, i + 1, used | VertexSet::from([u, v]), size + 1, all, best, missed);
            }
        }
        rec(&edges, 0, VertexSet::new(), 0, g.vertices(), &mut best, &mut missed);
        missed
    }

    #[test]
    fn examples() {
        let p3 = gallai_edmonds(&Graph::path(3));
        assert_eq!((p3.d, p3.a, p3.c), (VertexSet::from([0, 2]), VertexSet::singleton(1), VertexSet::new()));
        let k2 = gallai_edmonds(&Graph::complete(2));
        assert_eq!((k2.d, k2.a, k2.c), (VertexSet::new(), VertexSet::new(), VertexSet::from([0, 1])));
        let k3 = gallai_edmonds(&Graph::complete(3));
        assert_eq!((k3.d, k3.a, k3.c), (VertexSet::full(3), VertexSet::new(), VertexSet::new()));
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            assert_eq!(gallai_edmonds(&g).d, brute_d(&g), "{g:?}");
        }
    }
}
