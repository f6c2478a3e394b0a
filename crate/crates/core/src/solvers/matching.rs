//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(n³)).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Matching {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        self.edges.iter().all(|&(u, v)| {
            u < g.n() && v < g.n() && g.has_edge(u, v) && seen.insert(u) && seen.insert(v)
        })
    }
}

const NIL: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NIL; n],
        parent: vec![NIL; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy warm start; the augmenting phase fixes any suboptimal choice.
    for v in 0..n {
        if b.mate[v] == NIL {
            if let Some(u) = g.neighbors(v).iter().find(|&u| b.mate[u] == NIL) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NIL {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NIL {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    Matching::new(
        (0..n)
            .filter(|&v| b.mate[v] != NIL && v < b.mate[v])
            .map(|v| (v, b.mate[v]))
            .collect(),
    )
}

/// μ(g).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn brute_mu(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], used: VertexSet) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = rec(rest, used);
                    if used.contains(u) || used.contains(v) {
                        skip
                    } else {
                        let mut u2 = used;
                        u2.insert(u);
                        u2.insert(v);
                        skip.max(1 + rec(rest, u2))
                    }
                }
            }
        }
        rec(&g.edges().collect::<Vec<_>>(), VertexSet::new())
    }

    #[test]
    fn examples() {
        assert_eq!(matching_number(&Graph::cycle(5)), 2);
        assert_eq!(matching_number(&Graph::complete(2)), 1);
        assert_eq!(matching_number(&Graph::path(4)), 2);
        assert_eq!(matching_number(&Graph::empty(0).unwrap()), 0);
        let petersen = crate::graph::decode_graph6("IheA@GUAo").unwrap();
        assert_eq!(matching_number(&petersen), 5);
    }

    #[test]
    fn needs_blossom_contraction() {
        // Triangle 0-1-2 with stems 0-3 and 1-4 and 2-5: perfect matching
        // exists but a greedy start on the triangle must be repaired.
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert!(m.is_valid(&g));
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(0..=12);
            let p: f64 = rng.gen_range(0.1..0.6);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let m = maximum_matching(&g);
            assert!(m.is_valid(&g));
            assert_eq!(m.len(), brute_mu(&g), "{g:?}");
        }
    }
}
