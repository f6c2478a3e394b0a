//! Maximum clique by branch and bound with greedy-coloring bounds.

use crate::graph::{Graph, VertexSet};

/// ω(g) and a maximum clique. Deterministic: the witness depends only on
/// the graph.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let candidates = g.vertices();
    expand(g, candidates, &mut current, &mut best);
    (best.len(), best.into_iter().collect())
}

/// α(g) and a maximum stable set, via the clique number of the complement.
pub fn stability_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&g.complement())
}

/// Colors `p` greedily into stable classes; returns vertices in class order
/// with the class index (1-based) of each, which bounds the clique size of
/// every prefix.
fn color_sort(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = p;
    let mut k = 0;
    while !uncolored.is_empty() {
        k += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q -= *g.neighbors(v);
            q.remove(v);
            uncolored.remove(v);
            order.push(v);
            bounds.push(k);
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, mut p: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, p);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = p & *g.neighbors(v);
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, next, current, best);
        }
        current.pop();
        p.remove(v);
    }
}

/// A maximal clique built greedily by degree; cheap symmetry breaking for
/// the coloring search.
pub(crate) fn greedy_clique(g: &Graph) -> VertexSet {
    let mut clique = VertexSet::new();
    let mut cand = g.vertices();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection_len(&cand), std::cmp::Reverse(v)))
            .expect("nonempty");
        clique.insert(v);
        cand &= *g.neighbors(v);
    }
    clique
}

/// Every clique of size `size`, each as a sorted id list, in lexicographic
/// order. The callback may stop the enumeration by returning `false`.
pub fn for_each_clique_of_size<F>(g: &Graph, size: usize, mut f: F)
where
    F: FnMut(&[usize]) -> bool,
{
    fn rec<F: FnMut(&[usize]) -> bool>(
        g: &Graph,
        cand: VertexSet,
        size: usize,
        current: &mut Vec<usize>,
        f: &mut F,
    ) -> bool {
        if current.len() == size {
            return f(current);
        }
        let need = size - current.len();
        for v in &cand {
            let rest = cand.above(v) & *g.neighbors(v);
            if rest.len() + 1 < need {
                continue;
            }
            current.push(v);
            let go_on = rec(g, rest, size, current, f);
            current.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    if size == 0 {
        f(&[]);
        return;
    }
    rec(g, g.vertices(), size, &mut Vec::new(), &mut f);
}

/// All cliques of size `1..=max_size`, ordered by size then lexicographically.
pub fn cliques_up_to(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for_each_clique_of_size(g, size, |c| {
            out.push(c.iter().collect());
            true
        });
    }
    out
}
