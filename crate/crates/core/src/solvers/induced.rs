//! Induced subgraph search by backtracking.

use crate::graph::{Graph, VertexSet};

/// An injective map `pattern vertex -> host vertex` under which adjacency
/// and non-adjacency are both preserved, or `None` if no induced copy of
/// `pattern` exists in `g`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let p = pattern.n();
    if p > g.n() {
        return None;
    }
    // Descending degree keeps the constrained vertices early.
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut map = vec![usize::MAX; p];
    let mut used = VertexSet::new();
    if extend(g, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&pv) = order.get(depth) else {
        return true;
    };
    let mut cand = g.vertices() - *used;
    for &q in &order[..depth] {
        let image = map[q];
        if pattern.has_edge(pv, q) {
            cand &= *g.neighbors(image);
        } else {
            cand -= *g.neighbors(image);
        }
    }
    let need = pattern.degree(pv);
    for hv in &cand {
        if g.degree(hv) < need {
            continue;
        }
        map[pv] = hv;
        used.insert(hv);
        if extend(g, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.remove(hv);
    }
    map[pv] = usize::MAX;
    false
}

/// `map` embeds `pattern` into `g` as an induced subgraph.
pub fn is_induced_embedding(g: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    let image: VertexSet = map.iter().copied().collect();
    map.len() == pattern.n()
        && image.len() == map.len()
        && map.iter().all(|&v| v < g.n())
        && (0..pattern.n()).all(|a| {
            (a + 1..pattern.n()).all(|b| pattern.has_edge(a, b) == g.has_edge(map[a], map[b]))
        })
}
