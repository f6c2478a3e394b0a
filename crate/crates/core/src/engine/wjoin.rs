use serde::{Deserialize, Serialize};

use super::EngineError;
use crate::clawfree::is_claw_free;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{chromatic_number, find_coloring, Budget};

/// The split of a reduced W-join: A1 complete to B1, A2 anticomplete to B,
/// B2 anticomplete to A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WJoinParts {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub b1: VertexSet,
    pub b2: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WJoin {
    pub a: VertexSet,
    pub b: VertexSet,
    pub reduced: bool,
    pub partition: Option<WJoinParts>,
}

fn is_mixed(g: &Graph, v: usize, s: &VertexSet) -> bool {
    let hit = g.neighbors(v).intersection_len(s);
    hit != 0 && hit != s.len()
}

fn cross_edges(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in a {
        for v in &(*g.neighbors(u) & *b) {
            out.push((u.min(v), u.max(v)));
        }
    }
    out.sort_unstable();
    out
}

impl WJoin {
    /// Checks the W-join conditions and works out whether it is reduced.
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Option<WJoin> {
        if a.is_empty() || b.is_empty() || !a.is_disjoint(&b) || !g.is_clique(&a) || !g.is_clique(&b) {
            return None;
        }
        let outside = g.vertices() - a - b;
        if outside.iter().any(|v| is_mixed(g, v, &a) || is_mixed(g, v, &b)) {
            return None;
        }
        let cross = cross_edges(g, &a, &b).len();
        if cross == 0 || cross == a.len() * b.len() {
            return None;
        }
        let a1: VertexSet = a.iter().filter(|&u| g.neighbors(u).intersects(&b)).collect();
        let b1: VertexSet = b.iter().filter(|&v| g.neighbors(v).intersects(&a)).collect();
        let reduced = cross == a1.len() * b1.len();
        let partition = reduced.then(|| WJoinParts { a1, a2: a - a1, b1, b2: b - b1 });
        Some(WJoin { a, b, reduced, partition })
    }
}

/// Grows the seed until no outside vertex is mixed on either side. A
/// vertex mixed on A can only join B, and vice versa.
fn close(g: &Graph, mut a: VertexSet, mut b: VertexSet) -> Option<(VertexSet, VertexSet)> {
    loop {
        let mut grew = false;
        for v in &(g.vertices() - a - b) {
            let on_a = is_mixed(g, v, &a);
            let on_b = is_mixed(g, v, &b);
            match (on_a, on_b) {
                (true, true) => return None,
                (true, false) if b.is_subset(g.neighbors(v)) => {
                    b.insert(v);
                    grew = true;
                }
                (false, true) if a.is_subset(g.neighbors(v)) => {
                    a.insert(v);
                    grew = true;
                }
                (false, false) => {}
                _ => return None,
            }
        }
        if !grew {
            return Some((a, b));
        }
    }
}

/// The first non-reduced W-join, seeded from pairs of disjoint edges (in
/// lexicographic order) whose four cross adjacencies already rule out a
/// block pattern.
pub fn find_nonreduced_wjoin(g: &Graph) -> Option<WJoin> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(a1, a2) in &edges {
        for &(b1, b2) in &edges {
            if [b1, b2].iter().any(|&x| x == a1 || x == a2) {
                continue;
            }
            let pattern = [
                [g.has_edge(a1, b1), g.has_edge(a1, b2)],
                [g.has_edge(a2, b1), g.has_edge(a2, b2)],
            ];
            let ones = pattern.iter().flatten().filter(|&&x| x).count();
            // A 2x2 block pattern has 0, 1, 2 (in one row or column) or 4 ones.
            let diagonal = ones == 2 && pattern[0][0] == pattern[1][1];
            if ones != 3 && !diagonal {
                continue;
            }
            if let Some((a, b)) = close(g, VertexSet::from([a1, a2]), VertexSet::from([b1, b2])) {
                if let Some(w) = WJoin::new(g, a, b) {
                    debug_assert!(!w.reduced);
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Sides above this size make the block enumeration too large.
const REDUCE_SIDE_LIMIT: usize = 16;

/// Replaces the cross edges of a non-reduced W-join by a block A1 × B1
/// inside them, keeping χ and claw-freeness. Blocks are tried by edge
/// count, largest first, then by the lexicographically smallest list of
/// removed edges.
pub fn reduce_wjoin(g: &Graph, w: &WJoin, budget: Budget) -> Result<Graph, EngineError> {
    let Some(current) = WJoin::new(g, w.a, w.b) else {
        return Err(EngineError::NotNonReduced(format!("({:?}, {:?}) is not a W-join", w.a, w.b)));
    };
    if current.reduced {
        return Err(EngineError::NotNonReduced(format!("({:?}, {:?}) is already reduced", w.a, w.b)));
    }
    let (a, b) = (w.a.to_vec(), w.b.to_vec());
    if a.len() > REDUCE_SIDE_LIMIT || b.len() > REDUCE_SIDE_LIMIT {
        return Err(EngineError::TooLarge { n: a.len().max(b.len()), limit: REDUCE_SIDE_LIMIT });
    }
    let cross = cross_edges(g, &w.a, &w.b);
    let subsets = |items: &[usize]| -> Vec<VertexSet> {
        (1u32..1 << items.len())
            .map(|m| items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
            .collect()
    };
    let mut candidates: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for a1 in subsets(&a) {
        for b1 in subsets(&b) {
            let inside = cross.iter().filter(|&&(u, v)| {
                (a1.contains(u) && b1.contains(v)) || (a1.contains(v) && b1.contains(u))
            });
            if inside.count() != a1.len() * b1.len() {
                continue;
            }
            let removed: Vec<(usize, usize)> = cross
                .iter()
                .copied()
                .filter(|&(u, v)| !((a1.contains(u) && b1.contains(v)) || (a1.contains(v) && b1.contains(u))))
                .collect();
            candidates.push((a1.len() * b1.len(), removed));
        }
    }
    candidates.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    let (chi, _) = chromatic_number(g, budget)?;
    let claw_free = is_claw_free(g);
    for (_, removed) in candidates {
        let h = g.without_edges(&removed);
        if claw_free && !is_claw_free(&h) {
            continue;
        }
        if find_coloring(&h, chi - 1, budget)?.is_none() {
            return Ok(h);
        }
    }
    Err(EngineError::NoReduction { a: w.a, b: w.b })
}
