//! Brute-force oracles. Deliberately naive: they share no code with the
//! solvers they check.

#![allow(dead_code)]

use rand::Rng;
use tihany::{Graph, VertexSet};

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).contains(v)
}

/// Fewest blocks in a partition of V into stable sets, over all set
/// partitions (restricted growth strings).
pub fn chromatic(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, color: &mut Vec<usize>, used: usize, best: &mut usize) {
        if used >= *best {
            return;
        }
        if v == g.n() {
            *best = used;
            return;
        }
        for c in 0..=used {
            if (0..v).any(|u| color[u] == c && adjacent(g, u, v)) {
                continue;
            }
            color.push(c);
            rec(g, v + 1, color, used.max(c + 1), best);
            color.pop();
        }
    }
    let mut best = g.n();
    rec(g, 0, &mut Vec::new(), 0, &mut best);
    best
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn clique_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| adjacent(g, u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn stability_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Size of a maximum matching and the set of vertices left exposed by at
/// least one maximum matching, over every matching.
pub fn matchings(g: &Graph) -> (usize, VertexSet) {
    fn rec(g: &Graph, v: usize, decided: &mut Vec<bool>, covered: &mut Vec<bool>, size: usize, best: &mut usize, missed: &mut VertexSet) {
        let n = g.n();
        let mut v = v;
        while v < n && decided[v] {
            v += 1;
        }
        if v == n {
            if size > *best {
                *best = size;
                *missed = VertexSet::new();
            }
            if size == *best {
                missed.extend((0..n).filter(|&u| !covered[u]));
            }
            return;
        }
        decided[v] = true;
        rec(g, v + 1, decided, covered, size, best, missed);
        for u in v + 1..n {
            if !decided[u] && adjacent(g, u, v) {
                decided[u] = true;
                covered[u] = true;
                covered[v] = true;
                rec(g, v + 1, decided, covered, size + 1, best, missed);
                decided[u] = false;
                covered[u] = false;
                covered[v] = false;
            }
        }
        decided[v] = false;
    }
    let n = g.n();
    let (mut best, mut missed) = (0, VertexSet::new());
    rec(g, 0, &mut vec![false; n], &mut vec![false; n], 0, &mut best, &mut missed);
    (best, missed)
}

pub fn has_claw(g: &Graph) -> bool {
    let n = g.n();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    if [a, b, d].contains(&c) {
                        continue;
                    }
                    if adjacent(g, c, a)
                        && adjacent(g, c, b)
                        && adjacent(g, c, d)
                        && !adjacent(g, a, b)
                        && !adjacent(g, a, d)
                        && !adjacent(g, b, d)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// χ(G \ K) ≥ χ(G) − |K| + 1, both sides by brute force.
pub fn is_tihany(g: &Graph, k: &VertexSet) -> bool {
    let (h, _) = g.remove(k);
    chromatic(&h) + k.len() > chromatic(g)
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| adjacent(g, u, v)))
}

/// All cliques of size 1..=max in (size, lexicographic) order.
pub fn cliques(g: &Graph, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = subsets(g.n()).filter(|s| !s.is_empty() && s.len() <= max && is_clique(g, s)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
