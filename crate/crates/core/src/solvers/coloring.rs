//! Exact vertex coloring.
//!
//! The decision procedure is a DSATUR backtracking search: the next vertex
//! is the uncolored one with the most distinct neighbor colors (ties: most
//! uncolored neighbors, then lowest id), a new color is opened at most once
//! per node, and a clique is pre-colored to break symmetry. The chromatic
//! number climbs from the clique bound towards a greedy DSATUR upper bound,
//! so every value below the answer is refuted by an exhausted search.

use serde::{Deserialize, Serialize};

use super::budget::{Budget, Meter, SolveError};
use super::clique::{clique_number, greedy_clique};
use crate::graph::{Graph, VertexSet};

/// A partition of the vertex set into color classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<VertexSet>,
}

impl Coloring {
    pub fn new(classes: Vec<VertexSet>) -> Coloring {
        Coloring { classes }
    }

    /// From a color index per vertex, with `k` classes.
    pub fn from_colors(colors: &[usize], k: usize) -> Coloring {
        let mut classes = vec![VertexSet::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].insert(v);
        }
        Coloring { classes }
    }

    /// Number of classes, including any empty ones.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<VertexSet> {
        self.classes
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// Classes are pairwise disjoint, stable, and cover `0..g.n()`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        for class in &self.classes {
            if seen.intersects(class) || !g.is_stable(class) {
                return false;
            }
            seen |= *class;
        }
        seen == g.vertices()
    }

    /// Rewrites vertex ids through `remap` (new id = `remap[old]`), e.g. to
    /// lift a coloring of an induced subgraph back to the host graph.
    pub fn remapped(&self, remap: &[usize]) -> Coloring {
        Coloring {
            classes: self
                .classes
                .iter()
                .map(|c| c.iter().map(|v| remap[v]).collect())
                .collect(),
        }
    }

    pub fn nonempty_classes(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_empty()).count()
    }
}

/// χ(g) with a witness coloring of exactly χ classes.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<(usize, Coloring), SolveError> {
    if g.n() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let (omega, clique) = clique_number(g);
    let greedy = greedy_dsatur(g);
    let upper = greedy.k();
    let mut meter = budget.meter();
    for k in omega..upper {
        if let Some(c) = Search::new(g, k, &clique).run(&mut meter)? {
            return Ok((k, c));
        }
    }
    Ok((upper, greedy))
}

/// A proper `k`-coloring of `g` if one exists. Exactly `k` classes are
/// returned; some may be empty when `g` has fewer than `k` vertices.
pub fn find_coloring(g: &Graph, k: usize, budget: Budget) -> Result<Option<Coloring>, SolveError> {
    let mut meter = budget.meter();
    find_coloring_metered(g, k, &mut meter)
}

pub(crate) fn find_coloring_metered(
    g: &Graph,
    k: usize,
    meter: &mut Meter,
) -> Result<Option<Coloring>, SolveError> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(vec![VertexSet::new(); k])));
    }
    if k == 0 {
        return Ok(None);
    }
    let clique = greedy_clique(g);
    Search::new(g, k, &clique).run(meter)
}

/// χ(g) ≥ `at_least`? Decided with one colorability test.
pub fn chromatic_at_least(g: &Graph, at_least: usize, budget: Budget) -> Result<bool, SolveError> {
    if at_least == 0 {
        return Ok(true);
    }
    Ok(find_coloring(g, at_least - 1, budget)?.is_none())
}

/// DSATUR greedy coloring (an upper bound on χ).
pub fn greedy_dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncolored = g.vertices();
    let mut neighbor_colors: Vec<Vec<bool>> = vec![Vec::new(); n];
    while !uncolored.is_empty() {
        let v = uncolored
            .iter()
            .max_by_key(|&v| {
                let sat = neighbor_colors[v].iter().filter(|&&b| b).count();
                (sat, g.neighbors(v).intersection_len(&uncolored), std::cmp::Reverse(v))
            })
            .expect("nonempty");
        let c = classes
            .iter()
            .position(|cls| cls.is_disjoint(g.neighbors(v)))
            .unwrap_or_else(|| {
                classes.push(VertexSet::new());
                classes.len() - 1
            });
        classes[c].insert(v);
        uncolored.remove(v);
        for u in g.neighbors(v) {
            if neighbor_colors[u].len() <= c {
                neighbor_colors[u].resize(c + 1, false);
            }
            neighbor_colors[u][c] = true;
        }
    }
    Coloring::new(classes)
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    color: Vec<usize>,
    /// forbidden[v * k + c]: number of colored neighbors of v with color c.
    forbidden: Vec<u32>,
    saturation: Vec<usize>,
    uncolored: VertexSet,
    used: usize,
    precolor: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, clique: &VertexSet) -> Search<'g> {
        Search {
            g,
            k,
            color: vec![NONE; g.n()],
            forbidden: vec![0; g.n() * k],
            saturation: vec![0; g.n()],
            uncolored: g.vertices(),
            used: 0,
            precolor: clique.to_vec(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.uncolored.remove(v);
        for u in self.g.neighbors(v) {
            let slot = &mut self.forbidden[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        self.uncolored.insert(v);
        for u in self.g.neighbors(v) {
            let slot = &mut self.forbidden[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn run(mut self, meter: &mut Meter) -> Result<Option<Coloring>, SolveError> {
        if self.precolor.len() > self.k {
            return Ok(None);
        }
        let pre = std::mem::take(&mut self.precolor);
        for (c, &v) in pre.iter().enumerate() {
            self.assign(v, c);
        }
        self.used = pre.len();
        if self.descend(meter)? {
            Ok(Some(Coloring::from_colors(&self.color, self.k)))
        } else {
            Ok(None)
        }
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in &self.uncolored {
            let key = (
                self.saturation[v],
                self.g.neighbors(v).intersection_len(&self.uncolored),
            );
            match best {
                Some((s, d, _)) if (s, d) >= key => {}
                _ => best = Some((key.0, key.1, v)),
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn descend(&mut self, meter: &mut Meter) -> Result<bool, SolveError> {
        meter.tick()?;
        let Some(v) = self.select() else {
            return Ok(true);
        };
        if self.saturation[v] == self.k {
            return Ok(false);
        }
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[v * self.k + c] != 0 {
                continue;
            }
            let opened = c == self.used;
            if opened {
                self.used += 1;
            }
            self.assign(v, c);
            let found = self.descend(meter)?;
            if found {
                return Ok(true);
            }
            self.unassign(v, c);
            if opened {
                self.used -= 1;
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (i, rim)));
        Graph::new(rim + 1, &edges).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        let b = Budget::default();
        assert_eq!(chromatic_number(&Graph::cycle(5), b).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::complete(4), b).unwrap().0, 4);
        assert_eq!(chromatic_number(&wheel(5), b).unwrap().0, 4);
        assert_eq!(chromatic_number(&wheel(6), b).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap(), b).unwrap().0, 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap(), b).unwrap().0, 1);
        let (k, c) = chromatic_number(&Graph::cycle(7), b).unwrap();
        assert_eq!(k, 3);
        assert!(c.is_proper(&Graph::cycle(7)));
        assert_eq!(c.k(), 3);
    }

    #[test]
    fn find_coloring_examples() {
        let b = Budget::default();
        assert!(find_coloring(&Graph::cycle(5), 2, b).unwrap().is_none());
        let c = find_coloring(&Graph::cycle(5), 3, b).unwrap().unwrap();
        assert!(c.is_proper(&Graph::cycle(5)));
        let c = find_coloring(&Graph::path(3), 2, b).unwrap().unwrap();
        let mut classes: Vec<Vec<usize>> = c.classes().iter().map(VertexSet::to_vec).collect();
        classes.sort();
        assert_eq!(classes, vec![vec![0, 2], vec![1]]);
        assert!(find_coloring(&Graph::path(3), 0, b).unwrap().is_none());
        let empty = find_coloring(&Graph::empty(0).unwrap(), 0, b).unwrap().unwrap();
        assert_eq!(empty.k(), 0);
        let padded = find_coloring(&Graph::empty(1).unwrap(), 3, b).unwrap().unwrap();
        assert_eq!((padded.k(), padded.nonempty_classes()), (3, 1));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // Grötzsch graph: triangle-free, χ = 4, so refuting 3 colors needs
        // real search.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        let grotzsch = Graph::new(11, &edges).unwrap();
        assert!(matches!(
            find_coloring(&grotzsch, 3, Budget::nodes(1)),
            Err(SolveError::BudgetExhausted { .. })
        ));
        assert_eq!(chromatic_number(&grotzsch, Budget::default()).unwrap().0, 4);

        let n = 12;
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        assert!(!chromatic_at_least(&g, 7, Budget::default()).unwrap());
        assert!(chromatic_at_least(&g, 6, Budget::default()).unwrap());
    }

    #[test]
    fn greedy_is_proper() {
        let g = wheel(7);
        let c = greedy_dsatur(&g);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn remapping_lifts_colorings() {
        let c5 = Graph::cycle(5);
        let k = VertexSet::from([0, 1]);
        let (rest, remap) = c5.remove(&k);
        let c = find_coloring(&rest, 2, Budget::default()).unwrap().unwrap();
        let lifted = c.remapped(&remap);
        let all: VertexSet = lifted.classes().iter().fold(VertexSet::new(), |a, c| a | *c);
        assert_eq!(all.to_vec(), vec![2, 3, 4]);
    }
}
