//! Structural predicates on claw-free graphs: claws, triads, set shapes,
//! (anti)prismatic and orientability tests, k-substantiality, the core of a
//! graph and clique cutsets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::named;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{cliques_up_to, find_induced};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph is not prismatic: {0}")]
    NotPrismatic(FourSetViolation),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("k-substantiality is only decided for k <= 4, got {0}")]
    SubstantialityCap(usize),
}

/// An induced K1,3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: VertexSet,
}

impl ClawWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        self.leaves.len() == 3
            && !self.leaves.contains(self.center)
            && self.leaves.is_subset(g.neighbors(self.center))
            && g.is_stable(&self.leaves)
    }
}

/// The first claw in (center, leaves) lexicographic order.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for center in &g.vertices() {
        let nb = *g.neighbors(center);
        for a in &nb {
            let r1 = nb.above(a) - *g.neighbors(a);
            for b in &r1 {
                let r2 = r1.above(b) - *g.neighbors(b);
                if let Some(c) = r2.first() {
                    return Some(ClawWitness {
                        center,
                        leaves: VertexSet::from([a, b, c]),
                    });
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// Every stable 3-set, in lexicographic order.
pub fn enumerate_triads(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for a in &g.vertices() {
        let r1 = g.vertices().above(a) - *g.neighbors(a);
        for b in &r1 {
            for c in &(r1.above(b) - *g.neighbors(b)) {
                out.push(VertexSet::from([a, b, c]));
            }
        }
    }
    out
}

/// Every triangle, in lexicographic order.
pub fn enumerate_triangles(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for a in &g.vertices() {
        let r1 = g.neighbors(a).above(a);
        for b in &r1 {
            for c in &(r1.above(b) & *g.neighbors(b)) {
                out.push(VertexSet::from([a, b, c]));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetShape {
    pub is_clique: bool,
    pub is_stable: bool,
    pub is_antimatching: bool,
    pub is_cobipartite: bool,
}

pub fn is_antimatching(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|v| (*s - *g.neighbors(v)).len() <= 2) // v itself plus at most one
}

/// `s` splits into two cliques, i.e. the complement of `g|s` is bipartite.
pub fn is_cobipartite(g: &Graph, s: &VertexSet) -> bool {
    let mut side = [VertexSet::new(), VertexSet::new()];
    let mut unseen = *s;
    while let Some(root) = unseen.first() {
        let mut stack = vec![(root, 0usize)];
        unseen.remove(root);
        side[0].insert(root);
        while let Some((v, sd)) = stack.pop() {
            let anti = (*s - *g.neighbors(v)) - VertexSet::singleton(v);
            if anti.intersects(&side[sd]) {
                return false;
            }
            for u in &(anti & unseen) {
                unseen.remove(u);
                side[1 - sd].insert(u);
                stack.push((u, 1 - sd));
            }
        }
    }
    true
}

pub fn set_shape(g: &Graph, s: &VertexSet) -> SetShape {
    SetShape {
        is_clique: g.is_clique(s),
        is_stable: g.is_stable(s),
        is_antimatching: is_antimatching(g, s),
        is_cobipartite: is_cobipartite(g, s),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrismaticMode {
    Antiprismatic,
    /// The complement is antiprismatic.
    Prismatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FourSetDefect {
    /// The 4-set induces a claw (in the complement, for prismatic mode).
    Claw,
    /// Fewer than two adjacent pairs (in the complement, for prismatic mode).
    TooFewEdges,
}

/// A 4-set that breaks the antiprismatic condition. Vertex ids refer to
/// the tested graph; the defect is stated for the graph the condition
/// applies to (the complement in prismatic mode).
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[error("4-set {set:?}: {defect:?}")]
pub struct FourSetViolation {
    pub set: VertexSet,
    pub defect: FourSetDefect,
}

/// Checks every 4-subset; returns the first violation in lexicographic
/// order.
pub fn is_antiprismatic(g: &Graph, mode: PrismaticMode) -> Result<(), FourSetViolation> {
    let h;
    let g = match mode {
        PrismaticMode::Antiprismatic => g,
        PrismaticMode::Prismatic => {
            h = g.complement();
            &h
        }
    };
    let n = g.n();
    let adj = |u: usize, v: usize| g.has_edge(u, v) as usize;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let abc = adj(a, b) + adj(a, c) + adj(b, c);
                for d in c + 1..n {
                    let degs = [
                        adj(a, b) + adj(a, c) + adj(a, d),
                        adj(a, b) + adj(b, c) + adj(b, d),
                        adj(a, c) + adj(b, c) + adj(c, d),
                        adj(a, d) + adj(b, d) + adj(c, d),
                    ];
                    let edges = abc + adj(a, d) + adj(b, d) + adj(c, d);
                    let defect = if edges < 2 {
                        Some(FourSetDefect::TooFewEdges)
                    } else if edges == 3 && degs.contains(&3) {
                        Some(FourSetDefect::Claw)
                    } else {
                        None
                    };
                    if let Some(defect) = defect {
                        return Err(FourSetViolation {
                            set: VertexSet::from([a, b, c, d]),
                            defect,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn is_prismatic(g: &Graph) -> bool {
    is_antiprismatic(g, PrismaticMode::Prismatic).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    Rotator,
    Twister,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientability {
    Orientable,
    /// An induced rotator or twister; `map[i]` is the image of pattern
    /// vertex `i` in the labeling of the named family.
    NonOrientable { obstruction: Obstruction, map: Vec<usize> },
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::Orientable)
    }
}

/// A prismatic graph is orientable iff it has no induced rotator or twister.
pub fn is_orientable_prismatic(g: &Graph) -> Result<Orientability, AnalysisError> {
    is_antiprismatic(g, PrismaticMode::Prismatic).map_err(AnalysisError::NotPrismatic)?;
    for (obstruction, pattern) in [
        (Obstruction::Rotator, named::rotator().graph),
        (Obstruction::Twister, named::twister().graph),
    ] {
        if let Some(map) = find_induced(g, &pattern) {
            return Ok(Orientability::NonOrientable { obstruction, map });
        }
    }
    Ok(Orientability::Orientable)
}

/// `None` if every set of fewer than `k` vertices misses some triad;
/// otherwise a set of size `< k` meeting every triad. Decided by a bounded
/// hitting-set search, so the returned set is minimal in size.
pub fn substantiality_violation(g: &Graph, k: usize) -> Result<Option<VertexSet>, AnalysisError> {
    if k > 4 {
        return Err(AnalysisError::SubstantialityCap(k));
    }
    let triads = enumerate_triads(g);
    fn hit(triads: &[VertexSet], s: VertexSet, room: usize) -> Option<VertexSet> {
        let Some(t) = triads.iter().find(|t| t.is_disjoint(&s)) else {
            return Some(s);
        };
        if room == 0 {
            return None;
        }
        t.iter().find_map(|v| {
            let mut s2 = s;
            s2.insert(v);
            hit(triads, s2, room - 1)
        })
    }
    if k == 0 {
        return Ok(None);
    }
    // Smallest hitting set first.
    Ok((0..k).find_map(|room| hit(&triads, VertexSet::new(), room)))
}

pub fn is_k_substantial(g: &Graph, k: usize) -> Result<bool, AnalysisError> {
    Ok(substantiality_violation(g, k)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub core: VertexSet,
    pub strong_core: VertexSet,
    /// Vertices b in some triangle {a,b,c} where b and c each lie in
    /// exactly one triangle.
    pub weak: VertexSet,
    /// The looser reading: every vertex lying in exactly one triangle.
    pub in_one_triangle: VertexSet,
    pub triangles: Vec<VertexSet>,
}

pub fn core_strong_core(g: &Graph) -> CoreReport {
    let triangles = enumerate_triangles(g);
    let mut count = vec![0usize; g.n()];
    let mut core = VertexSet::new();
    for t in &triangles {
        for v in t {
            count[v] += 1;
        }
        core |= *t;
    }
    let in_one_triangle: VertexSet = core.iter().filter(|&v| count[v] == 1).collect();
    let mut weak = VertexSet::new();
    for t in &triangles {
        let lonely = *t & in_one_triangle;
        if lonely.len() >= 2 {
            weak |= lonely;
        }
    }
    CoreReport {
        core,
        strong_core: core - weak,
        weak,
        in_one_triangle,
        triangles,
    }
}

/// A clique `k` whose removal separates `a` from `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub k: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
}

impl CliqueCutset {
    pub fn verify(&self, g: &Graph) -> bool {
        g.is_clique(&self.k)
            && !self.a.is_empty()
            && !self.b.is_empty()
            && self.a.is_disjoint(&self.b)
            && (self.a | self.b | self.k) == g.vertices()
            && (self.a | self.b).is_disjoint(&self.k)
            && self.a.iter().all(|v| g.neighbors(v).is_disjoint(&self.b))
    }
}

const SEPARATOR_ENUMERATION_LIMIT: usize = 64;
const MAX_SEPARATORS: usize = 200_000;
const FALLBACK_CLIQUE_SIZE: usize = 5;

/// All minimal separators, closed under the Berry-Bordat-Cogis generation
/// step. `None` if more than `MAX_SEPARATORS` exist.
fn minimal_separators(g: &Graph) -> Option<Vec<VertexSet>> {
    use std::collections::HashSet;
    let all = g.vertices();
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue = Vec::new();
    let push_from = |removed: VertexSet, seen: &mut HashSet<VertexSet>, queue: &mut Vec<_>| {
        for comp in g.components_within(&(all - removed)) {
            let sep = g.neighborhood(&comp) - comp;
            if !sep.is_empty() && seen.insert(sep) {
                queue.push(sep);
            }
        }
    };
    for v in &g.vertices() {
        let mut closed = *g.neighbors(v);
        closed.insert(v);
        push_from(closed, &mut seen, &mut queue);
    }
    let mut i = 0;
    while i < queue.len() {
        if queue.len() > MAX_SEPARATORS {
            return None;
        }
        let s = queue[i];
        for x in &s {
            push_from(s | *g.neighbors(x), &mut seen, &mut queue);
        }
        i += 1;
    }
    // Only separators with at least two full components are minimal; the
    // generation step produces exactly those, but keep the check explicit.
    queue.retain(|s| {
        g.components_within(&(all - *s))
            .iter()
            .filter(|c| (g.neighborhood(c) - **c) == *s)
            .count()
            >= 2
    });
    Some(queue)
}

fn split(g: &Graph, k: VertexSet) -> Option<CliqueCutset> {
    let comps = g.components_within(&(g.vertices() - k));
    if comps.len() < 2 {
        return None;
    }
    let a = *comps.iter().min_by_key(|c| c.first()).expect("two components");
    let b = g.vertices() - k - a;
    Some(CliqueCutset { k, a, b })
}

/// The smallest clique cutset (ties broken lexicographically), with `a` the
/// component of `g \ k` holding the lowest vertex and `b` the rest. Graphs
/// above 64 vertices only try cliques of size at most 5.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CliqueCutset>, AnalysisError> {
    if !g.is_connected() {
        return Err(AnalysisError::Disconnected);
    }
    if g.n() <= SEPARATOR_ENUMERATION_LIMIT {
        if let Some(mut seps) = minimal_separators(g) {
            seps.retain(|s| g.is_clique(s));
            seps.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.to_vec().cmp(&y.to_vec())));
            return Ok(seps.into_iter().find_map(|s| split(g, s)));
        }
    }
    Ok(cliques_up_to(g, FALLBACK_CLIQUE_SIZE)
        .into_iter()
        .find_map(|k| split(g, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (i, rim)));
        Graph::new(rim + 1, &edges).unwrap()
    }

    fn star() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    }

    #[test]
    fn claws() {
        let w = find_claw(&star()).unwrap();
        assert_eq!(w.center, 0);
        assert!(w.verify(&star()));
        assert!(find_claw(&wheel(5)).is_none());
        let petersen = crate::graph::decode_graph6("IheA@GUAo").unwrap();
        assert!(find_claw(&petersen).unwrap().verify(&petersen));
    }

    #[test]
    fn triads() {
        assert!(enumerate_triads(&Graph::cycle(5)).is_empty());
        assert_eq!(enumerate_triads(&Graph::empty(3).unwrap()).len(), 1);
        let rot = named::rotator();
        let triads = enumerate_triads(&rot.graph.complement());
        let expected: Vec<VertexSet> = vec![
            rot.labels.ids(&["v1", "v2", "v3"]),
            rot.labels.ids(&["v1", "v4", "v7"]),
            rot.labels.ids(&["v2", "v5", "v8"]),
            rot.labels.ids(&["v3", "v6", "v9"]),
        ];
        assert_eq!(triads.len(), 4);
        for t in expected {
            assert!(triads.contains(&t));
        }
    }

    #[test]
    fn shapes() {
        let k4 = Graph::complete(4);
        let s = set_shape(&k4, &k4.vertices());
        assert!(s.is_clique && !s.is_stable && s.is_antimatching && s.is_cobipartite);
        // W5 with hub 5: C(v0) = {v1, v4, hub}.
        let w5 = wheel(5);
        let c = w5.common_neighbors(&VertexSet::singleton(0));
        assert_eq!(c.to_vec(), vec![1, 4, 5]);
        let s = set_shape(&w5, &c);
        assert!(s.is_antimatching && !s.is_clique);
        let c5 = Graph::cycle(5);
        let s = set_shape(&c5, &c5.vertices());
        assert!(!s.is_cobipartite && !s.is_antimatching);
    }

    #[test]
    fn shape_implications_on_all_small_graphs() {
        for n in 0..=6 {
            for g in all_graphs(n) {
                for mask in 0u32..1 << n {
                    let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    let sh = set_shape(&g, &s);
                    if sh.is_clique {
                        assert!(sh.is_antimatching);
                    }
                    if sh.is_antimatching && s.len() <= 3 {
                        assert!(sh.is_cobipartite);
                    }
                }
            }
        }
    }

    #[test]
    fn cobipartite_matches_brute_force() {
        for g in all_graphs(5) {
            let v = g.vertices();
            let brute = (0u32..32).any(|m| {
                let x: VertexSet = (0..5).filter(|&i| m >> i & 1 == 1).collect();
                g.is_clique(&x) && g.is_clique(&(v - x))
            });
            assert_eq!(brute, is_cobipartite(&g, &v));
        }
    }

    #[test]
    fn antiprismatic_examples() {
        assert!(is_antiprismatic(&Graph::cycle(5), PrismaticMode::Antiprismatic).is_ok());
        assert!(is_prismatic(&named::rotator().graph));
        let err = is_antiprismatic(&star(), PrismaticMode::Antiprismatic).unwrap_err();
        assert_eq!(err.defect, FourSetDefect::Claw);
        assert_eq!(err.set, star().vertices());
        for g in all_graphs(5) {
            assert_eq!(
                is_antiprismatic(&g, PrismaticMode::Antiprismatic).is_ok(),
                is_antiprismatic(&g.complement(), PrismaticMode::Prismatic).is_ok()
            );
        }
    }

    #[test]
    fn orientability() {
        let rot = named::rotator().graph;
        match is_orientable_prismatic(&rot).unwrap() {
            Orientability::NonOrientable { obstruction, map } => {
                assert_eq!(obstruction, Obstruction::Rotator);
                assert!(crate::solvers::is_induced_embedding(&rot, &rot, &map));
            }
            o => panic!("{o:?}"),
        }
        let tw = named::twister().graph;
        assert!(is_prismatic(&tw));
        assert!(matches!(
            is_orientable_prismatic(&tw).unwrap(),
            Orientability::NonOrientable { obstruction: Obstruction::Twister, .. }
        ));
        // C5 is self-complementary hence prismatic.
        assert!(is_orientable_prismatic(&Graph::cycle(5)).unwrap().is_orientable());
        // K1,3 has no triangle and so is prismatic; the diamond is not.
        assert!(is_orientable_prismatic(&star()).unwrap().is_orientable());
        let diamond = Graph::complete(4).without_edges(&[(2, 3)]);
        assert!(matches!(
            is_orientable_prismatic(&diamond),
            Err(AnalysisError::NotPrismatic(_))
        ));
    }

    #[test]
    fn substantiality() {
        assert_eq!(
            substantiality_violation(&Graph::cycle(5), 1).unwrap(),
            Some(VertexSet::new())
        );
        let co_rot = named::rotator().graph.complement();
        assert!(is_k_substantial(&co_rot, 2).unwrap());
        // Three of the four triads are pairwise disjoint, and {v1,v2,v3}
        // meets all four.
        assert!(is_k_substantial(&co_rot, 3).unwrap());
        let s = substantiality_violation(&co_rot, 4).unwrap().unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_k_substantial(&Graph::empty(3).unwrap(), 1).unwrap());
        assert!(matches!(
            is_k_substantial(&co_rot, 5),
            Err(AnalysisError::SubstantialityCap(5))
        ));
    }

    #[test]
    fn cores() {
        let r = core_strong_core(&Graph::cycle(6));
        assert!(r.core.is_empty());
        let rot = named::rotator();
        let r = core_strong_core(&rot.graph);
        assert_eq!(r.core, rot.graph.vertices());
        assert_eq!(r.strong_core, rot.labels.ids(&["v1", "v2", "v3"]));
        let r = core_strong_core(&Graph::complete(4));
        assert_eq!(r.core.len(), 4);
        assert!(r.weak.is_empty());
        assert_eq!(r.strong_core | r.weak, r.core);
        assert!(r.strong_core.is_disjoint(&r.weak));
    }

    #[test]
    fn weak_readings_differ() {
        // Triangle 0-1-2 plus triangle 1-2-3 plus triangle 2-3-4... vertex 0
        // lies in one triangle but its partners 1, 2 lie in two.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = core_strong_core(&g);
        assert!(r.in_one_triangle.contains(0));
        assert!(!r.weak.contains(0));
    }

    #[test]
    fn clique_cutsets() {
        let c = find_clique_cutset(&Graph::path(3)).unwrap().unwrap();
        assert_eq!((c.k.to_vec(), c.a.to_vec(), c.b.to_vec()), (vec![1], vec![0], vec![2]));
        assert!(find_clique_cutset(&Graph::cycle(5)).unwrap().is_none());
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = find_clique_cutset(&bowtie).unwrap().unwrap();
        assert_eq!(c.k.to_vec(), vec![2]);
        assert!(c.verify(&bowtie));
        assert!(matches!(
            find_clique_cutset(&Graph::empty(2).unwrap()),
            Err(AnalysisError::Disconnected)
        ));
        assert!(find_clique_cutset(&Graph::complete(4)).unwrap().is_none());
    }

    #[test]
    fn clique_cutset_matches_brute_force() {
        for n in 1..=6 {
            for g in all_graphs(n).filter(Graph::is_connected) {
                let brute = (0u32..1 << n).any(|m| {
                    let k: VertexSet = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                    g.is_clique(&k) && g.components_within(&(g.vertices() - k)).len() >= 2
                });
                let found = find_clique_cutset(&g).unwrap();
                assert_eq!(brute, found.is_some(), "{g:?}");
                if let Some(c) = found {
                    assert!(c.verify(&g));
                }
            }
        }
    }
}
