//! Three-cliqued graphs, worn hex-chains and generators for the classes
//! TC1..TC5.
//!
//! Semiadjacent pairs of the trigraph definitions are materialized as a
//! plain edge or non-edge (chosen by the caller's rng) and reported back in
//! `semiadjacent`, ready to be used as changeable pairs of a thickening.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::interval::{interval_graph, Arc, IntervalSpec};
use super::triangle_chain::{build_chain, random_params};
use super::{invalid, line_graph, Builder, FamilyError};
use crate::clawfree::{enumerate_triads, is_antiprismatic, PrismaticMode};
use crate::graph::{Graph, LabeledGraph, Labeling, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCliquedGraph {
    pub graph: LabeledGraph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    A,
    B,
    C,
}

impl ThreeCliquedGraph {
    pub fn new(graph: LabeledGraph, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<Self, FamilyError> {
        let t = ThreeCliquedGraph { graph, a, b, c };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let g = &self.graph.graph;
        let err = |m: &str| Err(FamilyError::ThreeCliqued(m.to_string()));
        for (name, s) in [("A", &self.a), ("B", &self.b), ("C", &self.c)] {
            if !g.is_clique(s) {
                return err(&format!("{name} is not a clique"));
            }
        }
        if self.a.intersects(&self.b) || self.a.intersects(&self.c) || self.b.intersects(&self.c) {
            return err("A, B, C overlap");
        }
        if (self.a | self.b | self.c) != g.vertices() {
            return err("A, B, C do not cover V(G)");
        }
        Ok(())
    }

    pub fn part_of(&self, v: usize) -> Part {
        if self.a.contains(v) {
            Part::A
        } else if self.b.contains(v) {
            Part::B
        } else {
            Part::C
        }
    }

    pub fn parts(&self) -> [VertexSet; 3] {
        [self.a, self.b, self.c]
    }

    /// `(A', B', C') = (parts[perm[0]], parts[perm[1]], parts[perm[2]])`.
    pub fn permute(&self, perm: [usize; 3]) -> ThreeCliquedGraph {
        let p = self.parts();
        ThreeCliquedGraph {
            graph: self.graph.clone(),
            a: p[perm[0]],
            b: p[perm[1]],
            c: p[perm[2]],
        }
    }

    /// Vertices lying in some triad.
    pub fn triad_vertices(&self) -> VertexSet {
        enumerate_triads(&self.graph.graph)
            .iter()
            .fold(VertexSet::new(), |acc, t| acc | *t)
    }

    pub fn every_vertex_in_triad(&self) -> bool {
        self.triad_vertices() == self.graph.graph.vertices()
    }
}

/// A wear edge of a hex-chain: `((i, u), (j, v))` joins local vertex `u` of
/// term `i` to local vertex `v` of term `j`, `i < j`.
pub type WearEdge = ((usize, usize), (usize, usize));

/// Worn hex-chain of `terms`. Vertex names are prefixed `t{i}:`.
pub fn hex_chain(terms: &[ThreeCliquedGraph], wear: &[WearEdge]) -> Result<ThreeCliquedGraph, FamilyError> {
    if terms.is_empty() {
        return Err(invalid("hex-chain needs at least one term"));
    }
    let mut offset = Vec::with_capacity(terms.len());
    let mut names = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        t.validate()?;
        offset.push(names.len());
        names.extend(t.graph.labels.names().iter().map(|s| {
            if terms.len() == 1 {
                s.clone()
            } else {
                format!("t{i}:{s}")
            }
        }));
    }
    if names.len() > crate::graph::MAX_VERTICES {
        return Err(invalid("hex-chain too large"));
    }
    let shift = |i: usize, s: &VertexSet| s.iter().map(|v| v + offset[i]).collect::<VertexSet>();
    let mut edges = Vec::new();
    let (mut a, mut b, mut c) = (VertexSet::new(), VertexSet::new(), VertexSet::new());
    for (i, t) in terms.iter().enumerate() {
        edges.extend(t.graph.graph.edges().map(|(u, v)| (u + offset[i], v + offset[i])));
        a |= shift(i, &t.a);
        b |= shift(i, &t.b);
        c |= shift(i, &t.c);
    }
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            let (ti, tj) = (&terms[i], &terms[j]);
            let vj = tj.graph.graph.vertices();
            for (from, to) in [(ti.a, vj - tj.b), (ti.b, vj - tj.c), (ti.c, vj - tj.a)] {
                for u in &from {
                    for v in &to {
                        edges.push((u + offset[i], v + offset[j]));
                    }
                }
            }
        }
    }
    let triads: Vec<VertexSet> = terms.iter().map(|t| t.triad_vertices()).collect();
    for &((i, u), (j, v)) in wear {
        if i >= j || j >= terms.len() || u >= terms[i].graph.graph.n() || v >= terms[j].graph.graph.n() {
            return Err(invalid(format!("wear edge ({i},{u})-({j},{v}) out of range")));
        }
        let kinds = (terms[i].part_of(u), terms[j].part_of(v));
        if !matches!(kinds, (Part::A, Part::B) | (Part::B, Part::C) | (Part::C, Part::A)) {
            return Err(invalid(format!("wear edge ({i},{u})-({j},{v}) joins {kinds:?}, not a worn pair")));
        }
        if triads[i].contains(u) || triads[j].contains(v) {
            return Err(invalid(format!("wear edge ({i},{u})-({j},{v}) touches a triad vertex")));
        }
        edges.push((u + offset[i], v + offset[j]));
    }
    let g = Graph::new(names.len(), &edges).map_err(|e| invalid(e.to_string()))?;
    ThreeCliquedGraph::new(LabeledGraph::new(g, Labeling::new(names)), a, b, c)
}

/// A generated class member plus its semiadjacent pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcInstance {
    pub class: u8,
    pub tc: ThreeCliquedGraph,
    pub semiadjacent: Vec<(usize, usize)>,
}

fn require_triads(class: u8, tc: ThreeCliquedGraph, semiadjacent: Vec<(usize, usize)>) -> Result<TcInstance, FamilyError> {
    if !tc.every_vertex_in_triad() {
        return Err(invalid(format!("TC{class} member has a vertex in no triad")));
    }
    Ok(TcInstance { class, tc, semiadjacent })
}

/// TC1 from `counts[t]` = number of vertices of `H` other than `v1, v2, v3`
/// whose neighbor set is the nonempty type `t` (bit `i` = adjacent to
/// `v_{i+1}`), `t` in `1..8`. Slot 0 is ignored.
pub fn tc1(counts: &[usize; 8]) -> Result<TcInstance, FamilyError> {
    for i in 0..3 {
        let deg: usize = (1..8).filter(|t| t & (1 << i) != 0).map(|t| counts[t]).sum();
        if deg < 3 {
            return Err(invalid(format!("v{} has degree {deg} < 3", i + 1)));
        }
        for j in 0..3 {
            if i == j {
                continue;
            }
            let lonely: usize = (1..8)
                .filter(|t| t & (1 << i) != 0 && t & (1 << j) == 0)
                .map(|t| counts[t])
                .sum();
            if lonely > 1 {
                return Err(invalid(format!("{lonely} vertices see v{} but not v{}", i + 1, j + 1)));
            }
        }
    }
    let mut edges = Vec::new();
    let mut next = 3;
    for t in 1..8usize {
        for _ in 0..counts[t] {
            for i in 0..3 {
                if t & (1 << i) != 0 {
                    edges.push((i, next));
                }
            }
            next += 1;
        }
    }
    let h = Graph::new(next, &edges).map_err(|e| invalid(e.to_string()))?;
    let (lg, ends) = line_graph(&h);
    let part = |i: usize| ends.iter().enumerate().filter(|(_, &(u, _))| u == i).map(|(k, _)| k).collect();
    let tc = ThreeCliquedGraph::new(lg, part(0), part(1), part(2))?;
    require_triads(1, tc, Vec::new())
}

pub fn random_tc1<R: Rng>(rng: &mut R) -> Result<TcInstance, FamilyError> {
    for _ in 0..200 {
        let mut counts = [0usize; 8];
        counts[7] = rng.gen_range(3..=4);
        for t in [1usize, 2, 4, 3, 5, 6] {
            if rng.gen_bool(0.4) {
                counts[t] = 1;
            }
        }
        if let Ok(inst) = tc1(&counts) {
            return Ok(inst);
        }
    }
    Err(invalid("no TC1 parameters found"))
}

/// TC2: a long circular interval graph whose points split into three
/// consecutive runs, each inside one interval. `runs` gives the run sizes,
/// `extra` further intervals as `(first point, point count)`.
pub fn tc2(runs: [usize; 3], extra: &[(usize, usize)]) -> Result<TcInstance, FamilyError> {
    let m: usize = runs.iter().sum();
    if runs.contains(&0) {
        return Err(invalid("TC2 runs must be nonempty"));
    }
    // Point p sits at 8p; every interval gets its own endpoint offsets so no
    // two share an endpoint.
    let length = 8 * m;
    let mut intervals = Vec::new();
    let mut first = 0;
    for &r in &runs {
        let last = first + r - 1;
        intervals.push(Arc { start: (8 * first + length - 1) % length, end: 8 * last + 1 });
        first += r;
    }
    for (k, &(s, len)) in extra.iter().enumerate() {
        if len < 2 || len > m || s >= m {
            return Err(invalid(format!("extra interval {k} out of range")));
        }
        let d = 2 + (k % 5);
        let e = (s + len - 1) % m;
        intervals.push(Arc { start: (8 * s + length - d) % length, end: (8 * e + d) % length });
    }
    let spec = IntervalSpec {
        circular: true,
        length,
        points: (0..m).map(|p| 8 * p).collect(),
        intervals,
        fuzzy: Vec::new(),
    };
    let g = interval_graph(&spec)?;
    let mut parts = [VertexSet::new(); 3];
    let mut v = 0;
    for (i, &r) in runs.iter().enumerate() {
        for _ in 0..r {
            parts[i].insert(v);
            v += 1;
        }
    }
    let tc = ThreeCliquedGraph::new(g, parts[0], parts[1], parts[2])?;
    require_triads(2, tc, Vec::new())
}

pub fn random_tc2<R: Rng>(rng: &mut R) -> Result<TcInstance, FamilyError> {
    for _ in 0..500 {
        let runs = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)];
        let m: usize = runs.iter().sum();
        let k = rng.gen_range(0..=3);
        let extra: Vec<(usize, usize)> = (0..k).map(|_| (rng.gen_range(0..m), rng.gen_range(2..=3.min(m)))).collect();
        if let Ok(inst) = tc2(runs, &extra) {
            return Ok(inst);
        }
    }
    Err(invalid("no TC2 parameters found"))
}

/// The core graph of the second strip family: cliques `a_0..a_n`,
/// `b_0..b_n`, `c_1..c_n`, minus the named vertices in `x`.
pub(crate) fn z2_core(n: usize, x: &[&str]) -> Result<(LabeledGraph, [VertexSet; 3]), FamilyError> {
    if n < 2 {
        return Err(invalid("Z2 needs n >= 2"));
    }
    let mut bl = Builder::new();
    let a: Vec<usize> = (0..=n).map(|i| bl.vertex(format!("a{i}"))).collect();
    let b: Vec<usize> = (0..=n).map(|i| bl.vertex(format!("b{i}"))).collect();
    let c: Vec<usize> = (1..=n).map(|i| bl.vertex(format!("c{i}"))).collect();
    bl.clique(&a);
    bl.clique(&b);
    bl.clique(&c);
    for i in 1..=n {
        bl.edge(a[i], b[i]);
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                bl.edge(c[i - 1], a[j]);
                bl.edge(c[i - 1], b[j]);
            }
        }
    }
    let full = bl.build();
    let mut drop = VertexSet::new();
    for name in x {
        let v = full.labels.id(name).ok_or_else(|| invalid(format!("no vertex {name} in Z2 core")))?;
        if v == a[0] || v == b[0] {
            return Err(invalid("X may not contain a0 or b0"));
        }
        drop.insert(v);
    }
    let cset: VertexSet = c.iter().copied().collect();
    if (cset - drop).len() < 2 {
        return Err(invalid("|C \\ X| must be at least 2"));
    }
    let keep = full.graph.vertices() - drop;
    let (_, remap) = full.graph.induced(&keep);
    let g = full.induced(&keep);
    let mut parts = [VertexSet::new(); 3];
    for (new, &old) in remap.iter().enumerate() {
        let which = if a.contains(&old) {
            0
        } else if b.contains(&old) {
            1
        } else {
            2
        };
        parts[which].insert(new);
    }
    Ok((g, parts))
}

/// TC3 through the core graph of the second strip family.
pub fn tc3(n: usize, x: &[&str]) -> Result<TcInstance, FamilyError> {
    let (g, [a, b, c]) = z2_core(n, x)?;
    let tc = ThreeCliquedGraph::new(g, a, b, c)?;
    require_triads(3, tc, Vec::new())
}

pub fn random_tc3<R: Rng>(rng: &mut R) -> Result<TcInstance, FamilyError> {
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let pool: Vec<String> = (1..=n)
            .flat_map(|i| [format!("a{i}"), format!("b{i}"), format!("c{i}")])
            .collect();
        let chosen: Vec<&str> = pool.iter().filter(|_| rng.gen_bool(0.2)).map(String::as_str).collect();
        if let Ok(inst) = tc3(n, &chosen) {
            return Ok(inst);
        }
    }
    Err(invalid("no TC3 parameters found"))
}

/// TC4 passthrough: an antiprismatic graph with a partition into three
/// cliques.
pub fn tc4(graph: LabeledGraph, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<TcInstance, FamilyError> {
    if let Err(v) = is_antiprismatic(&graph.graph, PrismaticMode::Antiprismatic) {
        return Err(FamilyError::ThreeCliqued(format!("not antiprismatic: {v}")));
    }
    let tc = ThreeCliquedGraph::new(graph, a, b, c)?;
    Ok(TcInstance { class: 4, tc, semiadjacent: Vec::new() })
}

/// TC4 member: complement of a path of triangles with its canonical
/// three-coloring.
pub fn random_tc4<R: Rng>(rng: &mut R) -> Result<TcInstance, FamilyError> {
    let n = rng.gen_range(1..=3);
    let params = random_params(rng, false, n);
    let (spec, lg) = build_chain(&params, rng)?;
    let [a, b, c] = spec.canonical_coloring();
    tc4(LabeledGraph::new(lg.graph.complement(), lg.labels), a, b, c)
}

/// Parameters of the first sporadic family: which of `v3, v4` to delete
/// and how to materialize the semiadjacent pairs `v1v4`, `v3v6`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tc5First {
    pub drop_v3: bool,
    pub drop_v4: bool,
    pub v1v4: bool,
    pub v3v6: bool,
}

pub fn tc5_first(p: Tc5First) -> Result<TcInstance, FamilyError> {
    let mut bl = Builder::new();
    let v: Vec<usize> = std::iter::once(usize::MAX)
        .chain((1..=8).map(|i| bl.vertex(format!("v{i}"))))
        .collect();
    for i in 1..=6 {
        for j in i + 1..=(i + 2).min(6) {
            bl.edge(v[i], v[j]);
        }
    }
    bl.clique(&[v[1], v[6], v[7]]);
    bl.edge(v[7], v[8]);
    if p.v1v4 {
        bl.edge(v[1], v[4]);
    }
    if p.v3v6 {
        bl.edge(v[3], v[6]);
    }
    let full = bl.build();
    let mut drop = VertexSet::new();
    if p.drop_v3 {
        drop.insert(v[3]);
    }
    if p.drop_v4 {
        drop.insert(v[4]);
    }
    finish_tc5(&full, drop, [&[1, 2, 3], &[4, 5, 6], &[7, 8]], &[(1, 4), (3, 6)])
}

/// Parameters of the second sporadic family.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tc5Second {
    /// Deleted subset of `{v3, v4, v5, v6}`, bit `i` for `v_{i+3}`.
    pub drop: u8,
    pub v2v4: bool,
    pub v5v7: bool,
    pub v1v3: bool,
    pub v6v8: bool,
}

pub fn tc5_second(p: Tc5Second) -> Result<TcInstance, FamilyError> {
    let mut bl = Builder::new();
    let v: Vec<usize> = std::iter::once(usize::MAX)
        .chain((1..=9).map(|i| bl.vertex(format!("v{i}"))))
        .collect();
    bl.clique(&[v[1], v[2]]);
    bl.clique(&[v[3], v[4], v[5], v[6], v[9]]);
    bl.clique(&[v[7], v[8]]);
    bl.edge(v[9], v[1]);
    bl.edge(v[9], v[8]);
    bl.edge(v[1], v[8]);
    bl.edge(v[2], v[3]);
    bl.edge(v[6], v[7]);
    for (on, i, j) in [(p.v2v4, 2, 4), (p.v5v7, 5, 7), (p.v1v3, 1, 3), (p.v6v8, 6, 8)] {
        if on {
            bl.edge(v[i], v[j]);
        }
    }
    let full = bl.build();
    let g = &full.graph;
    let dropped = |i: usize| p.drop & (1 << (i - 3)) != 0;
    if p.drop >= 16 {
        return Err(invalid("drop bits beyond v6"));
    }
    let drop: VertexSet = (3..=6).filter(|&i| dropped(i)).map(|i| v[i]).collect();
    // Strongly adjacent means adjacent and not one of the semiadjacent pairs.
    let strong = |i: usize, j: usize| g.has_edge(v[i], v[j]) && !matches!((i.min(j), i.max(j)), (1, 3) | (6, 8));
    if [3, 4].iter().all(|&j| dropped(j) || !strong(2, j)) {
        return Err(invalid("v2 is strongly anticomplete to {v3,v4} \\ X"));
    }
    if [5, 6].iter().all(|&j| dropped(j) || !strong(7, j)) {
        return Err(invalid("v7 is strongly anticomplete to {v5,v6} \\ X"));
    }
    if !dropped(4) && !dropped(5) && !(p.v2v4 && p.v5v7) {
        return Err(invalid("with v4, v5 kept, v2v4 and v5v7 must be edges"));
    }
    let inst = finish_tc5(&full, drop, [&[1, 2], &[3, 4, 5, 6, 9], &[7, 8]], &[(1, 3), (6, 8)])?;
    Ok(inst)
}

fn finish_tc5(full: &LabeledGraph, drop: VertexSet, parts: [&[usize]; 3], semi: &[(usize, usize)]) -> Result<TcInstance, FamilyError> {
    let keep = full.graph.vertices() - drop;
    let (_, remap) = full.graph.induced(&keep);
    let g = full.induced(&keep);
    let mut inv = vec![None; full.graph.n()];
    for (new, &old) in remap.iter().enumerate() {
        inv[old] = Some(new);
    }
    // Names v1.. map to builder ids 0..
    let sets: Vec<VertexSet> = parts
        .iter()
        .map(|p| p.iter().filter_map(|&i| inv[i - 1]).collect())
        .collect();
    let semiadjacent = semi
        .iter()
        .filter_map(|&(i, j)| Some((inv[i - 1]?, inv[j - 1]?)))
        .collect();
    let tc = ThreeCliquedGraph::new(g, sets[0], sets[1], sets[2])?;
    require_triads(5, tc, semiadjacent)
}

pub fn random_tc5<R: Rng>(rng: &mut R) -> Result<TcInstance, FamilyError> {
    for _ in 0..200 {
        let r = if rng.gen_bool(0.5) {
            tc5_first(Tc5First {
                drop_v3: rng.gen_bool(0.3),
                drop_v4: rng.gen_bool(0.3),
                v1v4: rng.gen(),
                v3v6: rng.gen(),
            })
        } else {
            tc5_second(Tc5Second {
                drop: *[0u8, 1, 2, 4, 8, 3, 12].choose(rng).unwrap(),
                v2v4: rng.gen(),
                v5v7: rng.gen(),
                v1v3: rng.gen(),
                v6v8: rng.gen(),
            })
        };
        if let Ok(inst) = r {
            return Ok(inst);
        }
    }
    Err(invalid("no TC5 parameters found"))
}

pub fn random_tc<R: Rng>(rng: &mut R, class: u8) -> Result<TcInstance, FamilyError> {
    match class {
        1 => random_tc1(rng),
        2 => random_tc2(rng),
        3 => random_tc3(rng),
        4 => random_tc4(rng),
        5 => random_tc5(rng),
        _ => Err(invalid(format!("no class TC{class}"))),
    }
}
