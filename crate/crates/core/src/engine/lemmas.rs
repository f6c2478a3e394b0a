//! Checkers for the sufficient conditions for a clique to be Tihany. Each
//! enumerates the configurations meeting a condition's hypotheses and
//! confirms the promised Tihany cliques with the exact solver.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::cutset::merge_cutset_colorings;
use super::tihany::is_tihany_with_chi;
use super::EngineError;
use crate::clawfree::{find_clique_cutset, is_claw_free, CliqueCutset};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{chromatic_number, clique_number, cliques_up_to, Budget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaKind {
    /// χ > ω and C(K) a clique.
    DenseClique,
    /// Braces ux, uy with xy a non-edge and C(ux) = C(uy).
    EqualNeighborhoods,
    /// Braces or triangles A, B with disjoint closed neighborhoods whose
    /// union has no triad: one of them is Tihany.
    DisjointNeighborhoods,
    /// Claw-free with a clique cutset: edges from the weaker side into the
    /// cutset are Tihany.
    CliqueCutset,
}

impl LemmaKind {
    pub fn name(&self) -> &'static str {
        match self {
            LemmaKind::DenseClique => "dense clique",
            LemmaKind::EqualNeighborhoods => "equal common neighborhoods",
            LemmaKind::DisjointNeighborhoods => "disjoint closed neighborhoods",
            LemmaKind::CliqueCutset => "clique cutset",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub cliques: Vec<VertexSet>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaKind,
    /// The graph-level hypotheses hold (χ > ω, and claw-free with a clique
    /// cutset where that is asked for).
    pub applicable: bool,
    /// Configurations checked.
    pub instances: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    fn new(lemma: LemmaKind) -> LemmaReport {
        LemmaReport { lemma, applicable: false, instances: 0, violations: Vec::new() }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// χ, ω and a memo of Tihany answers for one graph.
struct Ctx<'g> {
    g: &'g Graph,
    chi: usize,
    omega: usize,
    budget: Budget,
    memo: HashMap<VertexSet, bool>,
}

impl<'g> Ctx<'g> {
    fn new(g: &'g Graph, budget: Budget) -> Result<Ctx<'g>, EngineError> {
        let (chi, _) = chromatic_number(g, budget)?;
        Ok(Ctx { g, chi, omega: clique_number(g).0, budget, memo: HashMap::new() })
    }

    fn gap(&self) -> bool {
        self.chi > self.omega
    }

    fn tihany(&mut self, k: &VertexSet) -> Result<bool, EngineError> {
        if let Some(&t) = self.memo.get(k) {
            return Ok(t);
        }
        let t = is_tihany_with_chi(self.g, k, self.chi, self.budget)?.is_tihany();
        self.memo.insert(*k, t);
        Ok(t)
    }
}

/// Every dense clique of size at most `kmax` is Tihany when χ > ω.
pub fn check_dense_cliques(g: &Graph, kmax: usize, budget: Budget) -> Result<LemmaReport, EngineError> {
    let mut ctx = Ctx::new(g, budget)?;
    let mut report = LemmaReport::new(LemmaKind::DenseClique);
    if !ctx.gap() {
        return Ok(report);
    }
    report.applicable = true;
    for k in cliques_up_to(g, kmax) {
        if !g.is_clique(&g.common_neighbors(&k)) {
            continue;
        }
        report.instances += 1;
        if !ctx.tihany(&k)? {
            report.violations.push(LemmaViolation { cliques: vec![k], detail: "dense clique is not Tihany".into() });
        }
    }
    Ok(report)
}

/// Triples (u, x, y) with ux, uy edges, xy a non-edge (x < y) and
/// C({u,x}) = C({u,y}).
fn equal_neighborhood_triples(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in &g.vertices() {
        let nu = *g.neighbors(u);
        for x in &nu {
            let cx = g.common_neighbors(&VertexSet::from([u, x]));
            for y in &(nu.above(x) - *g.neighbors(x)) {
                if g.common_neighbors(&VertexSet::from([u, y])) == cx {
                    out.push((u, x, y));
                }
            }
        }
    }
    out
}

/// When χ > ω, both braces of every equal-neighborhood triple are Tihany.
pub fn check_equal_neighborhoods(g: &Graph, budget: Budget) -> Result<LemmaReport, EngineError> {
    let mut ctx = Ctx::new(g, budget)?;
    let mut report = LemmaReport::new(LemmaKind::EqualNeighborhoods);
    if !ctx.gap() {
        return Ok(report);
    }
    report.applicable = true;
    for (u, x, y) in equal_neighborhood_triples(g) {
        report.instances += 1;
        let e = VertexSet::from([u, x]);
        let f = VertexSet::from([u, y]);
        for brace in [e, f] {
            if !ctx.tihany(&brace)? {
                report.violations.push(LemmaViolation {
                    cliques: vec![e, f],
                    detail: format!("brace {brace:?} is not Tihany although C(E) = C(E')"),
                });
            }
        }
    }
    Ok(report)
}

fn has_triad_within(g: &Graph, s: &VertexSet) -> bool {
    s.iter().any(|u| {
        let far = s.above(u) - *g.neighbors(u);
        far.iter().any(|v| far.above(v).iter().any(|w| !g.has_edge(v, w)))
    })
}

fn closed(g: &Graph, k: &VertexSet) -> VertexSet {
    g.common_neighbors(k) | *k
}

fn disjoint_pairs(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let small: Vec<VertexSet> = cliques_up_to(g, 3).into_iter().filter(|k| k.len() >= 2).collect();
    let mut out = Vec::new();
    for (i, a) in small.iter().enumerate() {
        let ca = closed(g, a);
        for b in &small[i + 1..] {
            let cb = closed(g, b);
            if ca.is_disjoint(&cb) && !has_triad_within(g, &(ca | cb)) {
                out.push((*a, *b));
            }
        }
    }
    out
}

/// When χ > ω, for cliques A, B of size 2 or 3 whose closed neighborhoods
/// are disjoint with triad-free union, A or B is Tihany.
pub fn check_disjoint_neighborhoods(g: &Graph, budget: Budget) -> Result<LemmaReport, EngineError> {
    let mut ctx = Ctx::new(g, budget)?;
    let mut report = LemmaReport::new(LemmaKind::DisjointNeighborhoods);
    if !ctx.gap() {
        return Ok(report);
    }
    report.applicable = true;
    for (a, b) in disjoint_pairs(g) {
        report.instances += 1;
        if !ctx.tihany(&a)? && !ctx.tihany(&b)? {
            report.violations.push(LemmaViolation { cliques: vec![a, b], detail: "neither clique is Tihany".into() });
        }
    }
    Ok(report)
}

/// The cutset with sides ordered so that χ(G|(A∪K)) ≥ χ(G|(B∪K)), plus
/// both side chromatic numbers.
fn oriented_cutset(g: &Graph, budget: Budget) -> Result<Option<(CliqueCutset, usize, usize)>, EngineError> {
    let Some(mut cut) = find_clique_cutset(g)? else {
        return Ok(None);
    };
    let side = |s: &VertexSet| -> Result<usize, EngineError> {
        Ok(chromatic_number(&g.induced(&(*s | cut.k)).0, budget)?.0)
    };
    let (mut chi_a, mut chi_b) = (side(&cut.a)?, side(&cut.b)?);
    if chi_b > chi_a {
        std::mem::swap(&mut cut.a, &mut cut.b);
        std::mem::swap(&mut chi_a, &mut chi_b);
    }
    Ok(Some((cut, chi_a, chi_b)))
}

fn cutset_braces(g: &Graph, cut: &CliqueCutset) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for x in &cut.b {
        for y in &(*g.neighbors(x) & cut.k) {
            out.push(VertexSet::from([x, y]));
        }
    }
    out
}

/// For a connected claw-free graph with χ > ω and a clique cutset: the
/// merged side colorings use χ(G) colors, and every edge from the weaker
/// side into the cutset is Tihany. No such edge leaves nothing to check.
pub fn check_clique_cutset(g: &Graph, budget: Budget) -> Result<LemmaReport, EngineError> {
    let mut report = LemmaReport::new(LemmaKind::CliqueCutset);
    if g.n() == 0 || !g.is_connected() || !is_claw_free(g) {
        return Ok(report);
    }
    let mut ctx = Ctx::new(g, budget)?;
    if !ctx.gap() {
        return Ok(report);
    }
    let Some((cut, chi_a, _)) = oriented_cutset(g, budget)? else {
        return Ok(report);
    };
    report.applicable = true;
    let merged = merge_cutset_colorings(g, &cut.k, &cut.a, &cut.b, budget)?;
    if merged.k() != ctx.chi || chi_a != ctx.chi {
        report.violations.push(LemmaViolation {
            cliques: vec![cut.k],
            detail: format!("merged coloring uses {} colors, χ_A = {chi_a}, χ = {}", merged.k(), ctx.chi),
        });
    }
    for brace in cutset_braces(g, &cut) {
        report.instances += 1;
        if !ctx.tihany(&brace)? {
            report.violations.push(LemmaViolation {
                cliques: vec![brace, cut.k],
                detail: "edge from the weaker side into the cutset is not Tihany".into(),
            });
        }
    }
    Ok(report)
}

/// Which of the sufficient conditions above single out `k` as Tihany in
/// `g`. Empty when none applies (the clique was found by search alone).
pub fn certifying_reasons(g: &Graph, k: &VertexSet, budget: Budget) -> Result<Vec<LemmaKind>, EngineError> {
    if !g.is_clique(k) {
        return Err(EngineError::NotAClique(*k));
    }
    let mut ctx = Ctx::new(g, budget)?;
    let mut out = Vec::new();
    if !ctx.gap() {
        return Ok(out);
    }
    if g.is_clique(&g.common_neighbors(k)) {
        out.push(LemmaKind::DenseClique);
    }
    if k.len() == 2 && equal_neighborhood_triples(g).iter().any(|&(u, x, y)| {
        *k == VertexSet::from([u, x]) || *k == VertexSet::from([u, y])
    }) {
        out.push(LemmaKind::EqualNeighborhoods);
    }
    if (2..=3).contains(&k.len()) {
        for (a, b) in disjoint_pairs(g) {
            let other = if a == *k {
                b
            } else if b == *k {
                a
            } else {
                continue;
            };
            if !ctx.tihany(&other)? {
                out.push(LemmaKind::DisjointNeighborhoods);
                break;
            }
        }
    }
    if k.len() == 2 && g.is_connected() && is_claw_free(g) {
        if let Some((cut, _, _)) = oriented_cutset(g, budget)? {
            if cutset_braces(g, &cut).contains(k) {
                out.push(LemmaKind::CliqueCutset);
            }
        }
    }
    Ok(out)
}
