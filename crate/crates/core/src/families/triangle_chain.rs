//! Paths and cycles of triangles: a literal clause-by-clause validator and a
//! seeded builder that produces valid instances.
//!
//! Set indices are 1-based throughout, matching the clause statements; slot
//! 0 of every per-index vector is unused. Paths have sets `X_1..X_{2n+1}`,
//! cycles `X_1..X_{2n}` read modulo `2n`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{anticomplete_to, complete_to, Builder, FamilyError};
use crate::clawfree::is_prismatic;
use crate::graph::{Graph, LabeledGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleChainSpec {
    pub cyclic: bool,
    pub n: usize,
    pub graph: Graph,
    pub x: Vec<VertexSet>,
    /// `X̂_i` for even `i`; empty at odd indices.
    pub hat: Vec<VertexSet>,
    /// `L_i`, `M_i`, `R_i` for odd `i`; empty at even indices.
    pub l: Vec<VertexSet>,
    pub m: Vec<VertexSet>,
    pub r: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{clause}: {detail}")]
pub struct ChainViolation {
    pub clause: String,
    pub detail: String,
}

fn fail(clause: &str, detail: impl Into<String>) -> Result<(), ChainViolation> {
    Err(ChainViolation {
        clause: clause.to_string(),
        detail: detail.into(),
    })
}

/// Edges between `x` and `y` form a perfect matching of `x` onto `y`.
fn matched(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    x.len() == y.len()
        && x.iter().all(|v| g.neighbors(v).intersection_len(y) == 1)
        && y.iter().all(|v| g.neighbors(v).intersection_len(x) == 1)
}

impl TriangleChainSpec {
    /// Number of sets `X_i`.
    pub fn sets(&self) -> usize {
        if self.cyclic {
            2 * self.n
        } else {
            2 * self.n + 1
        }
    }

    /// Index `i` reduced into `1..=sets()` (cycles only wrap).
    fn at(&self, i: usize) -> usize {
        if self.cyclic {
            (i + self.sets() - 1) % self.sets() + 1
        } else {
            i
        }
    }

    /// Index `i - d`, wrapping on cycles.
    fn back(&self, i: usize, d: usize) -> usize {
        if self.cyclic {
            self.at(i + self.sets() - d)
        } else {
            i - d
        }
    }

    fn prefix(&self) -> &'static str {
        if self.cyclic {
            "C"
        } else {
            "P"
        }
    }

    /// The three canonical color classes `A_k = ∪ X_i, i ≡ k (mod 3)`,
    /// ordered k = 1, 2, 0.
    pub fn canonical_coloring(&self) -> [VertexSet; 3] {
        let mut out = [VertexSet::new(); 3];
        for i in 1..=self.sets() {
            out[(i + 2) % 3] |= self.x[i];
        }
        out
    }

    fn check_shape(&self) -> Result<(), ChainViolation> {
        let p = self.prefix();
        let len = self.sets() + 1;
        if self.cyclic && (self.n < 5 || self.n % 3 != 2) {
            return fail("C", format!("n = {} but need n >= 5 and n = 2 mod 3", self.n));
        }
        if [&self.x, &self.hat, &self.l, &self.m, &self.r].iter().any(|v| v.len() != len) {
            return fail("shape", format!("per-index vectors must have length {len}"));
        }
        if !self.cyclic && self.n < 1 {
            return fail("P", "n must be at least 1");
        }
        let g = &self.graph;
        let mut union = VertexSet::new();
        for i in 1..=self.sets() {
            if union.intersects(&self.x[i]) {
                return fail("sets", format!("X_{i} meets an earlier set"));
            }
            union |= self.x[i];
            if !g.is_stable(&self.x[i]) {
                return fail("sets", format!("X_{i} is not stable"));
            }
        }
        if union != g.vertices() {
            return fail("sets", "the X_i do not cover V(G)");
        }
        for i in 1..=self.sets() {
            let (hat, l, m, r) = (self.hat[i], self.l[i], self.m[i], self.r[i]);
            if i % 2 == 0 {
                if hat.is_empty() || !hat.is_subset(&self.x[i]) {
                    return fail(&format!("{p}1"), format!("X̂_{i} must be a nonempty subset of X_{i}"));
                }
                if !(l | m | r).is_empty() {
                    return fail("shape", format!("L/M/R given at even index {i}"));
                }
            } else {
                let parts = l.len() + m.len() + r.len();
                if (l | m | r) != self.x[i] || parts != self.x[i].len() {
                    return fail(&format!("{p}3"), format!("L_{i}, M_{i}, R_{i} do not partition X_{i}"));
                }
                if !hat.is_empty() {
                    return fail("shape", format!("hat given at odd index {i}"));
                }
            }
        }
        Ok(())
    }

    /// Every clause of the definition, in order; the first failure wins.
    pub fn validate(&self) -> Result<(), ChainViolation> {
        self.check_shape()?;
        if self.cyclic {
            self.check_cycle()
        } else {
            self.check_path()
        }
    }

    fn check_p2_pair(&self, clause: &str, i: usize, j: usize, k: usize, odd_ok: bool) -> Result<(), ChainViolation> {
        let g = &self.graph;
        let (xi, xj) = (self.x[i], self.x[j]);
        if k % 3 == 2 {
            for u in &xi {
                for v in &(xj - *g.neighbors(u)) {
                    let odd = i % 2 == 1 && j % 2 == 1 && odd_ok;
                    let even = i % 2 == 0 && j % 2 == 0 && !self.hat[i].contains(u) && !self.hat[j].contains(v);
                    if !(odd || even) {
                        return fail(&format!("{clause}(1)"), format!("X_{i}, X_{j} have an illegal non-edge"));
                    }
                }
            }
        } else if !anticomplete_to(g, &xi, &xj) {
            return fail(&format!("{clause}(2)"), format!("X_{i} not anticomplete to X_{j}"));
        }
        Ok(())
    }

    fn check_path(&self) -> Result<(), ChainViolation> {
        let n = self.n;
        let hat_len = |i: usize| self.hat[i].len();
        // (P1)
        if hat_len(2) != 1 || hat_len(2 * n) != 1 {
            return fail("P1", "|X̂_2| and |X̂_2n| must be 1");
        }
        for i in 1..n {
            if hat_len(2 * i) != 1 && hat_len(2 * i + 2) != 1 {
                return fail("P1", format!("neither X̂_{} nor X̂_{} has size 1", 2 * i, 2 * i + 2));
            }
        }
        // (P2)
        for i in 1..=self.sets() {
            for j in i + 1..=self.sets() {
                if j == i + 1 {
                    continue;
                }
                self.check_p2_pair("P2", i, j, j - i, j == i + 2)?;
            }
        }
        // (P3)
        let last = 2 * n + 1;
        if !(self.l[1] | self.m[1] | self.m[last] | self.r[last]).is_empty() {
            return fail("P3", "L_1, M_1, M_2n+1, R_2n+1 must be empty");
        }
        // (P4)
        if self.r[1].is_empty() && !(n >= 2 && hat_len(4) > 1) {
            return fail("P4", "R_1 empty requires n >= 2 and |X̂_4| > 1");
        }
        if self.l[last].is_empty() && !(n >= 2 && hat_len(2 * n - 2) > 1) {
            return fail("P4", "L_2n+1 empty requires n >= 2 and |X̂_2n-2| > 1");
        }
        for i in 1..=n {
            self.check_p5(i)?;
            if hat_len(2 * i) == 1 {
                self.check_p6(i, i > 1, i < n)?;
            } else if 1 < i && i < n {
                self.check_p7(i)?;
            }
        }
        Ok(())
    }

    fn check_cycle(&self) -> Result<(), ChainViolation> {
        let n = self.n;
        let two_n = 2 * n;
        for i in 1..=n {
            if self.hat[2 * i].len() != 1 && self.hat[self.at(2 * i + 2)].len() != 1 {
                return fail("C1", format!("neither X̂_{} nor X̂_{} has size 1", 2 * i, self.at(2 * i + 2)));
            }
        }
        for i in 1..=two_n {
            for k in 2..=two_n - 2 {
                let j = self.at(i + k);
                self.check_p2_pair("C2", i, j, k, k == 2 || k == two_n - 2)?;
            }
        }
        for i in 1..=n {
            self.check_p5(i)?;
            if self.hat[2 * i].len() == 1 {
                self.check_p6(i, true, true)?;
            } else {
                self.check_p7(i)?;
            }
        }
        Ok(())
    }

    fn check_p5(&self, i: usize) -> Result<(), ChainViolation> {
        let c = if self.cyclic { "C4" } else { "P5" };
        let g = &self.graph;
        let (lo, e, hi) = (self.at(2 * i - 1), 2 * i, self.at(2 * i + 1));
        let xe = self.x[e];
        let rest = xe - self.hat[e];
        if !anticomplete_to(g, &xe, &(self.l[lo] | self.r[hi])) {
            return fail(c, format!("X_{e} not anticomplete to L_{lo} ∪ R_{hi}"));
        }
        if !anticomplete_to(g, &rest, &(self.m[lo] | self.m[hi])) {
            return fail(c, format!("X_{e} \\ X̂_{e} not anticomplete to M_{lo} ∪ M_{hi}"));
        }
        for a in &self.r[lo] {
            for b in &(self.l[hi] & *g.neighbors(a)) {
                for v in &rest {
                    if g.has_edge(v, a) == g.has_edge(v, b) {
                        return fail(c, format!("vertex of X_{e} \\ X̂_{e} not adjacent to exactly one end of an R_{lo}-L_{hi} edge"));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_p6(&self, i: usize, below: bool, above: bool) -> Result<(), ChainViolation> {
        let c = if self.cyclic { "C5" } else { "P6" };
        let g = &self.graph;
        let (lo, e, hi) = (self.at(2 * i - 1), 2 * i, self.at(2 * i + 1));
        let (rl, ll) = (self.r[lo], self.l[hi]);
        if !matched(g, &rl, &ll) {
            return fail(&format!("{c}(1)"), format!("R_{lo}, L_{hi} are not matched"));
        }
        let left = self.m[lo] | rl;
        let right = ll | self.m[hi];
        for a in &left {
            for b in &(right & *g.neighbors(a)) {
                if !(rl.contains(a) && ll.contains(b)) {
                    return fail(&format!("{c}(1)"), format!("edge between M∪R_{lo} and L∪M_{hi} outside R_{lo}-L_{hi}"));
                }
            }
        }
        if !complete_to(g, &self.hat[e], &(rl | self.m[lo] | ll | self.m[hi])) {
            return fail(&format!("{c}(2)"), format!("X̂_{e} not complete to R_{lo} ∪ M_{lo} ∪ L_{hi} ∪ M_{hi}"));
        }
        if !complete_to(g, &self.l[lo], &self.x[hi]) || !complete_to(g, &self.x[lo], &self.r[hi]) {
            return fail(&format!("{c}(3)"), format!("L_{lo} → X_{hi} or X_{lo} → R_{hi} not complete"));
        }
        if below && !matched(g, &self.m[lo], &self.hat[self.back(e, 2)]) {
            return fail(&format!("{c}(4)"), format!("M_{lo} not matched to the previous hat"));
        }
        if above && !matched(g, &self.m[hi], &self.hat[self.at(e + 2)]) {
            return fail(&format!("{c}(4)"), format!("M_{hi} not matched to the next hat"));
        }
        Ok(())
    }

    /// Reading: `u, v` are nonadjacent iff some hat vertex is adjacent to
    /// both.
    fn check_p7(&self, i: usize) -> Result<(), ChainViolation> {
        let c = if self.cyclic { "C6" } else { "P7" };
        let g = &self.graph;
        let (lo, e, hi) = (self.at(2 * i - 1), 2 * i, self.at(2 * i + 1));
        if !(self.r[lo] | self.l[hi]).is_empty() {
            return fail(&format!("{c}(1)"), format!("R_{lo} or L_{hi} nonempty next to a large hat"));
        }
        for u in &self.x[lo] {
            for v in &self.x[hi] {
                let shared = (*g.neighbors(u) & *g.neighbors(v) & self.hat[e]).is_empty();
                if g.has_edge(u, v) == shared {
                    continue;
                }
                return fail(&format!("{c}(2)"), format!("adjacency across X̂_{e} disagrees with shared hat neighbors"));
            }
        }
        Ok(())
    }
}

/// Validates `spec` and, on success, returns its graph after re-checking
/// that it is prismatic.
pub fn triangle_chain(spec: &TriangleChainSpec) -> Result<Graph, FamilyError> {
    spec.validate().map_err(FamilyError::TriangleChain)?;
    if !is_prismatic(&spec.graph) {
        return Err(FamilyError::TriangleChain(ChainViolation {
            clause: "prismatic".into(),
            detail: "accepted chain is not prismatic".into(),
        }));
    }
    Ok(spec.graph.clone())
}

/// Parameters for the builder. Every hat has one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainParams {
    pub cyclic: bool,
    pub n: usize,
    /// `matching[i-1] = |R_{2i-1}| = |L_{2i+1}|` for `i = 1..=n`.
    pub matching: Vec<usize>,
    /// `extra[i-1] = |X_{2i} \ X̂_{2i}|`.
    pub extra: Vec<usize>,
}

/// Builds a chain from `params`, filling the free adjacencies (which end of
/// each R-L edge a non-hat vertex sees, and non-hat pairs two even steps
/// apart) from `rng`.
pub fn build_chain<R: Rng>(params: &ChainParams, rng: &mut R) -> Result<(TriangleChainSpec, LabeledGraph), FamilyError> {
    let n = params.n;
    if params.matching.len() != n || params.extra.len() != n {
        return Err(super::invalid("matching and extra need one entry per i in 1..=n"));
    }
    let sets = if params.cyclic { 2 * n } else { 2 * n + 1 };
    let at = |i: usize| if params.cyclic { (i + sets - 1) % sets + 1 } else { i };
    let mut b = Builder::new();
    let empty = vec![Vec::<usize>::new(); sets + 1];
    let (mut l, mut m, mut r, mut hat, mut rest) = (empty.clone(), empty.clone(), empty.clone(), empty.clone(), empty);
    for i in 1..=n {
        let e = 2 * i;
        hat[e].push(b.vertex(format!("X{e}.h")));
        for k in 0..params.extra[i - 1] {
            rest[e].push(b.vertex(format!("X{e}.x{k}")));
        }
        let (lo, hi) = (at(e - 1), at(e + 1));
        for k in 0..params.matching[i - 1] {
            r[lo].push(b.vertex(format!("R{lo}.{k}")));
            l[hi].push(b.vertex(format!("L{hi}.{k}")));
        }
    }
    for o in (1..=sets).filter(|o| o % 2 == 1) {
        let interior = params.cyclic || (o != 1 && o != sets);
        if interior {
            m[o].push(b.vertex(format!("M{o}")));
        }
    }
    let x: Vec<Vec<usize>> = (0..=sets)
        .map(|i| [&l[i], &m[i], &r[i], &hat[i], &rest[i]].iter().flat_map(|v| v.iter().copied()).collect())
        .collect();
    for i in 1..=sets {
        for k in 1..sets {
            if !params.cyclic && i + k > sets {
                break;
            }
            let j = at(i + k);
            if !params.cyclic && j <= i {
                continue;
            }
            if params.cyclic && j < i {
                continue;
            }
            let consecutive = k == 1 || (params.cyclic && k == sets - 1);
            if consecutive {
                // Handled per even index below.
                continue;
            }
            let step = if params.cyclic { k.min(sets - k) } else { k };
            let two_apart = step == 2;
            if i % 2 == 1 && j % 2 == 1 && two_apart {
                // Odd neighbors across X_{e}: orient as (lo, hi) with hi = lo + 2.
                let (lo, hi) = if at(i + 2) == j { (i, j) } else { (j, i) };
                b.complete(&l[lo], &x[hi]);
                b.complete(&x[lo], &r[hi]);
                for (&a, &c) in r[lo].iter().zip(&l[hi]) {
                    b.edge(a, c);
                }
                continue;
            }
            if k % 3 != 2 {
                continue;
            }
            if i % 2 == 0 && j % 2 == 0 {
                b.complete(&hat[i], &x[j]);
                b.complete(&rest[i], &hat[j]);
                for &u in &rest[i] {
                    for &v in &rest[j] {
                        if rng.gen_bool(0.5) {
                            b.edge(u, v);
                        }
                    }
                }
            } else {
                b.complete(&x[i], &x[j]);
            }
        }
    }
    for i in 1..=n {
        let e = 2 * i;
        let (lo, hi) = (at(e - 1), at(e + 1));
        b.complete(&hat[e], &r[lo]);
        b.complete(&hat[e], &m[lo]);
        b.complete(&hat[e], &l[hi]);
        b.complete(&hat[e], &m[hi]);
        for &v in &rest[e] {
            for (&a, &c) in r[lo].iter().zip(&l[hi]) {
                b.edge(v, if rng.gen_bool(0.5) { a } else { c });
            }
        }
    }
    let lg = b.build();
    let to_set = |v: &Vec<Vec<usize>>| v.iter().map(|s| s.iter().copied().collect()).collect::<Vec<VertexSet>>();
    let spec = TriangleChainSpec {
        cyclic: params.cyclic,
        n,
        graph: lg.graph.clone(),
        x: to_set(&x),
        hat: to_set(&hat),
        l: to_set(&l),
        m: to_set(&m),
        r: to_set(&r),
    };
    triangle_chain(&spec)?;
    Ok((spec, lg))
}

/// Random valid parameters. Paths need `R_1` and `L_{2n+1}` nonempty when
/// every hat is a single vertex.
pub fn random_params<R: Rng>(rng: &mut R, cyclic: bool, n: usize) -> ChainParams {
    let mut matching: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    if !cyclic {
        matching[0] = matching[0].max(1);
        matching[n - 1] = matching[n - 1].max(1);
    }
    let extra = (0..n).map(|_| rng.gen_range(0..=1)).collect();
    ChainParams { cyclic, n, matching, extra }
}
