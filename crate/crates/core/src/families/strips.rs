//! Strips `(J, Z)` of the five families Z1..Z5, the three-vertex line
//! strip, one-ended strips, and composition of strips along a hypergraph.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::thickening::{thicken, BipartitePattern, FuzzyPair, ThickeningSpec};
use super::three_cliqued::z2_core;
use super::{invalid, line_graph, Builder, FamilyError};
use crate::graph::{Graph, LabeledGraph, Labeling, VertexSet};

/// A strip: graph `J` and its ends `Z`, in the order they attach to the
/// hyper-edge's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strip {
    pub graph: LabeledGraph,
    pub z: Vec<usize>,
}

impl Strip {
    /// `V(J) \ Z`.
    pub fn interior(&self) -> VertexSet {
        let z: VertexSet = self.z.iter().copied().collect();
        self.graph.graph.vertices() - z
    }
}

/// Sizes (default 1) and fuzzy pairs of a strip's thickening, by base
/// vertex name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripThickening {
    pub sizes: Vec<(String, usize)>,
    pub fuzzy: Vec<(String, String, BipartitePattern)>,
}

fn apply(
    base: &LabeledGraph,
    t: &StripThickening,
    allowed: &[(usize, usize)],
    ends: &[&str],
) -> Result<Strip, FamilyError> {
    let mut sizes = vec![1; base.graph.n()];
    for (name, s) in &t.sizes {
        let v = base.labels.id(name).ok_or_else(|| invalid(format!("no base vertex {name}")))?;
        sizes[v] = *s;
    }
    let mut fuzzy = Vec::new();
    for (a, b, pattern) in &t.fuzzy {
        let (u, v) = (base.labels.id(a), base.labels.id(b));
        let (u, v) = u.zip(v).ok_or_else(|| invalid(format!("no base pair {a},{b}")))?;
        if !allowed.contains(&(u, v)) && !allowed.contains(&(v, u)) {
            return Err(invalid(format!("{{{a},{b}}} is not an allowed changeable pair")));
        }
        fuzzy.push(FuzzyPair { u, v, pattern: pattern.clone() });
    }
    let mut z = Vec::new();
    for e in ends {
        let v = base.labels.id(e).ok_or_else(|| invalid(format!("no end {e}")))?;
        if sizes[v] != 1 {
            return Err(invalid(format!("end {e} must have |X| = 1")));
        }
        z.push(v);
    }
    let spec = ThickeningSpec { base: base.graph.clone(), sizes, fuzzy };
    let th = thicken(&spec, &base.labels)?;
    let z = z.iter().map(|&v| th.blocks[v].first().expect("nonempty block")).collect();
    Ok(Strip { graph: th.graph, z })
}

/// Random sizes in `1..=2` (ends stay 1) and, for each allowed pair that is
/// still free, a reduced fuzzy pattern with probability one half. Pairs in
/// `forced` always become fuzzy.
fn random_thickening<R: Rng>(
    rng: &mut R,
    base: &LabeledGraph,
    allowed: &[(usize, usize)],
    forced: bool,
    ends: &[&str],
) -> StripThickening {
    let end_ids: Vec<usize> = ends.iter().map(|e| base.id(e)).collect();
    let mut sizes: Vec<usize> = (0..base.graph.n())
        .map(|v| if end_ids.contains(&v) { 1 } else { rng.gen_range(1..=2) })
        .collect();
    let mut used = VertexSet::new();
    let mut fuzzy = Vec::new();
    for &(u, v) in allowed {
        if used.contains(u) || used.contains(v) || !(forced || rng.gen_bool(0.5)) {
            continue;
        }
        if sizes[u] * sizes[v] < 2 {
            let grow = if end_ids.contains(&u) { v } else { u };
            if end_ids.contains(&grow) {
                continue;
            }
            sizes[grow] = 2;
        }
        used.insert(u);
        used.insert(v);
        let p = BipartitePattern::random_reduced(rng, sizes[u], sizes[v]);
        fuzzy.push((base.labels.name(u).to_string(), base.labels.name(v).to_string(), p));
    }
    StripThickening {
        sizes: sizes
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 1)
            .map(|(v, &s)| (base.labels.name(v).to_string(), s))
            .collect(),
        fuzzy,
    }
}

/// Linear interval base graph on `v1..vn` given by `reach[i]`, the largest
/// index adjacent to `v_{i+1}` (0-based).
fn reach_graph(reach: &[usize]) -> Result<LabeledGraph, FamilyError> {
    let n = reach.len();
    for i in 0..n {
        if reach[i] < i || reach[i] >= n || (i > 0 && reach[i] < reach[i - 1]) {
            return Err(invalid("reach must be nondecreasing with i <= reach[i] < n"));
        }
    }
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..=reach[i]).map(move |j| (i, j))).collect();
    let g = Graph::new(n, &edges).map_err(|e| invalid(e.to_string()))?;
    Ok(LabeledGraph::new(g, Labeling::new((1..=n).map(|i| format!("v{i}")).collect())))
}

/// Changeable pairs of the first family. Only adjacent pairs are offered:
/// `{v_i, v_j}` with `j = reach(i)` and `reach(i-1) < j`, i.e. the two
/// ends of a maximal interval.
pub fn z1_changeable(reach: &[usize]) -> Vec<(usize, usize)> {
    let n = reach.len();
    (1..n)
        .filter_map(|i| {
            let j = reach[i];
            (j > i && j < n - 1 && reach[i - 1] < j).then_some((i, j))
        })
        .collect()
}

pub fn z1(reach: &[usize], t: &StripThickening) -> Result<Strip, FamilyError> {
    let n = reach.len();
    if n < 2 {
        return Err(invalid("Z1 needs n >= 2"));
    }
    let base = reach_graph(reach)?;
    if reach[0] >= n - 1 {
        return Err(invalid("v1 and vn must be nonadjacent"));
    }
    if reach[reach[0]] >= n - 1 {
        return Err(invalid("some vertex is adjacent to both v1 and vn"));
    }
    let last = format!("v{n}");
    apply(&base, t, &z1_changeable(reach), &["v1", &last])
}

pub fn random_z1<R: Rng>(rng: &mut R) -> Strip {
    loop {
        let n = rng.gen_range(3..=7);
        let mut reach = Vec::with_capacity(n);
        for i in 0..n {
            let lo = reach.last().copied().unwrap_or(0).max(i);
            reach.push(rng.gen_range(lo..=(i + 2).min(n - 1)).max(lo));
        }
        if reach[0] >= n - 1 || reach[reach[0]] >= n - 1 {
            continue;
        }
        let base = reach_graph(&reach).expect("valid reach");
        // Pairs inside an end's neighborhood would break the end clique.
        let ends = [base.id("v1"), n - 1];
        let allowed: Vec<_> = z1_changeable(&reach)
            .into_iter()
            .filter(|&(u, v)| {
                ends.iter().all(|&e| !(base.graph.has_edge(e, u) && base.graph.has_edge(e, v)))
            })
            .collect();
        let last = format!("v{n}");
        let t = random_thickening(rng, &base, &allowed, false, &["v1", &last]);
        return z1(&reach, &t).expect("generated Z1 parameters are valid");
    }
}

/// Second family, `F` empty. `x` names deleted vertices.
pub fn z2(n: usize, x: &[&str], sizes: &[(String, usize)]) -> Result<Strip, FamilyError> {
    let (base, _) = z2_core(n, x)?;
    let t = StripThickening { sizes: sizes.to_vec(), fuzzy: Vec::new() };
    apply(&base, &t, &[], &["a0", "b0"])
}

pub fn random_z2<R: Rng>(rng: &mut R) -> Strip {
    loop {
        let n = rng.gen_range(2..=3);
        let pool: Vec<String> = (1..=n).flat_map(|i| [format!("a{i}"), format!("b{i}"), format!("c{i}")]).collect();
        let x: Vec<&str> = pool.iter().filter(|_| rng.gen_bool(0.15)).map(String::as_str).collect();
        let sizes: Vec<(String, usize)> = pool
            .iter()
            .filter(|_| rng.gen_bool(0.2))
            .map(|s| (s.clone(), 2))
            .collect();
        let sizes = sizes.into_iter().filter(|(s, _)| !x.contains(&s.as_str())).collect::<Vec<_>>();
        if let Ok(s) = z2(n, &x, &sizes) {
            return s;
        }
    }
}

/// Third family. `extra[k]` is the nonempty subset (bits for `h2, h3, h4`)
/// of path vertices that the `k`-th additional vertex of `H` sees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z3Params {
    pub extra: Vec<u8>,
    pub h2h4: bool,
}

pub fn z3_base(p: &Z3Params) -> Result<LabeledGraph, FamilyError> {
    let mut b = Builder::new();
    let h: Vec<usize> = (1..=5).map(|i| b.vertex(format!("h{i}"))).collect();
    for i in 0..4 {
        b.edge(h[i], h[i + 1]);
    }
    if p.h2h4 {
        b.edge(h[1], h[3]);
    }
    for (k, &mask) in p.extra.iter().enumerate() {
        if mask == 0 || mask >= 8 {
            return Err(invalid(format!("extra vertex {k} has mask {mask}")));
        }
        let x = b.vertex(format!("x{k}"));
        for bit in 0..3 {
            if mask & (1 << bit) != 0 {
                b.edge(x, h[bit + 1]);
            }
        }
    }
    let hg = b.build();
    let (lg, ends) = line_graph(&hg.graph);
    let names: Vec<String> = ends
        .iter()
        .map(|&(u, v)| format!("{}{}", hg.labels.name(u), hg.labels.name(v)))
        .collect();
    let labels = Labeling::new(names);
    let (e23, e34) = (labels.id("h2h3").unwrap(), labels.id("h3h4").unwrap());
    let g = lg.graph.without_edges(&[(e23, e34)]);
    Ok(LabeledGraph::new(g, labels))
}

pub fn z3(p: &Z3Params, t: &StripThickening) -> Result<Strip, FamilyError> {
    let base = z3_base(p)?;
    let pair = (base.id("h2h3"), base.id("h3h4"));
    apply(&base, t, &[pair], &["h1h2", "h4h5"])
}

pub fn random_z3<R: Rng>(rng: &mut R) -> Strip {
    let k = rng.gen_range(0..=3);
    let p = Z3Params { extra: (0..k).map(|_| rng.gen_range(1..8)).collect(), h2h4: rng.gen() };
    let base = z3_base(&p).expect("valid Z3 parameters");
    let pair = (base.id("h2h3"), base.id("h3h4"));
    let t = random_thickening(rng, &base, &[pair], false, &["h1h2", "h4h5"]);
    z3(&p, &t).expect("generated Z3 parameters are valid")
}

pub fn z4_base() -> LabeledGraph {
    let mut b = Builder::new();
    for name in ["a0", "a1", "a2", "b0", "b1", "b2", "b3", "c1", "c2"] {
        b.vertex(name);
    }
    let ids = |b: &Builder, names: &[&str]| names.iter().map(|n| b.id(n)).collect::<Vec<_>>();
    for clique in [&["a0", "a1", "a2"][..], &["b0", "b1", "b2", "b3"], &["a2", "c1", "c2"], &["a1", "b1", "c2"]] {
        let c = ids(&b, clique);
        b.clique(&c);
    }
    b.edge_by_name("b2", "c1");
    b.build()
}

/// Fourth family; both pairs `{b2,c2}`, `{b3,c1}` must be given patterns.
pub fn z4(t: &StripThickening) -> Result<Strip, FamilyError> {
    let base = z4_base();
    let pairs = [(base.id("b2"), base.id("c2")), (base.id("b3"), base.id("c1"))];
    if t.fuzzy.len() != 2 {
        return Err(invalid("Z4 fixes F = {{b2,c2},{b3,c1}}: both pairs need a pattern"));
    }
    apply(&base, t, &pairs, &["a0", "b0"])
}

pub fn random_z4<R: Rng>(rng: &mut R) -> Strip {
    let base = z4_base();
    let pairs = [(base.id("b2"), base.id("c2")), (base.id("b3"), base.id("c1"))];
    let t = random_thickening(rng, &base, &pairs, true, &["a0", "b0"]);
    z4(&t).expect("generated Z4 parameters are valid")
}

/// Fifth family base, minus any of `v11`, `v12`.
pub fn z5_base(drop_v11: bool, drop_v12: bool) -> LabeledGraph {
    let mut b = Builder::new();
    let v: Vec<usize> = std::iter::once(usize::MAX)
        .chain((1..=12).map(|i| b.vertex(format!("v{i}"))))
        .collect();
    for i in 1..=6 {
        b.edge(v[i], v[i % 6 + 1]);
    }
    let adj: [(usize, &[usize]); 6] = [
        (7, &[1, 2]),
        (8, &[4, 5]),
        (9, &[6, 1, 2, 3]),
        (10, &[3, 4, 5, 6, 9]),
        (11, &[3, 4, 6, 1, 9, 10]),
        (12, &[2, 3, 5, 6, 9, 10]),
    ];
    for (x, ns) in adj {
        for &y in ns {
            b.edge(v[x], v[y]);
        }
    }
    let full = b.build();
    let mut keep = full.graph.vertices();
    if drop_v11 {
        keep.remove(v[11]);
    }
    if drop_v12 {
        keep.remove(v[12]);
    }
    full.induced(&keep)
}

/// Fifth family; `F` may hold `{v9, v10}`. The ends are `v7`, `v8`.
pub fn z5(drop_v11: bool, drop_v12: bool, t: &StripThickening) -> Result<Strip, FamilyError> {
    let base = z5_base(drop_v11, drop_v12);
    let pair = (base.id("v9"), base.id("v10"));
    apply(&base, t, &[pair], &["v7", "v8"])
}

pub fn random_z5<R: Rng>(rng: &mut R) -> Strip {
    let (d11, d12) = (rng.gen(), rng.gen());
    let base = z5_base(d11, d12);
    let pair = (base.id("v9"), base.id("v10"));
    let t = random_thickening(rng, &base, &[pair], false, &["v7", "v8"]);
    z5(d11, d12, &t).expect("generated Z5 parameters are valid")
}

/// `z1 - x - z2` with `X_x` of the given size.
pub fn line_strip(size: usize) -> Strip {
    let mut b = Builder::new();
    let z1 = b.vertex("z1");
    let z2 = b.vertex("z2");
    let xs: Vec<usize> = (0..size.max(1)).map(|k| b.vertex(format!("x{k}"))).collect();
    b.clique(&xs);
    b.complete(&[z1, z2], &xs);
    Strip { graph: b.build(), z: vec![z1, z2] }
}

/// A one-ended strip: a two-ended one with its second end deleted.
pub fn one_ended(strip: &Strip) -> Strip {
    let mut keep = strip.graph.graph.vertices();
    keep.remove(strip.z[1]);
    let (_, remap) = strip.graph.graph.induced(&keep);
    let z = remap.iter().position(|&v| v == strip.z[0]).expect("first end kept");
    Strip { graph: strip.graph.induced(&keep), z: vec![z] }
}

/// A random strip: kind 0 is the line strip, 1..=5 the families Z1..Z5.
pub fn random_strip<R: Rng>(rng: &mut R, kind: u8) -> Strip {
    match kind {
        0 => line_strip(rng.gen_range(1..=2)),
        1 => random_z1(rng),
        2 => random_z2(rng),
        3 => random_z3(rng),
        4 => random_z4(rng),
        _ => random_z5(rng),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperEdge {
    /// Incident hyper-vertices, one per end of the strip.
    pub ends: Vec<usize>,
    pub strip: Strip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripStructureSpec {
    pub hyper_vertices: usize,
    pub edges: Vec<HyperEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Composition {
    pub graph: LabeledGraph,
    /// `η(F)` per hyper-edge.
    pub eta: Vec<VertexSet>,
    /// `η(F, h)` per hyper-edge, aligned with `ends`.
    pub eta_at: Vec<Vec<VertexSet>>,
}

impl Composition {
    /// The strip of the structure at hyper-edge `f`, rebuilt from the
    /// composed graph.
    pub fn strip_at(&self, f: usize) -> Strip {
        let (sub, remap) = self.graph.graph.induced(&self.eta[f]);
        let k = self.eta_at[f].len();
        let n = sub.n();
        let mut edges: Vec<(usize, usize)> = sub.edges().collect();
        for (i, at) in self.eta_at[f].iter().enumerate() {
            for (new, &old) in remap.iter().enumerate() {
                if at.contains(old) {
                    edges.push((n + i, new));
                }
            }
        }
        let g = Graph::new(n + k, &edges).expect("strip edges in range");
        Strip { graph: LabeledGraph::unlabeled(g), z: (n..n + k).collect() }
    }
}

fn sd(axiom: &'static str, detail: impl Into<String>) -> FamilyError {
    FamilyError::StripStructure { axiom, detail: detail.into() }
}

/// Glues the strips: `η(F) = V(J) \ Z`, `η(F, h_i) = N_J(z_i)`, and the
/// union of the `η(F, h)` at each `h` becomes a clique. Vertex names are
/// prefixed `s{F}:`.
pub fn strip_compose(spec: &StripStructureSpec) -> Result<Composition, FamilyError> {
    if spec.edges.len() < 2 {
        return Err(sd("nontrivial", "a nontrivial strip-structure needs at least two hyper-edges"));
    }
    let mut names = Vec::new();
    let mut eta = Vec::new();
    let mut eta_at = Vec::new();
    let mut edges = Vec::new();
    let mut at_h = vec![VertexSet::new(); spec.hyper_vertices];
    for (f, he) in spec.edges.iter().enumerate() {
        let j = &he.strip.graph.graph;
        if he.ends.is_empty() || he.ends.len() > 2 || he.ends.len() != he.strip.z.len() {
            return Err(invalid(format!("hyper-edge {f} needs one or two ends matching its strip")));
        }
        if he.ends.iter().any(|&h| h >= spec.hyper_vertices) || (he.ends.len() == 2 && he.ends[0] == he.ends[1]) {
            return Err(invalid(format!("hyper-edge {f} has bad ends {:?}", he.ends)));
        }
        let z: VertexSet = he.strip.z.iter().copied().collect();
        if z.len() != he.strip.z.len() || !j.is_stable(&z) {
            return Err(invalid(format!("strip {f}: Z must be distinct pairwise nonadjacent vertices")));
        }
        let interior = he.strip.interior();
        if interior.is_empty() {
            return Err(sd("SD1", format!("η({f}) is empty")));
        }
        let start = names.len();
        let (_, remap) = j.induced(&interior);
        let mut local = vec![usize::MAX; j.n()];
        for (k, &old) in remap.iter().enumerate() {
            local[old] = start + k;
            names.push(format!("s{f}:{}", he.strip.graph.labels.name(old)));
        }
        edges.extend(j.edges().filter(|&(u, v)| interior.contains(u) && interior.contains(v)).map(|(u, v)| (local[u], local[v])));
        eta.push((start..names.len()).collect::<VertexSet>());
        let mut here = Vec::new();
        for (&zv, &h) in he.strip.z.iter().zip(&he.ends) {
            let at: VertexSet = j.neighbors(zv).iter().map(|v| local[v]).collect();
            at_h[h] |= at;
            here.push(at);
        }
        eta_at.push(here);
    }
    if names.len() > crate::graph::MAX_VERTICES {
        return Err(invalid("composition too large"));
    }
    for (f, he) in spec.edges.iter().enumerate() {
        for (i, &h) in he.ends.iter().enumerate() {
            for (g2, he2) in spec.edges.iter().enumerate().skip(f + 1) {
                for (i2, &h2) in he2.ends.iter().enumerate() {
                    if h == h2 {
                        for u in &eta_at[f][i] {
                            for v in &eta_at[g2][i2] {
                                edges.push((u, v));
                            }
                        }
                    }
                }
            }
        }
    }
    let g = Graph::new(names.len(), &edges).map_err(|e| invalid(e.to_string()))?;
    for (h, clique) in at_h.iter().enumerate() {
        if !g.is_clique(clique) {
            return Err(sd("SD2", format!("the η(·,{h}) union is not a clique")));
        }
    }
    let comp = Composition { graph: LabeledGraph::new(g, Labeling::new(names)), eta, eta_at };
    check_sd3(spec, &comp)?;
    Ok(comp)
}

fn check_sd3(spec: &StripStructureSpec, c: &Composition) -> Result<(), FamilyError> {
    let g = &c.graph.graph;
    for f1 in 0..spec.edges.len() {
        for f2 in f1 + 1..spec.edges.len() {
            for u in &c.eta[f1] {
                for v in &(*g.neighbors(u) & c.eta[f2]) {
                    let ok = spec.edges[f1].ends.iter().enumerate().any(|(i, &h)| {
                        spec.edges[f2]
                            .ends
                            .iter()
                            .enumerate()
                            .any(|(i2, &h2)| h == h2 && c.eta_at[f1][i].contains(u) && c.eta_at[f2][i2].contains(v))
                    });
                    if !ok {
                        return Err(sd("SD3", format!("edge {u}-{v} between η({f1}) and η({f2}) has no shared end")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// A random connected strip-structure: hyper-vertices `0..k`, a spanning
/// path of two-ended strips plus a few extra strips (some one-ended).
pub fn random_structure<R: Rng>(rng: &mut R) -> StripStructureSpec {
    let k = rng.gen_range(2..=4);
    let mut edges = Vec::new();
    let two = |rng: &mut R| {
        let kind = rng.gen_range(0..=5);
        random_strip(rng, kind)
    };
    for h in 0..k - 1 {
        edges.push(HyperEdge { ends: vec![h, h + 1], strip: two(rng) });
    }
    for _ in 0..rng.gen_range(1..=2) {
        let mut hs: Vec<usize> = (0..k).collect();
        hs.shuffle(rng);
        if rng.gen_bool(0.3) {
            edges.push(HyperEdge { ends: vec![hs[0]], strip: one_ended(&two(rng)) });
        } else {
            edges.push(HyperEdge { ends: vec![hs[0], hs[1]], strip: two(rng) });
        }
    }
    StripStructureSpec { hyper_vertices: k, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clawfree::is_claw_free;
    use rand::SeedableRng;

    fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
        rand_chacha::ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn z2_counts() {
        let s = z2(2, &[], &[]).unwrap();
        assert_eq!((s.graph.graph.n(), s.graph.graph.edge_count()), (8, 13));
        assert!(z2(2, &["c1"], &[]).is_err());
        assert!(z2(3, &["c1"], &[]).is_ok());
        assert!(z2(2, &["a0"], &[]).is_err());
    }

    #[test]
    fn z4_fixed_pairs() {
        let base = z4_base();
        assert_eq!(base.graph.n(), 9);
        for c in [&["a0", "a1", "a2"][..], &["b0", "b1", "b2", "b3"], &["a2", "c1", "c2"], &["a1", "b1", "c2"]] {
            assert!(base.graph.is_clique(&base.labels.ids(c)));
        }
        assert!(z4(&StripThickening::default()).is_err());
        let s = random_z4(&mut rng(1));
        assert_eq!(s.z.len(), 2);
    }

    #[test]
    fn z1_rules() {
        // v1..v5, v1~v2, v2~v3~v4, v4~v5.
        let reach = [1, 3, 3, 4, 4];
        assert!(z1(&reach, &StripThickening::default()).is_ok());
        assert!(z1(&[2, 2, 2], &StripThickening::default()).is_err());
        assert_eq!(z1_changeable(&reach), vec![(1, 3)]);
    }

    #[test]
    fn parallel_line_strips_give_k2() {
        let spec = StripStructureSpec {
            hyper_vertices: 2,
            edges: vec![
                HyperEdge { ends: vec![0, 1], strip: line_strip(1) },
                HyperEdge { ends: vec![0, 1], strip: line_strip(1) },
            ],
        };
        let c = strip_compose(&spec).unwrap();
        assert_eq!(c.graph.graph, Graph::complete(2));
    }

    #[test]
    fn single_edge_is_trivial() {
        let spec = StripStructureSpec {
            hyper_vertices: 2,
            edges: vec![HyperEdge { ends: vec![0, 1], strip: line_strip(1) }],
        };
        assert!(matches!(strip_compose(&spec), Err(FamilyError::StripStructure { axiom: "nontrivial", .. })));
    }

    #[test]
    fn every_family_strip_is_claw_free() {
        let mut r = rng(2);
        for kind in 0..=5 {
            for _ in 0..20 {
                let s = random_strip(&mut r, kind);
                assert!(is_claw_free(&s.graph.graph), "kind {kind}");
                for &z in &s.z {
                    assert!(s.graph.graph.is_clique(s.graph.graph.neighbors(z)), "kind {kind}: end neighborhood");
                }
            }
        }
    }

    #[test]
    fn random_compositions_are_claw_free_and_rederivable() {
        let mut r = rng(3);
        for _ in 0..60 {
            let spec = random_structure(&mut r);
            let c = strip_compose(&spec).unwrap();
            assert!(is_claw_free(&c.graph.graph));
            for (f, he) in spec.edges.iter().enumerate() {
                let rebuilt = c.strip_at(f).graph.graph;
                let j = &he.strip.graph.graph;
                // Interior in order, then the ends.
                let order: Vec<usize> = he.strip.interior().iter().chain(he.strip.z.iter().copied()).collect();
                assert_eq!(rebuilt.n(), j.n());
                for a in 0..j.n() {
                    for b in a + 1..j.n() {
                        assert_eq!(rebuilt.has_edge(a, b), j.has_edge(order[a], order[b]));
                    }
                }
            }
        }
    }
}
