//! Seeded instance generators for every family, used by the sweeps and
//! the acceptance suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::interval::{fuzzy_interval_graph, Arc, IntervalSpec};
use super::named::{icosahedron, mantled_lk33, ring_of_five, rotator, twister, MantledLk33, RingOfFive};
use super::strips::{random_structure, strip_compose};
use super::thickening::{thicken, BipartitePattern, FuzzyPair, ThickeningSpec};
use super::three_cliqued::{hex_chain, random_tc, ThreeCliquedGraph};
use super::triangle_chain::{build_chain, random_params};
use super::{invalid, FamilyError};
use crate::clawfree::{enumerate_triads, is_antiprismatic, PrismaticMode};
use crate::graph::{Graph, LabeledGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Thickenings of the icosahedron graphs.
    Icosahedron,
    /// Fuzzy long circular interval graphs.
    LongCircular,
    /// Thickenings of antiprismatic pairs built from prismatic complements.
    Antiprismatic,
    /// Compositions of strips along a small hypergraph.
    StripComposition,
    /// Worn hex-chains of TC1..TC5 members.
    ThreeCliqued,
    /// Prismatic graphs (paths and cycles of triangles, rings of five,
    /// mantled L(K3,3), rotator, twister).
    Prismatic,
    /// Thickenings with a non-reduced changeable pair.
    NonReduced,
    /// Erdős–Rényi graphs.
    Random,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Icosahedron,
        Family::LongCircular,
        Family::Antiprismatic,
        Family::StripComposition,
        Family::ThreeCliqued,
        Family::Prismatic,
        Family::NonReduced,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Icosahedron => "icosahedron",
            Family::LongCircular => "long_circular",
            Family::Antiprismatic => "antiprismatic",
            Family::StripComposition => "strip_composition",
            Family::ThreeCliqued => "three_cliqued",
            Family::Prismatic => "prismatic",
            Family::NonReduced => "non_reduced",
            Family::Random => "random",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub family: Family,
    pub seed: u64,
    pub graph: LabeledGraph,
    /// Free-form description of the parameters drawn.
    pub note: String,
    /// Changeable pairs as blocks `(X_u, X_v)`, when the instance is a
    /// thickening.
    pub fuzzy: Vec<(VertexSet, VertexSet)>,
}

/// One instance of `family` with at most `max_n` vertices, fully determined
/// by `seed`.
pub fn generate(family: Family, seed: u64, max_n: usize) -> Result<Instance, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (family as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for _ in 0..200 {
        let (graph, note, fuzzy) = match family {
            Family::Icosahedron => icosahedron_thickening(&mut rng, false)?,
            Family::LongCircular => long_circular(&mut rng, false)?,
            Family::Antiprismatic => antiprismatic(&mut rng)?,
            Family::StripComposition => {
                let c = strip_compose(&random_structure(&mut rng))?;
                (c.graph, format!("{} strips", c.eta.len()), Vec::new())
            }
            Family::ThreeCliqued => {
                let tc = three_cliqued(&mut rng)?;
                (tc.graph, "hex-chain".into(), Vec::new())
            }
            Family::Prismatic => prismatic(&mut rng)?,
            Family::NonReduced => {
                if rng.gen_bool(0.5) {
                    icosahedron_thickening(&mut rng, true)?
                } else {
                    long_circular(&mut rng, true)?
                }
            }
            Family::Random => {
                let n = rng.gen_range(4..=max_n.clamp(4, 14));
                let p = rng.gen_range(0.2..0.8);
                (LabeledGraph::unlabeled(random_graph(&mut rng, n, p)), format!("G({n},{p:.2})"), Vec::new())
            }
        };
        if graph.graph.n() <= max_n && graph.graph.n() > 0 {
            return Ok(Instance { family, seed, graph, note, fuzzy });
        }
    }
    Err(invalid(format!("no {} instance with n <= {max_n}", family.name())))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, &edges).expect("edges in range")
}

type Generated = (LabeledGraph, String, Vec<(VertexSet, VertexSet)>);

fn pattern<R: Rng>(rng: &mut R, left: usize, right: usize, nonreduced: bool) -> BipartitePattern {
    if nonreduced {
        BipartitePattern::random_nonreduced(rng, left, right)
    } else {
        BipartitePattern::random_reduced(rng, left, right)
    }
}

/// Sizes in `1..=max` with every changeable pair given room for a pattern.
fn sizes_for<R: Rng>(rng: &mut R, n: usize, max: usize, pairs: &[(usize, usize)], nonreduced: bool) -> Vec<usize> {
    let mut sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
    for &(u, v) in pairs {
        if nonreduced {
            sizes[u] = sizes[u].max(2);
            sizes[v] = sizes[v].max(2);
        } else if sizes[u] * sizes[v] < 2 {
            sizes[u] = 2;
        }
    }
    sizes
}

fn thicken_pairs<R: Rng>(
    rng: &mut R,
    base: &LabeledGraph,
    pairs: &[(usize, usize)],
    max: usize,
    nonreduced: bool,
) -> Result<(LabeledGraph, Vec<(VertexSet, VertexSet)>), FamilyError> {
    let sizes = sizes_for(rng, base.graph.n(), max, pairs, nonreduced);
    let fuzzy = pairs
        .iter()
        .map(|&(u, v)| FuzzyPair { u, v, pattern: pattern(rng, sizes[u], sizes[v], nonreduced) })
        .collect();
    let spec = ThickeningSpec { base: base.graph.clone(), sizes, fuzzy };
    let t = thicken(&spec, &base.labels)?;
    let blocks = t.fuzzy_blocks(&spec);
    Ok((t.graph, blocks))
}

fn icosahedron_thickening<R: Rng>(rng: &mut R, nonreduced: bool) -> Result<Generated, FamilyError> {
    let k = if nonreduced { 2 } else { rng.gen_range(0..=2) };
    let base = icosahedron(k);
    let mut pairs = Vec::new();
    if k == 2 {
        for (a, b) in [("v1", "v4"), ("v6", "v9")] {
            if nonreduced && pairs.is_empty() || rng.gen_bool(0.5) {
                pairs.push((base.id(a), base.id(b)));
            }
        }
    }
    let (g, fuzzy) = thicken_pairs(rng, &base, &pairs, 2, nonreduced)?;
    Ok((g, format!("G{k}, |F|={}", pairs.len()), fuzzy))
}

/// A random long circular interval spec: `m` points at positions `8p`, and
/// intervals spanning two or three consecutive points.
/// The spec, and whether it came from the cycle-power layout.
fn long_circular_spec<R: Rng>(rng: &mut R) -> (IntervalSpec, bool) {
    loop {
        // Half the time every point starts an interval of the same span,
        // a thickened power of a cycle; these are where χ > ω lives.
        let power = rng.gen_bool(0.5).then(|| rng.gen_range(1..=2));
        let m = match power {
            Some(span) => rng.gen_range(3 * span + 4..=3 * span + 6),
            None => rng.gen_range(5..=11),
        };
        let length = 8 * m;
        let mut starts: Vec<usize> = (0..m).collect();
        starts.shuffle(rng);
        let k = if power.is_some() { m } else { rng.gen_range(m / 2..=m) };
        let mut intervals = Vec::new();
        let mut ends = std::collections::BTreeSet::new();
        for (idx, &s) in starts.iter().take(k).enumerate() {
            let span = power.unwrap_or_else(|| rng.gen_range(1..=2));
            let (a, b) = (8 * s, 8 * ((s + span) % m));
            // Endpoints on the points themselves allow fuzzy pairs; otherwise
            // offsets distinct per interval keep every endpoint unique.
            let d = if power.is_some() { 1 } else { 1 + idx % 7 };
            let arc = if rng.gen_bool(0.5) && !ends.contains(&a) && !ends.contains(&b) {
                Arc { start: a, end: b }
            } else {
                Arc { start: (a + length - d) % length, end: (b + d) % length }
            };
            ends.insert(arc.start);
            ends.insert(arc.end);
            intervals.push(arc);
        }
        let spec = IntervalSpec { circular: true, length, points: (0..m).map(|p| 8 * p).collect(), intervals, fuzzy: Vec::new() };
        if spec.validate().is_ok() {
            return (spec, power.is_some());
        }
    }
}

fn long_circular<R: Rng>(rng: &mut R, nonreduced: bool) -> Result<Generated, FamilyError> {
    for _ in 0..500 {
        let (mut spec, power) = long_circular_spec(rng);
        // Cycle powers are thickened uniformly (unit size means no fuzzy
        // pairs), which keeps χ > ω more often than not.
        let uniform = power.then(|| if nonreduced || rng.gen_bool(0.5) { 2 } else { 1 });
        let mut used = VertexSet::new();
        for a in &spec.intervals {
            if uniform == Some(1) {
                break;
            }
            let (u, v) = (a.start / 8, a.end / 8);
            if a.start % 8 == 0 && a.end % 8 == 0 && !used.contains(u) && !used.contains(v) && rng.gen_bool(0.6) {
                spec.fuzzy.push((u, v));
                if spec.validate().is_err() {
                    spec.fuzzy.pop();
                    continue;
                }
                used.insert(u);
                used.insert(v);
            }
        }
        if nonreduced && spec.fuzzy.is_empty() {
            continue;
        }
        let m = spec.points.len();
        let sizes = match uniform {
            Some(s) => vec![s; m],
            None => sizes_for(rng, m, 2, &spec.fuzzy, nonreduced),
        };
        let patterns: Vec<BipartitePattern> =
            spec.fuzzy.iter().map(|&(u, v)| pattern(rng, sizes[u], sizes[v], nonreduced)).collect();
        let t = match fuzzy_interval_graph(&spec, &sizes, &patterns) {
            Ok(t) => t,
            Err(_) => continue,
        };
        let blocks = spec.fuzzy.iter().map(|&(u, v)| (t.blocks[u], t.blocks[v])).collect();
        return Ok((t.graph, format!("{m} points, {} intervals, |F|={}", spec.intervals.len(), spec.fuzzy.len()), blocks));
    }
    Err(invalid("no long circular interval graph found"))
}

fn prismatic<R: Rng>(rng: &mut R) -> Result<Generated, FamilyError> {
    let pick = rng.gen_range(0..6);
    let (g, note) = match pick {
        0 => {
            let n = rng.gen_range(1..=3);
            let p = random_params(rng, false, n);
            (build_chain(&p, rng)?.1, format!("path of triangles n={n}"))
        }
        1 => {
            let p = random_params(rng, true, 5);
            (build_chain(&p, rng)?.1, "cycle of triangles n=5".into())
        }
        2 => {
            let mut p = RingOfFive::default();
            for s in p.sizes.iter_mut() {
                *s = rng.gen_range(0..=1);
            }
            for i in 1..=5 {
                let next = i % 5 + 1;
                if p.sizes[i] > 0 && p.sizes[next] > 0 && rng.gen_bool(0.5) {
                    p.links.push((i, 0, 0));
                }
            }
            (ring_of_five(&p)?, "ring of five".into())
        }
        3 => {
            let mut p = MantledLk33::default();
            for i in 0..3 {
                p.upper[i] = rng.gen_range(0..=1);
                p.lower[i] = rng.gen_range(0..=1);
            }
            for (a, b) in [(1, 2), (2, 3)] {
                if p.upper[a - 1] > 0 && p.upper[b - 1] > 0 && rng.gen_bool(0.5) {
                    p.upper_edges.push(((a, 0), (b, 0)));
                }
            }
            (mantled_lk33(&p)?, "mantled L(K3,3)".into())
        }
        4 => (rotator(), "rotator".into()),
        _ => (twister(), "twister".into()),
    };
    Ok((g, note, Vec::new()))
}

/// Pairs that may be changeable in the antiprismatic graph `h`: both ends
/// in no triad, or one triad holds both and no other triad meets either.
pub fn changeable_candidates(h: &Graph) -> Vec<(usize, usize)> {
    let triads = enumerate_triads(h);
    let mut count = vec![0usize; h.n()];
    for t in &triads {
        for v in t {
            count[v] += 1;
        }
    }
    let mut out = Vec::new();
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            let none = count[u] == 0 && count[v] == 0;
            let shared = count[u] == 1 && count[v] == 1 && triads.iter().any(|t| t.contains(u) && t.contains(v));
            if none || shared {
                out.push((u, v));
            }
        }
    }
    out
}

/// `(h, f)` stays antiprismatic under every flip subset of `f`.
pub fn is_antiprismatic_pair(h: &Graph, f: &[(usize, usize)]) -> bool {
    (0..1u32 << f.len()).all(|mask| {
        let mut g = h.clone();
        for (i, &(u, v)) in f.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g = if g.has_edge(u, v) { g.without_edges(&[(u, v)]) } else { g.with_edges(&[(u, v)]).expect("in range") };
            }
        }
        is_antiprismatic(&g, PrismaticMode::Antiprismatic).is_ok()
    })
}

fn antiprismatic<R: Rng>(rng: &mut R) -> Result<Generated, FamilyError> {
    let (g, note, _) = prismatic(rng)?;
    let h = LabeledGraph::new(g.graph.complement(), g.labels);
    let mut cands = changeable_candidates(&h.graph);
    cands.shuffle(rng);
    let mut f: Vec<(usize, usize)> = Vec::new();
    let mut used = VertexSet::new();
    for (u, v) in cands {
        if f.len() >= 3 || used.contains(u) || used.contains(v) {
            continue;
        }
        f.push((u, v));
        if is_antiprismatic_pair(&h.graph, &f) {
            used.insert(u);
            used.insert(v);
        } else {
            f.pop();
        }
    }
    let (graph, fuzzy) = thicken_pairs(rng, &h, &f, 2, false)?;
    Ok((graph, format!("complement of {note}, |F|={}", f.len()), fuzzy))
}

fn three_cliqued<R: Rng>(rng: &mut R) -> Result<ThreeCliquedGraph, FamilyError> {
    let terms: Vec<ThreeCliquedGraph> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let class = rng.gen_range(1..=5);
            let t = random_tc(rng, class)?.tc;
            let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
            Ok(t.permute(*perms.choose(rng).unwrap()))
        })
        .collect::<Result<_, FamilyError>>()?;
    hex_chain(&terms, &[])
}
