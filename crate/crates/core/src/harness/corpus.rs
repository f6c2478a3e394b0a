use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::SweepConfig;
use super::HarnessError;
use crate::families::random::{generate, Instance};
use crate::graph::{decode_graph6, encode_graph6, Graph, LabeledGraph, Labeling, VertexSet};

/// One graph queued for evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusItem {
    pub id: String,
    pub family: String,
    pub seed: Option<u64>,
    pub note: String,
    pub graph: LabeledGraph,
    pub fuzzy: Vec<(VertexSet, VertexSet)>,
}

/// Written next to each generated `.g6` file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: String,
    pub seed: u64,
    pub note: String,
    pub labels: Vec<String>,
    pub fuzzy: Vec<(VertexSet, VertexSet)>,
}

fn sidecar_path(g6: &Path) -> PathBuf {
    g6.with_extension("labels.json")
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = decode_graph6(line).map_err(|source| HarnessError::Graph6 { path: path.into(), line: i + 1, source })?;
        out.push(g);
    }
    Ok(out)
}

/// Writes `{family}-{seed}.g6` plus a `.labels.json` sidecar per instance.
pub fn write_instances(dir: &Path, instances: &[Instance]) -> Result<Vec<PathBuf>, HarnessError> {
    std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let mut written = Vec::new();
    for inst in instances {
        let path = dir.join(format!("{}-{:06}.g6", inst.family.name(), inst.seed));
        let line = encode_graph6(&inst.graph.graph) + "\n";
        std::fs::write(&path, line).map_err(|e| HarnessError::io(&path, e))?;
        let side = Sidecar {
            family: inst.family.name().into(),
            seed: inst.seed,
            note: inst.note.clone(),
            labels: inst.graph.labels.names().to_vec(),
            fuzzy: inst.fuzzy.clone(),
        };
        let side_path = sidecar_path(&path);
        let json = serde_json::to_string_pretty(&side).expect("sidecar serializes");
        std::fs::write(&side_path, json).map_err(|e| HarnessError::io(&side_path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn read_sidecar(g6: &Path, n: usize) -> Result<Option<Sidecar>, HarnessError> {
    let path = sidecar_path(g6);
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path).map_err(|e| HarnessError::io(&path, e))?;
    let side: Sidecar = serde_json::from_str(&text).map_err(|e| HarnessError::json(&path, e))?;
    Ok((side.labels.len() == n).then_some(side))
}

fn corpus_items(path: &Path) -> Result<Vec<CorpusItem>, HarnessError> {
    let graphs = read_graph6_file(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("corpus").to_string();
    let side = match graphs.as_slice() {
        [g] => read_sidecar(path, g.n())?,
        _ => None,
    };
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let n = g.n();
            match &side {
                Some(s) => CorpusItem {
                    id: stem.clone(),
                    family: s.family.clone(),
                    seed: Some(s.seed),
                    note: s.note.clone(),
                    graph: LabeledGraph::new(g, Labeling::new(s.labels.clone())),
                    fuzzy: s.fuzzy.clone(),
                },
                None => CorpusItem {
                    id: format!("{stem}-{i:06}"),
                    family: stem.clone(),
                    seed: None,
                    note: String::new(),
                    graph: LabeledGraph::new(g, Labeling::numbered("v", n)),
                    fuzzy: Vec::new(),
                },
            }
        })
        .collect())
}

/// Every instance a config asks for, sorted by id.
pub fn collect_instances(config: &SweepConfig) -> Result<Vec<CorpusItem>, HarnessError> {
    let mut items = Vec::new();
    for batch in &config.families {
        for seed in batch.first_seed..batch.first_seed + batch.count as u64 {
            let inst = generate(batch.family, seed, batch.max_n)?;
            items.push(CorpusItem {
                id: format!("{}-{seed:06}", batch.family.name()),
                family: batch.family.name().into(),
                seed: Some(seed),
                note: inst.note,
                graph: inst.graph,
                fuzzy: inst.fuzzy,
            });
        }
    }
    for path in &config.corpora {
        items.extend(corpus_items(path)?);
    }
    for n in 1..=config.exhaustive_max_n {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            items.push(CorpusItem {
                id: format!("connected{n}-{i:06}"),
                family: format!("connected{n}"),
                seed: None,
                note: String::new(),
                graph: LabeledGraph::new(g, Labeling::numbered("v", n)),
                fuzzy: Vec::new(),
            });
        }
    }
    items.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = items.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(HarnessError::InvalidConfig(format!("instance id {} appears twice", w[0].id)));
    }
    Ok(items)
}

/// Colour refinement: vertices get the rank of their (colour, sorted
/// neighbour colours) signature until the partition stops splitting.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> =
            sigs.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        color = sigs.iter().map(|s| ranks[s]).collect();
        let now = ranks.len();
        if now == classes {
            return color;
        }
        classes = now;
    }
}

/// An isomorphism invariant code: the largest upper-triangle adjacency
/// bit string over vertex orders that respect the refined colouring.
/// Defined for graphs on at most 11 vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_code handles at most 11 vertices");
    let color = refine(g);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); color.iter().max().map_or(0, |m| m + 1)];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    let slots: Vec<usize> = cells.iter().enumerate().flat_map(|(c, vs)| vs.iter().map(move |_| c)).collect();
    fn rec(g: &Graph, cells: &[Vec<usize>], slots: &[usize], order: &mut Vec<usize>, used: &mut VertexSet, best: &mut u64) {
        let p = order.len();
        if p == slots.len() {
            let mut code = 0u64;
            for j in 1..p {
                for i in 0..j {
                    code = code << 1 | g.has_edge(order[i], order[j]) as u64;
                }
            }
            *best = (*best).max(code);
            return;
        }
        for &v in &cells[slots[p]] {
            if used.contains(v) {
                continue;
            }
            used.insert(v);
            order.push(v);
            rec(g, cells, slots, order, used, best);
            order.pop();
            used.remove(v);
        }
    }
    let mut best = 0;
    rec(g, &cells, &slots, &mut Vec::new(), &mut VertexSet::new(), &mut best);
    best
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * n.saturating_sub(1) / 2;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("code decodes in range")
}

/// All graphs on `n` vertices up to isomorphism, by canonical code.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    let mut codes = BTreeSet::from([0u64]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let g = from_code(m, code);
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u32..1 << m {
                let mut edges = base.clone();
                edges.extend((0..m).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m)));
                next.insert(canonical_code(&Graph::new(m + 1, &edges).expect("in range")));
            }
        }
        codes = next;
    }
    if n == 0 {
        return vec![Graph::new(0, &[]).expect("empty graph")];
    }
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_on(n).into_iter().filter(|g| n > 0 && g.is_connected()).collect()
}
