use std::fmt::Write;

use super::report::SweepReport;
use super::HarnessError;
use crate::engine::{certifying_reasons, is_tihany_with_chi, LemmaKind, TihanyOutcome};
use crate::graph::{decode_graph6, Labeling, VertexSet};
use crate::solvers::{chromatic_number, Coloring};

fn classes(labels: &Labeling, c: &Coloring) -> String {
    let parts: Vec<String> = c.classes().iter().map(|s| labels.format_set(s)).collect();
    parts.join(" ")
}

/// A readable dump of one record: the minimum Tihany clique with χ before
/// and after, witness colorings, and which sufficient condition (if any)
/// already guarantees the clique. Colorings are recomputed from the graph.
pub fn explain(report: &SweepReport, id: &str) -> Result<String, HarnessError> {
    let rec = report.record(id).ok_or_else(|| HarnessError::UnknownId(id.into()))?;
    let mut out = String::new();
    let chi_text = rec.chi.map_or("?".to_string(), |c| c.to_string());
    writeln!(out, "{} ({}), n={}, m={}, χ={}, ω={}, α={}", rec.id, rec.family, rec.n, rec.edges, chi_text, rec.omega, rec.alpha)
        .unwrap();
    for v in &rec.violations {
        writeln!(out, "VIOLATION {:?}: {}", v.kind, v.detail).unwrap();
    }
    for u in &rec.unknowns {
        writeln!(out, "unknown: {} stopped after {} nodes (budget {:?})", u.stage, u.nodes, u.budget).unwrap();
    }
    let Some(chi) = rec.chi else {
        return Ok(out);
    };
    if rec.gap == Some(false) {
        writeln!(out, "out of scope: χ=ω").unwrap();
        return Ok(out);
    }
    if !rec.claw_free {
        writeln!(out, "out of scope: not claw-free").unwrap();
        return Ok(out);
    }
    let Some(m) = &rec.min_tihany else {
        return Ok(out);
    };
    let g = decode_graph6(&rec.graph6).map_err(|source| HarnessError::Graph6 {
        path: id.into(),
        line: 1,
        source,
    })?;
    let labels = Labeling::new(rec.labels.clone());
    let k: VertexSet = m.clique.iter().collect();
    writeln!(out, "K={}, χ {}→{}, Tihany", labels.format_set(&k), chi, m.chi_after).unwrap();
    if rec.refuted > 0 {
        writeln!(out, "{} earlier cliques are not Tihany", rec.refuted).unwrap();
    }
    let budget = report.config.budget;
    let (_, full) = chromatic_number(&g, budget).map_err(crate::engine::EngineError::from)?;
    writeln!(out, "χ-coloring of G: {}", classes(&labels, &full)).unwrap();
    if let TihanyOutcome::Tihany(_) = is_tihany_with_chi(&g, &k, chi, budget)? {
        let (h, remap) = g.remove(&k);
        let (_, rest) = chromatic_number(&h, budget).map_err(crate::engine::EngineError::from)?;
        writeln!(out, "optimal coloring of G\\K: {}", classes(&labels, &rest.remapped(&remap))).unwrap();
    }
    let reasons = certifying_reasons(&g, &k, budget)?;
    if reasons.is_empty() {
        writeln!(out, "certified by exhaustive search only").unwrap();
    } else {
        let names: Vec<&str> = reasons.iter().map(LemmaKind::name).collect();
        writeln!(out, "certified by: {}", names.join(", ")).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, LabeledGraph};
    use crate::harness::corpus::CorpusItem;
    use crate::harness::{evaluate, SweepConfig};

    fn report_of(graphs: Vec<(&str, Graph)>) -> SweepReport {
        let config = SweepConfig::default();
        let records = graphs
            .into_iter()
            .map(|(id, g)| {
                let n = g.n();
                let item = CorpusItem {
                    id: id.into(),
                    family: "test".into(),
                    seed: None,
                    note: String::new(),
                    graph: LabeledGraph::new(g, Labeling::numbered("v", n)),
                    fuzzy: Vec::new(),
                };
                evaluate(&item, &config)
            })
            .collect();
        SweepReport::new(config, records)
    }

    #[test]
    fn examples() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let report = report_of(vec![
            ("w5", Graph::new(6, &edges).unwrap()),
            ("c5", Graph::cycle(5)),
            ("k3", Graph::complete(3)),
        ]);
        let w5 = explain(&report, "w5").unwrap();
        assert!(w5.contains("K={v0,v1}, χ 4→3, Tihany"), "{w5}");
        let c5 = explain(&report, "c5").unwrap();
        assert!(c5.contains("certified by: dense clique"), "{c5}");
        assert!(explain(&report, "k3").unwrap().contains("out of scope: χ=ω"));
        assert!(matches!(explain(&report, "nope"), Err(HarnessError::UnknownId(_))));
    }
}
