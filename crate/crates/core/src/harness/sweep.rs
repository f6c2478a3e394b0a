use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{Suite, SweepConfig};
use super::corpus::{collect_instances, CorpusItem};
use super::report::{InstanceRecord, MinTihany, SuiteOutcome, SweepReport, Unknown, Violation, ViolationKind};
use super::HarnessError;
use crate::clawfree::is_claw_free;
use crate::engine::{
    check_clique_cutset, check_dense_cliques, check_disjoint_neighborhoods, check_equal_neighborhoods,
    elt_partition_exists, find_min_tihany, find_nonreduced_wjoin, reduce_wjoin, EngineError, LemmaReport,
};
use crate::graph::{decode_graph6, encode_graph6, LabeledGraph, Labeling};
use crate::solvers::{chromatic_number, clique_number, stability_number};

struct Eval<'a> {
    item: &'a CorpusItem,
    config: &'a SweepConfig,
    rec: InstanceRecord,
}

impl Eval<'_> {
    fn violation(&mut self, kind: ViolationKind, detail: String) {
        self.rec.violations.push(Violation { id: self.rec.id.clone(), kind, detail });
    }

    /// Records a budget cut-off as unknown and anything else as an internal
    /// violation.
    fn engine_error(&mut self, stage: &str, e: EngineError) {
        match e {
            EngineError::Solve(s) => self.rec.unknowns.push(Unknown::from_solve(stage, &s)),
            other => self.violation(ViolationKind::Internal, format!("{stage}: {other}")),
        }
    }

    fn names(&self, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
        vs.into_iter().map(|v| self.item.graph.labels.name(v).to_string()).collect()
    }

    fn lemma(&mut self, suite: Suite, kind: ViolationKind, r: Result<LemmaReport, EngineError>) {
        match r {
            Ok(r) => {
                for v in &r.violations {
                    let cliques: Vec<String> = v.cliques.iter().map(|c| self.names(c.iter()).join(",")).collect();
                    self.violation(kind, format!("{} [{}]", v.detail, cliques.join(" | ")));
                }
                self.rec.suites.push(SuiteOutcome {
                    suite,
                    applicable: r.applicable,
                    instances: r.instances,
                    violations: r.violations.len(),
                });
            }
            Err(e) => self.engine_error(&format!("{suite:?}"), e),
        }
    }

    fn search(&mut self, chi: usize) {
        let g = &self.item.graph.graph;
        match find_min_tihany(g, self.config.kmax, self.config.budget) {
            Ok(s) => {
                debug_assert_eq!(s.chi, chi);
                self.rec.refuted = s.refuted;
                for r in &s.basic_violations {
                    let k = self.names(r.clique.iter()).join(",");
                    self.violation(ViolationKind::ColoringProperty, format!("K={{{k}}}: a class misses C(K)"));
                }
                match s.certificate {
                    Some(c) => {
                        self.rec.min_tihany = Some(MinTihany {
                            size: c.size(),
                            clique: c.clique.to_vec(),
                            names: self.names(c.clique.iter()),
                            chi_after: c.chi_after,
                        })
                    }
                    None => self.violation(
                        ViolationKind::NoSmallTihany,
                        format!("no Tihany clique of size <= {}", self.config.kmax),
                    ),
                }
            }
            Err(e) => self.engine_error("tihany search", e),
        }
    }

    fn wjoin(&mut self, chi: usize) {
        let g = &self.item.graph.graph;
        let Some(w) = find_nonreduced_wjoin(g) else {
            self.rec.suites.push(SuiteOutcome { suite: Suite::WJoin, applicable: false, instances: 0, violations: 0 });
            return;
        };
        let claw_free = self.rec.claw_free;
        let before = self.rec.violations.len();
        match reduce_wjoin(g, &w, self.config.budget) {
            Ok(h) => {
                if h.edge_count() >= g.edge_count() || h.n() != g.n() {
                    self.violation(ViolationKind::WJoinReduction, "edge count did not drop".into());
                }
                if claw_free && !is_claw_free(&h) {
                    self.violation(ViolationKind::WJoinReduction, "reduction created a claw".into());
                }
                match chromatic_number(&h, self.config.budget) {
                    Ok((c, _)) if c != chi => {
                        self.violation(ViolationKind::WJoinReduction, format!("χ changed from {chi} to {c}"))
                    }
                    Ok(_) => {}
                    Err(e) => self.rec.unknowns.push(Unknown::from_solve("w-join χ", &e)),
                }
            }
            // Only claw-free inputs are promised a reduction.
            Err(EngineError::NoReduction { a, b }) if claw_free => self.violation(
                ViolationKind::WJoinReduction,
                format!("no reduction for ({}) / ({})", self.names(a.iter()).join(","), self.names(b.iter()).join(",")),
            ),
            Err(EngineError::NoReduction { .. }) => {}
            Err(e) => self.engine_error("w-join reduction", e),
        }
        let violations = self.rec.violations.len() - before;
        self.rec.suites.push(SuiteOutcome { suite: Suite::WJoin, applicable: true, instances: 1, violations });
    }

    fn partition(&mut self, chi: usize) {
        let g = &self.item.graph.graph;
        let before = self.rec.violations.len();
        let mut instances = 0;
        for s in 2..chi {
            let t = chi + 1 - s;
            instances += 1;
            match elt_partition_exists(g, s, t, self.config.budget) {
                Ok(Some(_)) => {}
                Ok(None) => self.violation(ViolationKind::Partition, format!("no partition with s={s}, t={t}")),
                Err(e) => self.engine_error("partition", e),
            }
        }
        let violations = self.rec.violations.len() - before;
        self.rec.suites.push(SuiteOutcome { suite: Suite::Partition, applicable: true, instances, violations });
    }
}

/// Runs the Tihany search and the configured suites on one instance.
pub fn evaluate(item: &CorpusItem, config: &SweepConfig) -> InstanceRecord {
    let start = Instant::now();
    let g = &item.graph.graph;
    let rec = InstanceRecord {
        id: item.id.clone(),
        family: item.family.clone(),
        seed: item.seed,
        note: item.note.clone(),
        graph6: encode_graph6(g),
        labels: item.graph.labels.names().to_vec(),
        n: g.n(),
        edges: g.edge_count(),
        chi: None,
        omega: clique_number(g).0,
        alpha: stability_number(g).0,
        claw_free: is_claw_free(g),
        gap: None,
        min_tihany: None,
        refuted: 0,
        suites: Vec::new(),
        violations: Vec::new(),
        unknowns: Vec::new(),
        millis: 0,
    };
    let mut ev = Eval { item, config, rec };
    match chromatic_number(g, config.budget) {
        Ok((chi, _)) => {
            ev.rec.chi = Some(chi);
            let gap = chi > ev.rec.omega;
            ev.rec.gap = Some(gap);
            if gap && ev.rec.claw_free {
                ev.search(chi);
            }
            run_suites(&mut ev, chi, gap);
        }
        Err(e) => ev.rec.unknowns.push(Unknown::from_solve("chromatic number", &e)),
    }
    ev.rec.millis = start.elapsed().as_millis() as u64;
    ev.rec
}

fn run_suites(ev: &mut Eval<'_>, chi: usize, gap: bool) {
    let config = ev.config;
    let g = &ev.item.graph.graph;
    let small = g.n() <= config.lemma_max_n;
    let budget = config.budget;
    if small && gap {
        if config.runs(Suite::DenseCliques) {
            ev.lemma(Suite::DenseCliques, ViolationKind::DenseClique, check_dense_cliques(g, config.kmax, budget));
        }
        if config.runs(Suite::EqualNeighborhoods) {
            ev.lemma(Suite::EqualNeighborhoods, ViolationKind::EqualNeighborhoods, check_equal_neighborhoods(g, budget));
        }
        if config.runs(Suite::DisjointNeighborhoods) {
            ev.lemma(
                Suite::DisjointNeighborhoods,
                ViolationKind::DisjointNeighborhoods,
                check_disjoint_neighborhoods(g, budget),
            );
        }
        if config.runs(Suite::CliqueCutset) {
            ev.lemma(Suite::CliqueCutset, ViolationKind::CliqueCutset, check_clique_cutset(g, budget));
        }
    }
    if small && config.runs(Suite::WJoin) {
        ev.wjoin(chi);
    }
    if config.runs(Suite::Partition) && gap && ev.rec.claw_free && g.n() <= config.partition_max_n {
        ev.partition(chi);
    }
}

fn evaluate_all(items: &[CorpusItem], config: &SweepConfig) -> Result<Vec<InstanceRecord>, HarnessError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| HarnessError::InvalidConfig(format!("worker pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().map(|item| evaluate(item, config)).collect()))
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, HarnessError> {
    config.validate()?;
    let items = collect_instances(config)?;
    let records = evaluate_all(&items, config)?;
    Ok(SweepReport::new(config.clone(), records))
}

/// Everything needed to re-check a violation without the original corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bundle {
    pub record: InstanceRecord,
    pub config: SweepConfig,
}

impl Bundle {
    pub fn item(&self) -> Result<CorpusItem, HarnessError> {
        let g = decode_graph6(&self.record.graph6).map_err(|source| HarnessError::Graph6 {
            path: PathBuf::from(&self.record.id),
            line: 1,
            source,
        })?;
        Ok(CorpusItem {
            id: self.record.id.clone(),
            family: self.record.family.clone(),
            seed: self.record.seed,
            note: self.record.note.clone(),
            graph: LabeledGraph::new(g, Labeling::new(self.record.labels.clone())),
            fuzzy: Vec::new(),
        })
    }

    /// Re-evaluates the graph and checks that the same violations recur.
    pub fn replay(&self) -> Result<bool, HarnessError> {
        let again = evaluate(&self.item()?, &self.config);
        Ok(again.violations == self.record.violations)
    }

    pub fn load(path: &Path) -> Result<Bundle, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| HarnessError::json(path, e))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HuntOutcome {
    pub report: SweepReport,
    pub bundles: Vec<PathBuf>,
}

/// A sweep with the partition check switched on; every violating instance
/// is written to `out` as a self-contained bundle.
pub fn hunt(config: &SweepConfig, out: &Path) -> Result<HuntOutcome, HarnessError> {
    let mut config = config.clone();
    if !config.runs(Suite::Partition) {
        config.suites.push(Suite::Partition);
    }
    let report = run_sweep(&config)?;
    let mut bundles = Vec::new();
    for rec in report.records.iter().filter(|r| !r.violations.is_empty()) {
        std::fs::create_dir_all(out).map_err(|e| HarnessError::io(out, e))?;
        let path = out.join(format!("{}.json", rec.id));
        let bundle = Bundle { record: rec.clone(), config: config.clone() };
        let json = serde_json::to_string_pretty(&bundle).expect("bundle serializes");
        std::fs::write(&path, json).map_err(|e| HarnessError::io(&path, e))?;
        bundles.push(path);
    }
    Ok(HuntOutcome { report, bundles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::random::Family;
    use crate::graph::Graph;
    use crate::harness::config::FamilyBatch;
    use crate::harness::exit;

    fn item(id: &str, g: Graph) -> CorpusItem {
        let n = g.n();
        CorpusItem {
            id: id.into(),
            family: "test".into(),
            seed: None,
            note: String::new(),
            graph: LabeledGraph::new(g, Labeling::numbered("v", n)),
            fuzzy: Vec::new(),
        }
    }

    #[test]
    fn w5_record() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let config = SweepConfig { suites: Suite::ALL.to_vec(), ..SweepConfig::default() };
        let rec = evaluate(&item("w5", Graph::new(6, &edges).unwrap()), &config);
        assert_eq!((rec.chi, rec.omega, rec.alpha), (Some(4), 3, 2));
        assert!(rec.in_scope());
        let m = rec.min_tihany.unwrap();
        assert_eq!((m.size, m.names.clone(), m.chi_after), (2, vec!["v0".to_string(), "v1".into()], 3));
        assert!(rec.violations.is_empty() && rec.unknowns.is_empty());
        assert_eq!(rec.suites.len(), 6);
    }

    #[test]
    fn budget_cut_off_is_unknown() {
        let config = SweepConfig { budget: crate::solvers::Budget::nodes(1), ..SweepConfig::default() };
        let rec = evaluate(&item("c7", Graph::cycle(7).complement()), &config);
        assert_eq!(rec.unknowns.len(), 1);
        assert_eq!(rec.unknowns[0].budget.node_limit, 1);
        let report = SweepReport::new(config, vec![rec]);
        assert_eq!(report.exit_code(), exit::UNKNOWN);
    }

    #[test]
    fn empty_config_is_clean() {
        let report = run_sweep(&SweepConfig::default()).unwrap();
        assert_eq!(report.summary.instances, 0);
        assert_eq!(report.exit_code(), exit::CLEAN);
    }

    #[test]
    fn sweep_is_replayable() {
        let config = SweepConfig {
            families: vec![FamilyBatch { family: Family::Icosahedron, count: 4, max_n: 18, first_seed: 0 }],
            exhaustive_max_n: 5,
            suites: vec![Suite::DenseCliques, Suite::WJoin],
            ..SweepConfig::default()
        };
        let a = run_sweep(&config).unwrap();
        let b = run_sweep(&config).unwrap();
        assert_eq!(a.without_timings().to_json(), b.without_timings().to_json());
        assert_eq!(a.exit_code(), exit::CLEAN);
        let ids: Vec<&str> = a.records.iter().map(|r| r.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert_eq!(a.summary.instances, 4 + 1 + 1 + 2 + 6 + 21);
    }

    #[test]
    fn bundle_round_trip() {
        let config = SweepConfig { kmax: 1, ..SweepConfig::default() };
        // With kmax = 1, C5's lack of a Tihany vertex is reported.
        let dir = std::env::temp_dir().join(format!("tihany-hunt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let corpus = dir.join("c5.g6");
        std::fs::write(&corpus, encode_graph6(&Graph::cycle(5)) + "\n").unwrap();
        let config = SweepConfig { corpora: vec![corpus], ..config };
        let out = hunt(&config, &dir.join("bundles")).unwrap();
        assert_eq!(out.report.exit_code(), exit::VIOLATION);
        assert_eq!(out.bundles.len(), 1);
        let bundle = Bundle::load(&out.bundles[0]).unwrap();
        assert_eq!(bundle.record.violations[0].kind, ViolationKind::NoSmallTihany);
        assert!(bundle.replay().unwrap());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
