use tihany::families::random::generate;
use tihany::harness::{explain, run_sweep, write_instances, FamilyBatch, Suite};
use tihany::{Family, SweepConfig, SweepReport};

fn batches() -> Vec<FamilyBatch> {
    [Family::Icosahedron, Family::LongCircular, Family::ThreeCliqued]
        .into_iter()
        .map(|family| FamilyBatch { family, count: 4, max_n: 16, first_seed: 3 })
        .collect()
}

#[test]
fn written_corpus_sweeps_like_the_generator() {
    let dir = tempfile::tempdir().unwrap();
    let instances: Vec<_> = batches()
        .iter()
        .flat_map(|b| (b.first_seed..b.first_seed + b.count as u64).map(|s| generate(b.family, s, b.max_n).unwrap()))
        .collect();
    let paths = write_instances(dir.path(), &instances).unwrap();

    let direct = SweepConfig { families: batches(), suites: Suite::ALL.to_vec(), ..SweepConfig::default() };
    let from_files = SweepConfig { corpora: paths, suites: Suite::ALL.to_vec(), ..SweepConfig::default() };
    let a = run_sweep(&direct).unwrap().without_timings();
    let b = run_sweep(&from_files).unwrap().without_timings();
    assert_eq!(a.records, b.records);
    assert_eq!(a.summary, b.summary);
    assert_eq!(a.exit_code(), 0);
}

#[test]
fn report_survives_disk_and_explains_every_record() {
    let dir = tempfile::tempdir().unwrap();
    let config = SweepConfig { families: batches(), exhaustive_max_n: 4, ..SweepConfig::default() };
    let report = run_sweep(&config).unwrap();
    let path = dir.path().join("report.json");
    report.save(&path).unwrap();
    let loaded = SweepReport::load(&path).unwrap();
    assert_eq!(loaded, report);
    assert_eq!(loaded.summary.instances, 12 + 1 + 1 + 2 + 6);
    for r in &loaded.records {
        let text = explain(&loaded, &r.id).unwrap();
        assert!(text.contains(&r.id));
        if let Some(m) = &r.min_tihany {
            assert!(text.contains("Tihany"), "{text}");
            assert!(m.size <= config.kmax);
        }
    }
}

#[test]
fn sweep_is_deterministic_across_worker_counts() {
    let one = SweepConfig { families: batches(), workers: 1, ..SweepConfig::default() };
    let many = SweepConfig { workers: 4, ..one.clone() };
    let a = run_sweep(&one).unwrap().without_timings();
    let b = run_sweep(&many).unwrap().without_timings();
    assert_eq!(a.records, b.records);
}
