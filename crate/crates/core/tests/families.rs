mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tihany::clawfree::{find_claw, is_claw_free, is_orientable_prismatic, is_prismatic};
use tihany::families::named::{rotator, twister};
use tihany::families::random::generate;
use tihany::harness::connected_graphs;
use tihany::{Family, Graph};

/// Every vertex outside a triangle has exactly one neighbour in it.
fn prismatic_by_definition(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
                    continue;
                }
                for v in (0..n).filter(|v| ![a, b, c].contains(v)) {
                    if [a, b, c].iter().filter(|&&x| g.has_edge(v, x)).count() != 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn claw_finder_matches_brute_force() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for i in 0..400 {
        let g = common::random_graph(&mut r, 4 + i % 8, 0.5);
        assert_eq!(find_claw(&g).is_some(), common::has_claw(&g));
        if let Some(w) = find_claw(&g) {
            assert!(w.verify(&g));
        }
    }
}

#[test]
fn generated_structure_classes_have_no_claw() {
    // Prismatic graphs may have claws (any triangle-free graph is prismatic);
    // their complements are the claw-free class.
    for f in Family::ALL.into_iter().filter(|&f| !matches!(f, Family::Random | Family::Prismatic)) {
        for seed in 0..40 {
            let inst = generate(f, seed, 20).unwrap();
            assert!(!common::has_claw(&inst.graph.graph), "{} seed {seed}", f.name());
        }
    }
    for seed in 0..40 {
        let g = generate(Family::Prismatic, seed, 40).unwrap().graph.graph;
        assert!(!common::has_claw(&g.complement()), "prismatic seed {seed}");
    }
}

#[test]
fn prismatic_predicate_matches_definition() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            assert_eq!(is_prismatic(&g), prismatic_by_definition(&g), "{g:?}");
        }
    }
    for seed in 0..40 {
        let g = generate(Family::Prismatic, seed, 40).unwrap().graph.graph;
        assert!(prismatic_by_definition(&g));
    }
}

#[test]
fn rotator_and_twister_witness_themselves() {
    for g in [rotator(), twister()] {
        assert!(!is_orientable_prismatic(&g.graph).unwrap().is_orientable());
    }
}

#[test]
fn generated_instances_are_claw_free_when_predicate_says_so() {
    for seed in 0..60 {
        let g = generate(Family::Random, seed, 12).unwrap().graph.graph;
        assert_eq!(is_claw_free(&g), !common::has_claw(&g));
    }
}
