mod common;

use common::{all_graphs, forest_summary, independence_summary, Xs};
use wfcover::{
    decide_well_f_covered, decide_well_f_covered_reduced, enumerate_maximal_forests,
    enumerate_maximal_independent_sets, forest_number, independence_verdict, EnumerationBudget,
    Graph,
};

fn bits(sets: impl IntoIterator<Item = wfcover::VertexSet>) -> Vec<u64> {
    let mut v: Vec<u64> = sets.into_iter().map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

fn compare(g: &Graph) {
    let engine = enumerate_maximal_forests(g, &EnumerationBudget::default()).unwrap();
    assert!(!engine.truncated);
    assert_eq!(bits(engine.sets), common::maximal_forests(g), "forests of {g:?}");
    assert_eq!(
        bits(enumerate_maximal_independent_sets(g)),
        common::maximal_independent_sets(g),
        "independent sets of {g:?}"
    );

    let (wfc, f, lo) = forest_summary(g);
    assert_eq!(forest_number(g), f);
    let v = decide_well_f_covered(g);
    assert_eq!((v.well_f_covered, v.forest_number, v.min_maximal_order), (wfc, f, lo));
    assert_eq!(v.witness_max.len(), f);
    assert_eq!(v.witness_min.len(), lo);

    let (wc, alpha) = independence_summary(g);
    let iv = independence_verdict(g);
    assert_eq!((iv.well_covered, iv.alpha), (wc, alpha));
}

#[test]
fn all_labeled_graphs_up_to_five() {
    let mut seen = 0;
    for n in 0..=5 {
        for g in all_graphs(n) {
            compare(&g);
            seen += 1;
        }
    }
    assert_eq!(seen, 1 + 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn seeded_random_graphs_up_to_nine() {
    let mut rng = Xs(0x5eed_0001);
    for i in 0..200 {
        let n = 1 + rng.below(9);
        let g = rng.graph(n, 20 + (i % 7) as u64 * 10);
        compare(&g);
    }
}

#[test]
fn reduction_matches_direct_decision() {
    let mut rng = Xs(0x5eed_0002);
    for i in 0..150 {
        let n = 1 + rng.below(11);
        let g = rng.graph(n, 10 + (i % 5) as u64 * 10);
        let (wfc, f, lo) = forest_summary(&g);
        let r = decide_well_f_covered_reduced(&g);
        assert_eq!((r.well_f_covered, r.forest_number, r.min_maximal_order), (wfc, f, lo), "{g:?}");
        assert!(g.is_induced_forest(&r.witness_max).unwrap());
        assert_eq!(r.witness_max.len(), f);
    }
}
