mod common;

use proptest::prelude::*;
use wfcover::constructions::{add_pendant_edge, disjoint_union, identify_vertex, remove_pendant};
use wfcover::graph::RollbackUnionFind;
use wfcover::reductions::reduce_in_order;
use wfcover::{
    decide_well_f_covered, decide_well_f_covered_reduced, enumerate_maximal_forests,
    enumerate_maximal_independent_sets, forest_number, independence_verdict, reduce,
    EnumerationBudget, Graph, VertexSet,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn components_of(g: &Graph, s: &VertexSet) -> usize {
    g.induced_subgraph(s).unwrap().0.component_count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn maximal_forests_are_acyclic_and_maximal(g in graph_strategy(9)) {
        let sets = enumerate_maximal_forests(&g, &EnumerationBudget::default()).unwrap().sets;
        prop_assert!(!sets.is_empty());
        for s in &sets {
            prop_assert!(g.is_induced_forest(s).unwrap());
            prop_assert_eq!(g.edges_within(s) + components_of(&g, s), s.len());
            for v in s.complement().iter() {
                prop_assert!(!g.is_induced_forest(&s.with(v)).unwrap());
            }
        }
        let hi = sets.iter().map(VertexSet::len).max().unwrap();
        let lo = sets.iter().map(VertexSet::len).min().unwrap();
        let verdict = decide_well_f_covered(&g);
        prop_assert_eq!(verdict.forest_number, hi);
        prop_assert_eq!(verdict.min_maximal_order, lo);
        prop_assert_eq!(verdict.well_f_covered, hi == lo);
    }

    #[test]
    fn maximal_independent_sets_are_maximal(g in graph_strategy(9)) {
        let sets = enumerate_maximal_independent_sets(&g);
        for s in &sets {
            prop_assert!(g.is_independent(s));
            for v in s.complement().iter() {
                prop_assert!(!g.is_independent(&s.with(v)));
            }
        }
        let iv = independence_verdict(&g);
        prop_assert_eq!(iv.alpha, sets.iter().map(VertexSet::len).max().unwrap());
        let dominating = (0..g.order()).any(|v| g.degree(v) + 1 == g.order());
        prop_assert_eq!(iv.has_singleton_mis, dominating);
    }

    #[test]
    fn forest_number_bounds(g in graph_strategy(9)) {
        let f = forest_number(&g);
        let alpha = independence_verdict(&g).alpha;
        prop_assert!(f >= alpha);
        prop_assert!(f >= g.order().min(2));
        prop_assert!(f + g.cyclomatic_number() >= g.order());
    }

    #[test]
    fn relabeling_invariance((g, perm) in with_permutation(9)) {
        let h = g.permuted(&perm).unwrap();
        let a = decide_well_f_covered(&g);
        let b = decide_well_f_covered(&h);
        prop_assert_eq!(a.well_f_covered, b.well_f_covered);
        prop_assert_eq!(a.forest_number, b.forest_number);
        prop_assert_eq!(a.min_maximal_order, b.min_maximal_order);
        prop_assert_eq!(independence_verdict(&g).well_covered, independence_verdict(&h).well_covered);
    }

    #[test]
    fn disjoint_union_is_additive(g in graph_strategy(6), h in graph_strategy(6)) {
        let u = disjoint_union(&g, &h).unwrap();
        let (a, b, c) = (decide_well_f_covered(&g), decide_well_f_covered(&h), decide_well_f_covered(&u.graph));
        prop_assert_eq!(c.forest_number, a.forest_number + b.forest_number);
        prop_assert_eq!(u.predicted_f, Some(c.forest_number));
        prop_assert_eq!(c.well_f_covered, a.well_f_covered && b.well_f_covered);
    }

    #[test]
    fn identification_predictions_hold(g in graph_strategy(5), h in graph_strategy(5), x in 0usize..5, y in 0usize..5) {
        prop_assume!(g.order() > 0 && h.order() > 0);
        let r = identify_vertex(&g, x % g.order(), &h, y % h.order()).unwrap();
        prop_assert_eq!(r.graph.order(), g.order() + h.order() - 1);
        if let Some(p) = r.predicted_f {
            prop_assert_eq!(forest_number(&r.graph), p);
        }
    }

    #[test]
    fn pendant_round_trip(g in graph_strategy(8), v in 0usize..8) {
        prop_assume!(g.order() > 0);
        let added = add_pendant_edge(&g, v % g.order()).unwrap();
        prop_assert_eq!(forest_number(&added.graph), added.predicted_f.unwrap());
        let back = remove_pendant(&added.graph, g.order()).unwrap();
        prop_assert_eq!(&back.graph, &g);
        prop_assert_eq!(back.predicted_f, Some(forest_number(&g)));
    }

    #[test]
    fn reduction_is_exact(g in graph_strategy(10)) {
        let direct = decide_well_f_covered(&g);
        let reduced = decide_well_f_covered_reduced(&g);
        prop_assert_eq!(direct.well_f_covered, reduced.well_f_covered);
        prop_assert_eq!(direct.forest_number, reduced.forest_number);
        prop_assert_eq!(direct.min_maximal_order, reduced.min_maximal_order);
        prop_assert!(g.is_induced_forest(&reduced.witness_max).unwrap());
        prop_assert!(g.is_induced_forest(&reduced.witness_min).unwrap());
        let trace = reduce(&g);
        for v in 0..trace.core.order() {
            prop_assert!(trace.core.degree(v) >= 2);
        }
        prop_assert!(trace.core.bridges().is_empty());
    }

    #[test]
    fn reduction_is_confluent(g in graph_strategy(10), picks in proptest::collection::vec(any::<usize>(), 64)) {
        let canonical = reduce(&g);
        let mut k = 0;
        let other = reduce_in_order(&g, |c| {
            k += 1;
            picks[k % picks.len()] % c.len()
        });
        prop_assert_eq!(&canonical.core_vertices, &other.core_vertices);
        prop_assert_eq!(canonical.core_edges_original(), other.core_edges_original());
        prop_assert_eq!(canonical.f_offset, other.f_offset);
    }

    #[test]
    fn text_round_trip(g in graph_strategy(12)) {
        let doc = wfcover::cli::parse_graph(&g.to_text()).unwrap();
        prop_assert_eq!(doc.n, g.order());
        let parsed = Graph::from_edges(doc.n, &doc.edges).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn rollback_restores_partition(ops in proptest::collection::vec((0usize..12, 0usize..12), 0..30), cut in 0usize..30) {
        let mut uf = RollbackUnionFind::new(12);
        let cut = cut.min(ops.len());
        for &(a, b) in &ops[..cut] {
            uf.union(a, b);
        }
        let mark = uf.checkpoint();
        let before: Vec<Vec<bool>> = (0..12).map(|a| (0..12).map(|b| uf.same(a, b)).collect()).collect();
        for &(a, b) in &ops[cut..] {
            uf.union(a, b);
        }
        uf.rollback(mark);
        let after: Vec<Vec<bool>> = (0..12).map(|a| (0..12).map(|b| uf.same(a, b)).collect()).collect();
        prop_assert_eq!(before, after);
    }
}
