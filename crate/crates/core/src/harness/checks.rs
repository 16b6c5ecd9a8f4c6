//! The registered claims and their instance generators.

use std::collections::HashMap;

use crate::constructions::{
    clique_edge_gadget, connect_by_path, disjoint_union, family, glue_forest_along_path,
    identify_vertex, join, matched_cliques, replace_edge_with_path, Family,
};
use crate::forest::{
    brute_force_maximal_forests, check_boundary_characterizations, decide_well_f_covered,
    every_maximal_forest_contains, Biconditional, EnumerationBudget,
};
use crate::graph::{Edge, Graph};
use crate::independence::independence_verdict;

use super::generate::{labeled_graphs_up_to, random_graph, Sampler};
use super::{fixtures, Recorder, Scale, TheoremCheck};

/// Exhaustive factor order for claims about two arbitrary graphs.
const PAIR_N_MAX: usize = 4;
/// Exhaustive order for claims about one graph joined to a fixed partner.
const FACTOR_N_MAX: usize = 5;
/// Attempts allowed when sampling a graph with a required property.
const DRAW_ATTEMPTS: usize = 5000;

pub(crate) static REGISTRY: &[TheoremCheck] = &[
    TheoremCheck {
        id: "D3.1",
        generator: "all labeled graphs up to n_max, then random graphs of order 7..12",
        predicate: "well_f_covered and forest number agree with a subset-scan of maximal forests",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: d3_1,
    },
    TheoremCheck {
        id: "P3.cycle",
        generator: "C_n for n = 3..12, each with two random relabelings",
        predicate: "well-f-covered with f = n-1",
        default_n_max: 0,
        default_trials: 2,
        n_max_cap: 6,
        run: p3_cycle,
    },
    TheoremCheck {
        id: "P3.complete",
        generator: "K_n for n = 1..10",
        predicate: "well-f-covered with f = 2 (f = 1 for K_1)",
        default_n_max: 0,
        default_trials: 0,
        n_max_cap: 6,
        run: p3_complete,
    },
    TheoremCheck {
        id: "P3.bridge",
        generator: "every bridge of every labeled graph up to n_max, then of random graphs of order 7..10",
        predicate: "deleting the bridge keeps the verdict and the forest number",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: p3_bridge,
    },
    TheoremCheck {
        id: "S4.fixtures",
        generator: "named small graphs and two random relabelings of each",
        predicate: "well-f-covered and well-covered classifications match, stated maximal forests are maximal",
        default_n_max: 0,
        default_trials: 2,
        n_max_cap: 6,
        run: s4_fixtures,
    },
    TheoremCheck {
        id: "T5.f1",
        generator: "all labeled graphs up to n_max, then random graphs of order 7..10",
        predicate: "f = 1 iff the graph is K_1",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: t5_f1,
    },
    TheoremCheck {
        id: "T5.1",
        generator: "connected labeled graphs up to n_max, then connected random graphs",
        predicate: "f = 2 iff complete of order at least 2; complete graphs are well-f-covered",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: t5_1,
    },
    TheoremCheck {
        id: "T5.f2disc",
        generator: "disconnected labeled graphs up to n_max, then disconnected random graphs",
        predicate: "f = 2 iff edgeless of order 2",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: t5_f2disc,
    },
    TheoremCheck {
        id: "T5.fn",
        generator: "all labeled graphs up to n_max, then random graphs of order 7..10",
        predicate: "f = n iff forest; forests are well-f-covered",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: t5_fn,
    },
    TheoremCheck {
        id: "T5.2",
        generator: "all labeled graphs up to n_max, then random graphs of order 7..10",
        predicate: "well-f-covered with f = n-1 iff exactly one cycle",
        default_n_max: 6,
        default_trials: 100,
        n_max_cap: 6,
        run: t5_2,
    },
    TheoremCheck {
        id: "T6.1",
        generator: "all pairs of labeled graphs up to n_max per factor, then random pairs of order 1..8",
        predicate: "f(G+H) = f(G)+f(H); G+H well-f-covered iff both factors are",
        default_n_max: PAIR_N_MAX,
        default_trials: 200,
        n_max_cap: 5,
        run: t6_1,
    },
    TheoremCheck {
        id: "L6.2",
        generator: "well-f-covered G, H; x in every maximal forest of G; every y of H",
        predicate: "identifying x with y gives a well-f-covered graph with f = f(G)+f(H)-1",
        default_n_max: 3,
        default_trials: 200,
        n_max_cap: 4,
        run: l6_2,
    },
    TheoremCheck {
        id: "C6.3",
        generator: "well-f-covered G, H of order <= 5, random endpoints, path length d = 1..4",
        predicate: "the result is well-f-covered with f = f(G)+f(H)+d-1",
        default_n_max: 3,
        default_trials: 200,
        n_max_cap: 4,
        run: c6_3,
    },
    TheoremCheck {
        id: "L6.4",
        generator: "graphs with an edge having an endpoint of degree 2, subdivided into a path of length d = 2..4",
        predicate: "well-f-coveredness is preserved both ways and f grows by d-1",
        default_n_max: 5,
        default_trials: 200,
        n_max_cap: 6,
        run: l6_4,
    },
    TheoremCheck {
        id: "L6.5",
        generator: "random G with a path on k = 2..4 vertices, random forest H sharing a k-vertex path",
        predicate: "L well-f-covered iff G is; f(L) = f(G)+|V(H)|-k (the sign-swapped reading is tallied separately)",
        default_n_max: 0,
        default_trials: 200,
        n_max_cap: 6,
        run: l6_5,
    },
    TheoremCheck {
        id: "T6.6",
        generator: "clique edge gadget for n = 2..5, identity plus two random relabelings",
        predicate: "well-f-covered with f = C(n,2)+1",
        default_n_max: 0,
        default_trials: 2,
        n_max_cap: 6,
        run: t6_6,
    },
    TheoremCheck {
        id: "T6.7",
        generator: "s copies of K_n (n = 1..4, s = 1..4) with up to five distinct cross matchings",
        predicate: "well-f-covered; f = 2s when n >= 3",
        default_n_max: 0,
        default_trials: 5,
        n_max_cap: 6,
        run: t6_7,
    },
    TheoremCheck {
        id: "T6.8",
        generator: "joins of nonempty G without singleton maximal independent sets and nonempty H",
        predicate: "join well-f-covered iff G, H well-f-covered, G well-covered, H uniform on sets of size >= 2, f(G) = f(H) = alpha(G)+1 = alpha(H)+1",
        default_n_max: PAIR_N_MAX,
        default_trials: 200,
        n_max_cap: 5,
        run: t6_8,
    },
    TheoremCheck {
        id: "R6.9",
        generator: "joins of nonempty G, H, neither with a singleton maximal independent set",
        predicate: "a well-f-covered join forces H well-covered",
        default_n_max: PAIR_N_MAX,
        default_trials: 200,
        n_max_cap: 5,
        run: r6_9,
    },
    TheoremCheck {
        id: "T6.10",
        generator: "joins of G, H that both have a vertex adjacent to all others",
        predicate: "join well-f-covered iff both are complete",
        default_n_max: PAIR_N_MAX,
        default_trials: 200,
        n_max_cap: 5,
        run: t6_10,
    },
    TheoremCheck {
        id: "T6.11",
        generator: "joins of nonempty G with the edgeless graph of order m = 2..5",
        predicate: "join well-f-covered iff G well-f-covered, uniform on sets of size >= 2, f(G) = alpha(G)+1 = m+1",
        default_n_max: FACTOR_N_MAX,
        default_trials: 200,
        n_max_cap: 6,
        run: t6_11,
    },
    TheoremCheck {
        id: "R6.12",
        generator: "joins of nonempty G without singleton maximal independent sets with edgeless graphs of order m = 2..5",
        predicate: "a well-f-covered join forces G well-covered",
        default_n_max: FACTOR_N_MAX,
        default_trials: 200,
        n_max_cap: 6,
        run: r6_12,
    },
    TheoremCheck {
        id: "T6.13",
        generator: "joins of nonempty G without singleton maximal independent sets with K_1",
        predicate: "join well-f-covered iff G well-f-covered, well-covered and f(G) = alpha(G)+1",
        default_n_max: FACTOR_N_MAX,
        default_trials: 200,
        n_max_cap: 6,
        run: t6_13,
    },
    TheoremCheck {
        id: "C6.14",
        generator: "wheels W_n for n = 4..9, identity plus random relabelings",
        predicate: "well-f-covered iff n in {4, 5}",
        default_n_max: 0,
        default_trials: 1,
        n_max_cap: 6,
        run: c6_14,
    },
    TheoremCheck {
        id: "T6.15",
        generator: "joins of edgeless graphs of orders n1, n2 = 1..6",
        predicate: "well-f-covered iff n1 = n2 or min(n1, n2) = 1; f = n+1 when n1 = n2 = n",
        default_n_max: 0,
        default_trials: 0,
        n_max_cap: 6,
        run: t6_15,
    },
    TheoremCheck {
        id: "C6.16",
        generator: "K_{r,s} for r, s = 1..5, identity plus random relabelings",
        predicate: "well-f-covered iff r = s or min(r, s) = 1; f(K_{n,n}) = n+1",
        default_n_max: 0,
        default_trials: 1,
        n_max_cap: 6,
        run: c6_16,
    },
];

#[derive(Debug, Clone, Copy)]
struct Profile {
    n: usize,
    has_edge: bool,
    wfc: bool,
    f: usize,
    alpha: usize,
    well_covered: bool,
    singleton: bool,
    uniform2: bool,
}

impl Profile {
    fn of(g: &Graph) -> Profile {
        let fv = decide_well_f_covered(g);
        let iv = independence_verdict(g);
        Profile {
            n: g.order(),
            has_edge: g.size() > 0,
            wfc: fv.well_f_covered,
            f: fv.forest_number,
            alpha: iv.alpha,
            well_covered: iv.well_covered,
            singleton: iv.has_singleton_mis,
            uniform2: iv.size_ge2_uniform,
        }
    }

    fn render(&self) -> String {
        format!(
            "n={} wfc={} f={} alpha={} well_covered={} singleton_mis={} uniform_ge2={}",
            self.n, self.wfc, self.f, self.alpha, self.well_covered, self.singleton, self.uniform2
        )
    }
}

#[derive(Default)]
struct Profiles(HashMap<(usize, Vec<u64>), Profile>);

impl Profiles {
    fn get(&mut self, g: &Graph) -> Profile {
        *self
            .0
            .entry((g.order(), g.adjacency_rows().to_vec()))
            .or_insert_with(|| Profile::of(g))
    }
}

fn compact(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|e| format!("{}-{}", e.u, e.v)).collect();
    format!("n={} edges=[{}]", g.order(), edges.join(" "))
}

fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn verdict_text(wfc: bool, f: usize) -> String {
    format!("well_f_covered={wfc} f={f}")
}

/// Draws random graphs of order `lo..=hi` until one satisfies `want`.
fn draw<P>(s: &mut Sampler, lo: usize, hi: usize, profiles: &mut Profiles, want: P) -> Option<(Graph, Profile)>
where
    P: Fn(&Graph, &Profile) -> bool,
{
    for _ in 0..DRAW_ATTEMPTS {
        let g = s.graph(lo, hi);
        let p = profiles.get(&g);
        if want(&g, &p) {
            return Some((g, p));
        }
    }
    None
}

/// Exhaustive graphs up to `n_max` followed by `trials` random graphs of
/// order `lo..=hi`; `body` receives a description of each instance.
fn single_graphs<F>(scale: &Scale, id: &str, lo: usize, hi: usize, rec: &mut Recorder, mut body: F)
where
    F: FnMut(&Graph, &str, &mut Recorder),
{
    for g in labeled_graphs_up_to(scale.exhaustive_n_max) {
        body(&g, "exhaustive", rec);
    }
    let mut s = Sampler::new(scale.seed, id);
    for _ in 0..scale.random_trials {
        let n = s.range(lo, hi);
        let spec = s.spec(n);
        let g = random_graph(spec);
        let ctx = format!("random n={} p={} seed={}", spec.n, spec.p, spec.seed);
        body(&g, &ctx, rec);
    }
}

fn biconditional(rec: &mut Recorder, g: &Graph, ctx: &str, b: Biconditional, left: &str, right: &str) {
    if !b.applicable {
        return;
    }
    rec.instance();
    rec.tally(match (b.left, b.right) {
        (true, true) => "both sides hold",
        (false, false) => "both sides fail",
        (true, false) => "only left holds",
        (false, true) => "only right holds",
    });
    if !b.agrees() {
        rec.fail(
            g,
            ctx,
            format!("({left}) = ({right}) = {}", b.right),
            format!("({left}) = {}", b.left),
        );
    }
}

fn d3_1(scale: &Scale, rec: &mut Recorder) {
    let budget = EnumerationBudget::default();
    single_graphs(scale, "D3.1", 7, 12, rec, |g, ctx, rec| {
        rec.instance();
        let sets = brute_force_maximal_forests(g, &budget).expect("order within brute-force limit");
        let lo = sets.iter().map(|s| s.len()).min().unwrap_or(0);
        let hi = sets.iter().map(|s| s.len()).max().unwrap_or(0);
        let v = decide_well_f_covered(g);
        let render = |wfc: bool, f: usize, min: usize| format!("well_f_covered={wfc} f={f} min_maximal={min}");
        if rec.expect_eq(
            g,
            ctx,
            render(lo == hi, hi, lo),
            render(v.well_f_covered, v.forest_number, v.min_maximal_order),
        ) {
            rec.tally(if lo == hi { "well-f-covered" } else { "not well-f-covered" });
        }
    });
}

fn p3_cycle(scale: &Scale, rec: &mut Recorder) {
    let mut s = Sampler::new(scale.seed, "P3.cycle");
    for n in 3..=12 {
        let base = family(Family::Cycle(n)).expect("valid cycle").graph;
        let mut copies = vec![base.clone()];
        copies.extend((0..scale.random_trials).map(|_| s.relabel(&base)));
        for g in copies {
            rec.instance();
            let v = decide_well_f_covered(&g);
            if rec.expect_eq(
                &g,
                &format!("C_{n}"),
                verdict_text(true, n - 1),
                verdict_text(v.well_f_covered, v.forest_number),
            ) {
                rec.tally("cycles confirmed");
            }
        }
    }
}

fn p3_complete(_scale: &Scale, rec: &mut Recorder) {
    for n in 1..=10 {
        let g = family(Family::Complete(n)).expect("valid complete graph").graph;
        rec.instance();
        let v = decide_well_f_covered(&g);
        let want = if n == 1 { 1 } else { 2 };
        if rec.expect_eq(
            &g,
            &format!("K_{n}"),
            verdict_text(true, want),
            verdict_text(v.well_f_covered, v.forest_number),
        ) {
            rec.tally("complete graphs confirmed");
        }
    }
}

fn p3_bridge(scale: &Scale, rec: &mut Recorder) {
    single_graphs(scale, "P3.bridge", 7, 10, rec, |g, ctx, rec| {
        let bridges = g.bridges();
        if bridges.is_empty() {
            return;
        }
        let before = decide_well_f_covered(g);
        for e in bridges {
            rec.instance();
            let after = decide_well_f_covered(&g.without_edge(e));
            if rec.expect_eq(
                g,
                &format!("{ctx}\nbridge {e} removed"),
                verdict_text(before.well_f_covered, before.forest_number),
                verdict_text(after.well_f_covered, after.forest_number),
            ) {
                rec.tally(if before.well_f_covered {
                    "well-f-covered both ways"
                } else {
                    "not well-f-covered both ways"
                });
            }
        }
    });
}

fn s4_fixtures(scale: &Scale, rec: &mut Recorder) {
    fixtures::run(rec);
    let mut s = Sampler::new(scale.seed, "S4.fixtures");
    for fx in fixtures::fixtures() {
        for _ in 0..scale.random_trials {
            let g = s.relabel(&fx.graph);
            rec.instance();
            let wfc = decide_well_f_covered(&g).well_f_covered;
            let wc = independence_verdict(&g).well_covered;
            let render = |a: bool, b: bool| format!("well_f_covered={a} well_covered={b}");
            rec.expect_eq(
                &g,
                &format!("{} relabeled", fx.name),
                render(fx.well_f_covered, fx.well_covered),
                render(wfc, wc),
            );
        }
    }
}

fn t5_f1(scale: &Scale, rec: &mut Recorder) {
    single_graphs(scale, "T5.f1", 7, 10, rec, |g, ctx, rec| {
        let r = check_boundary_characterizations(g);
        biconditional(rec, g, ctx, r.trivial, "f = 1", "trivial graph");
    });
}

fn t5_1(scale: &Scale, rec: &mut Recorder) {
    single_graphs(scale, "T5.1", 7, 10, rec, |g, ctx, rec| {
        let r = check_boundary_characterizations(g);
        biconditional(rec, g, ctx, r.complete, "f = 2", "complete of order >= 2");
        if r.complete.applicable && r.complete.right && !decide_well_f_covered(g).well_f_covered {
            rec.fail(g, ctx, "complete graph is well-f-covered".into(), "not well-f-covered".into());
        }
    });
}

fn t5_f2disc(scale: &Scale, rec: &mut Recorder) {
    single_graphs(scale, "T5.f2disc", 7, 10, rec, |g, ctx, rec| {
        let r = check_boundary_characterizations(g);
        biconditional(rec, g, ctx, r.empty_pair, "f = 2", "edgeless of order 2");
    });
}

fn t5_fn(scale: &Scale, rec: &mut Recorder) {
    single_graphs(scale, "T5.fn", 7, 10, rec, |g, ctx, rec| {
        let r = check_boundary_characterizations(g);
        biconditional(rec, g, ctx, r.forest, "f = n", "forest");
        if r.forest.right && !decide_well_f_covered(g).well_f_covered {
            rec.fail(g, ctx, "forest is well-f-covered".into(), "not well-f-covered".into());
        }
    });
}

fn t5_2(scale: &Scale, rec: &mut Recorder) {
    single_graphs(scale, "T5.2", 7, 10, rec, |g, ctx, rec| {
        let r = check_boundary_characterizations(g);
        biconditional(
            rec,
            g,
            ctx,
            r.unicyclic,
            "well-f-covered with f = n-1",
            "exactly one cycle",
        );
    });
}

fn t6_1(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let one = |g: &Graph, h: &Graph, ctx: &str, rec: &mut Recorder, profiles: &mut Profiles| {
        rec.instance();
        let (pg, ph) = (profiles.get(g), profiles.get(h));
        let u = disjoint_union(g, h).expect("orders fit").graph;
        let v = decide_well_f_covered(&u);
        let ctx = format!("{ctx}\nG: {}\nH: {}", compact(g), compact(h));
        if rec.expect_eq(
            &u,
            &ctx,
            verdict_text(pg.wfc && ph.wfc, pg.f + ph.f),
            verdict_text(v.well_f_covered, v.forest_number),
        ) {
            rec.tally(if v.well_f_covered {
                "union and both factors well-f-covered"
            } else {
                "union and some factor not well-f-covered"
            });
        }
    };
    let small: Vec<Graph> = labeled_graphs_up_to(scale.exhaustive_n_max).collect();
    for g in &small {
        for h in &small {
            one(g, h, "exhaustive pair", rec, &mut profiles);
        }
    }
    let mut s = Sampler::new(scale.seed, "T6.1");
    for t in 0..scale.random_trials {
        let g = s.graph(1, 8);
        let h = s.graph(1, 8);
        one(&g, &h, &format!("random pair {t}"), rec, &mut profiles);
    }
}

fn wfc_graph(s: &mut Sampler, lo: usize, hi: usize, profiles: &mut Profiles) -> (Graph, Profile) {
    draw(s, lo, hi, profiles, |_, p| p.wfc).unwrap_or_else(|| {
        let g = family(Family::Path(lo.max(1))).expect("valid path").graph;
        let p = profiles.get(&g);
        (g, p)
    })
}

fn l6_2(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let one = |g: &Graph, x: usize, h: &Graph, y: usize, ctx: &str, rec: &mut Recorder, profiles: &mut Profiles| {
        rec.instance();
        let (pg, ph) = (profiles.get(g), profiles.get(h));
        let r = identify_vertex(g, x, h, y).expect("vertices in range").graph;
        let v = decide_well_f_covered(&r);
        let ctx = format!("{ctx}\nG: {} x={x}\nH: {} y={y}", compact(g), compact(h));
        if rec.expect_eq(
            &r,
            &ctx,
            verdict_text(true, pg.f + ph.f - 1),
            verdict_text(v.well_f_covered, v.forest_number),
        ) {
            rec.tally("identification confirmed");
        }
    };
    let small: Vec<Graph> = labeled_graphs_up_to(scale.exhaustive_n_max)
        .filter(|g| g.order() > 0 && decide_well_f_covered(g).well_f_covered)
        .collect();
    for g in &small {
        for x in 0..g.order() {
            if !every_maximal_forest_contains(g, x).expect("in range") {
                continue;
            }
            for h in &small {
                for y in 0..h.order() {
                    one(g, x, h, y, "exhaustive", rec, &mut profiles);
                }
            }
        }
    }
    let mut s = Sampler::new(scale.seed, "L6.2");
    for t in 0..scale.random_trials {
        let mut picked = None;
        for _ in 0..100 {
            let (g, _) = wfc_graph(&mut s, 2, 7, &mut profiles);
            let xs: Vec<usize> = (0..g.order())
                .filter(|&x| every_maximal_forest_contains(&g, x).expect("in range"))
                .collect();
            if let Some(&x) = s.pick(&xs) {
                picked = Some((g, x));
                break;
            }
        }
        let Some((g, x)) = picked else {
            rec.note(format!("trial {t}: no graph with a vertex in every maximal forest"));
            continue;
        };
        let (h, _) = wfc_graph(&mut s, 1, 6, &mut profiles);
        let y = s.range(0, h.order() - 1);
        one(&g, x, &h, y, &format!("random trial {t}"), rec, &mut profiles);
    }
}

fn c6_3(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let one = |g: &Graph, x: usize, h: &Graph, y: usize, d: usize, ctx: &str, rec: &mut Recorder, profiles: &mut Profiles| {
        rec.instance();
        let (pg, ph) = (profiles.get(g), profiles.get(h));
        let r = connect_by_path(g, x, h, y, d).expect("valid attachment").graph;
        let v = decide_well_f_covered(&r);
        let ctx = format!("{ctx}\nG: {} x={x}\nH: {} y={y}\nd={d}", compact(g), compact(h));
        if rec.expect_eq(
            &r,
            &ctx,
            verdict_text(true, pg.f + ph.f + d - 1),
            verdict_text(v.well_f_covered, v.forest_number),
        ) {
            rec.tally(format!("d={d} confirmed"));
        }
    };
    let small: Vec<Graph> = labeled_graphs_up_to(scale.exhaustive_n_max)
        .filter(|g| g.order() > 0 && decide_well_f_covered(g).well_f_covered)
        .collect();
    for g in &small {
        for h in &small {
            for d in 1..=2 {
                one(g, 0, h, h.order() - 1, d, "exhaustive", rec, &mut profiles);
            }
        }
    }
    let mut s = Sampler::new(scale.seed, "C6.3");
    for t in 0..scale.random_trials {
        let (g, _) = wfc_graph(&mut s, 1, 5, &mut profiles);
        let (h, _) = wfc_graph(&mut s, 1, 5, &mut profiles);
        let x = s.range(0, g.order() - 1);
        let y = s.range(0, h.order() - 1);
        let d = s.range(1, 4);
        one(&g, x, &h, y, d, &format!("random trial {t}"), rec, &mut profiles);
    }
}

fn subdivisible_edges(g: &Graph) -> Vec<Edge> {
    g.edges()
        .filter(|e| g.degree(e.u) == 2 || g.degree(e.v) == 2)
        .collect()
}

fn l6_4(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let one = |g: &Graph, e: Edge, d: usize, ctx: &str, rec: &mut Recorder, profiles: &mut Profiles| {
        rec.instance();
        let pg = profiles.get(g);
        let r = replace_edge_with_path(g, e, d).expect("eligible edge").graph;
        let v = decide_well_f_covered(&r);
        let ctx = format!("{ctx}\nG: {}\nedge {e} replaced by a path of length {d}", compact(g));
        if rec.expect_eq(
            &r,
            &ctx,
            verdict_text(pg.wfc, pg.f + d - 1),
            verdict_text(v.well_f_covered, v.forest_number),
        ) {
            rec.tally(if pg.wfc {
                "both well-f-covered"
            } else {
                "neither well-f-covered"
            });
        }
    };
    for g in labeled_graphs_up_to(scale.exhaustive_n_max) {
        for e in subdivisible_edges(&g) {
            for d in 2..=3 {
                one(&g, e, d, "exhaustive", rec, &mut profiles);
            }
        }
    }
    let mut s = Sampler::new(scale.seed, "L6.4");
    for t in 0..scale.random_trials {
        let Some((g, _)) = draw(&mut s, 3, 8, &mut profiles, |g, _| !subdivisible_edges(g).is_empty()) else {
            rec.note(format!("trial {t}: no graph with an eligible edge"));
            continue;
        };
        let edges = subdivisible_edges(&g);
        let e = *s.pick(&edges).expect("nonempty");
        let d = s.range(2, 4);
        one(&g, e, d, &format!("random trial {t}"), rec, &mut profiles);
    }
}

fn l6_5(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let mut s = Sampler::new(scale.seed, "L6.5");
    for t in 0..scale.random_trials {
        let k = s.range(2, 4);
        let mut picked = None;
        for _ in 0..DRAW_ATTEMPTS {
            let g = s.graph(k.max(3), 8);
            if let Some(p) = s.path(&g, k) {
                picked = Some((g, p));
                break;
            }
        }
        let Some((g, path_g)) = picked else {
            rec.note(format!("trial {t}: no graph with a {k}-vertex path"));
            continue;
        };
        let extra = s.range(0, 4);
        let (h, path_h) = s.forest_with_path(k, extra);
        let pg = profiles.get(&g);
        let l = glue_forest_along_path(&g, &path_g, &h, &path_h)
            .expect("valid gluing")
            .graph;
        let v = decide_well_f_covered(&l);
        rec.instance();
        let ctx = format!(
            "random trial {t}\nG: {} path {:?}\nH: {} path {:?}",
            compact(&g),
            path_g,
            compact(&h),
            path_h
        );
        let proof = pg.f + h.order() - k;
        let ok = rec.expect_eq(
            &l,
            &ctx,
            verdict_text(pg.wfc, proof),
            verdict_text(v.well_f_covered, v.forest_number),
        );
        rec.tally(if ok {
            "proof variant f(G)+|V(H)|-n holds"
        } else {
            "proof variant f(G)+|V(H)|-n fails"
        });
        let statement = (pg.f + k).checked_sub(h.order());
        if statement == Some(v.forest_number) {
            rec.tally("statement variant f(G)-|V(H)|+n holds");
        } else {
            rec.tally("statement variant f(G)-|V(H)|+n fails");
            rec.erratum(
                &l,
                &format!("{ctx}\nsign-swapped reading f(G)-|V(H)|+n"),
                match statement {
                    Some(f) => format!("f={f}"),
                    None => format!("f={}-{}+{} < 0", pg.f, h.order(), k),
                },
                format!("f={}", v.forest_number),
            );
        }
    }
    rec.note("forest gluing: the proof's f(G)+|V(H)|-n is checked as the claim; the sign-swapped f(G)-|V(H)|+n is tallied as a known erratum");
}

fn t6_6(scale: &Scale, rec: &mut Recorder) {
    let mut s = Sampler::new(scale.seed, "T6.6");
    for n in 2..=5 {
        let built = clique_edge_gadget(n).expect("valid order");
        let mut copies = vec![built.graph.clone()];
        copies.extend((0..scale.random_trials).map(|_| s.relabel(&built.graph)));
        for g in copies {
            rec.instance();
            let v = decide_well_f_covered(&g);
            if rec.expect_eq(
                &g,
                &format!("clique edge gadget n={n}"),
                verdict_text(true, binomial2(n) + 1),
                verdict_text(v.well_f_covered, v.forest_number),
            ) {
                rec.tally(format!("n={n} f={}", v.forest_number));
            }
        }
    }
}

fn random_matching(s: &mut Sampler, n: usize, cliques: usize) -> Vec<(usize, usize)> {
    let total = n * cliques;
    let cross: Vec<(usize, usize)> = (0..total)
        .flat_map(|a| (a + 1..total).map(move |b| (a, b)))
        .filter(|&(a, b)| a / n != b / n)
        .collect();
    let order = s.permutation(cross.len());
    let mut used = vec![false; total];
    let mut m = Vec::new();
    for i in order {
        let (a, b) = cross[i];
        if !used[a] && !used[b] && s.chance(0.5) {
            used[a] = true;
            used[b] = true;
            m.push((a, b));
        }
    }
    m.sort();
    m
}

fn t6_7(scale: &Scale, rec: &mut Recorder) {
    let mut s = Sampler::new(scale.seed, "T6.7");
    for n in 1..=4 {
        for cliques in 1..=4 {
            let mut shapes: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
            for _ in 0..200 {
                if shapes.len() >= scale.random_trials.max(1) {
                    break;
                }
                let m = random_matching(&mut s, n, cliques);
                if !shapes.contains(&m) {
                    shapes.push(m);
                }
            }
            rec.tally(format!("n={n} s={cliques}: {} matching shapes", shapes.len()));
            for m in shapes {
                rec.instance();
                let g = matched_cliques(n, cliques, &m).expect("valid matching").graph;
                let v = decide_well_f_covered(&g);
                let ctx = format!("{cliques} copies of K_{n}, matching {m:?}");
                if n >= 3 {
                    rec.expect_eq(
                        &g,
                        &ctx,
                        verdict_text(true, 2 * cliques),
                        verdict_text(v.well_f_covered, v.forest_number),
                    );
                } else {
                    rec.expect_eq(
                        &g,
                        &ctx,
                        "well_f_covered=true".into(),
                        format!("well_f_covered={}", v.well_f_covered),
                    );
                }
            }
        }
    }
}

/// Factor graphs with their profiles for the exhaustive join scans.
fn small_profiled(n_max: usize, profiles: &mut Profiles) -> Vec<(Graph, Profile)> {
    labeled_graphs_up_to(n_max)
        .map(|g| {
            let p = profiles.get(&g);
            (g, p)
        })
        .collect()
}

/// Evaluates a join biconditional: `conditions` against the join's verdict,
/// and, when the join is well-f-covered, the stated forest number.
#[allow(clippy::too_many_arguments)]
fn join_claim(
    rec: &mut Recorder,
    g: &Graph,
    pg: &Profile,
    h: &Graph,
    ph: &Profile,
    ctx: &str,
    conditions: bool,
    f_when_wfc: &[usize],
) {
    rec.instance();
    let j = join(g, h).expect("orders fit").graph;
    let v = decide_well_f_covered(&j);
    let ctx = format!(
        "{ctx}\nG: {} ({})\nH: {} ({})",
        compact(g),
        pg.render(),
        compact(h),
        ph.render()
    );
    rec.tally(match (v.well_f_covered, conditions) {
        (true, true) => "join well-f-covered, conditions hold",
        (false, false) => "join not well-f-covered, conditions fail",
        (true, false) => "join well-f-covered, conditions fail",
        (false, true) => "join not well-f-covered, conditions hold",
    });
    if v.well_f_covered != conditions {
        rec.fail(
            &j,
            &ctx,
            format!("join well_f_covered={conditions} (conditions {})", if conditions { "hold" } else { "fail" }),
            format!("join well_f_covered={}", v.well_f_covered),
        );
    } else if v.well_f_covered && f_when_wfc.iter().any(|&f| f != v.forest_number) {
        rec.fail(
            &j,
            &ctx,
            format!("f(join) = {f_when_wfc:?}"),
            format!("f(join) = {}", v.forest_number),
        );
    }
}

/// Evaluates a one-way implication from a well-f-covered join.
fn join_implies(rec: &mut Recorder, g: &Graph, h: &Graph, ctx: &str, what: &str, holds: bool) {
    rec.instance();
    let j = join(g, h).expect("orders fit").graph;
    if !decide_well_f_covered(&j).well_f_covered {
        rec.tally("join not well-f-covered");
        return;
    }
    rec.tally("join well-f-covered");
    if !holds {
        rec.fail(
            &j,
            &format!("{ctx}\nG: {}\nH: {}", compact(g), compact(h)),
            format!("{what} = true"),
            format!("{what} = false"),
        );
    }
}

fn t6_8_domain(pg: &Profile, ph: &Profile) -> bool {
    pg.has_edge && !pg.singleton && ph.has_edge
}

fn t6_8_conditions(pg: &Profile, ph: &Profile) -> bool {
    pg.wfc
        && ph.wfc
        && pg.well_covered
        && ph.uniform2
        && pg.f == ph.f
        && ph.f == pg.alpha + 1
        && pg.alpha == ph.alpha
}

/// Random graphs of order `lo..=hi` satisfying `want`, gathered from a fixed
/// number of draws.
fn pool<P>(s: &mut Sampler, lo: usize, hi: usize, draws: usize, profiles: &mut Profiles, want: P) -> Vec<(Graph, Profile)>
where
    P: Fn(&Profile) -> bool,
{
    let mut out = Vec::new();
    for _ in 0..draws {
        let g = s.graph(lo, hi);
        let p = profiles.get(&g);
        if want(&p) {
            out.push((g, p));
        }
    }
    out
}

fn t6_8(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let small = small_profiled(scale.exhaustive_n_max, &mut profiles);
    for (g, pg) in &small {
        for (h, ph) in &small {
            if t6_8_domain(pg, ph) {
                let cond = t6_8_conditions(pg, ph);
                join_claim(rec, g, pg, h, ph, "exhaustive pair", cond, &[pg.f, ph.f]);
            }
        }
    }
    let mut s = Sampler::new(scale.seed, "T6.8");
    let gpool = pool(&mut s, 2, 7, 3000, &mut profiles, |p| {
        p.has_edge && !p.singleton && p.wfc && p.well_covered && p.f == p.alpha + 1
    });
    let hpool = pool(&mut s, 2, 7, 3000, &mut profiles, |p| {
        p.has_edge && p.wfc && p.uniform2 && p.f == p.alpha + 1
    });
    rec.tally(format!("converse pool sizes G={} H={}", gpool.len(), hpool.len()));
    for t in 0..scale.random_trials {
        if t % 2 == 0 && !gpool.is_empty() {
            let (g, pg) = s.pick(&gpool).expect("nonempty").clone();
            let matching: Vec<(Graph, Profile)> = hpool.iter().filter(|(_, p)| p.f == pg.f).cloned().collect();
            if let Some((h, ph)) = s.pick(&matching).cloned() {
                let (g, h) = (s.relabel(&g), s.relabel(&h));
                join_claim(rec, &g, &pg, &h, &ph, &format!("converse trial {t}"), t6_8_conditions(&pg, &ph), &[pg.f]);
                continue;
            }
        }
        let Some((g, pg)) = draw(&mut s, 2, 7, &mut profiles, |_, p| p.has_edge && !p.singleton) else {
            continue;
        };
        let Some((h, ph)) = draw(&mut s, 2, 7, &mut profiles, |_, p| p.has_edge) else {
            continue;
        };
        join_claim(rec, &g, &pg, &h, &ph, &format!("random trial {t}"), t6_8_conditions(&pg, &ph), &[pg.f, ph.f]);
    }
}

fn r6_9(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let small = small_profiled(scale.exhaustive_n_max, &mut profiles);
    let domain = |pg: &Profile, ph: &Profile| t6_8_domain(pg, ph) && !ph.singleton;
    for (g, pg) in &small {
        for (h, ph) in &small {
            if domain(pg, ph) {
                join_implies(rec, g, h, "exhaustive pair", "H well-covered", ph.well_covered);
            }
        }
    }
    let mut s = Sampler::new(scale.seed, "R6.9");
    let want = |_: &Graph, p: &Profile| p.has_edge && !p.singleton;
    for t in 0..scale.random_trials {
        let (Some((g, _)), Some((h, ph))) = (
            draw(&mut s, 2, 7, &mut profiles, want),
            draw(&mut s, 2, 7, &mut profiles, want),
        ) else {
            continue;
        };
        join_implies(rec, &g, &h, &format!("random trial {t}"), "H well-covered", ph.well_covered);
    }
}

fn with_dominating_vertex(s: &mut Sampler, g: &Graph) -> Graph {
    let hub = Graph::empty(1);
    let j = join(g, &hub).expect("orders fit").graph;
    s.relabel(&j)
}

fn t6_10(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let small = small_profiled(scale.exhaustive_n_max, &mut profiles);
    for (g, pg) in &small {
        for (h, ph) in &small {
            if pg.singleton && ph.singleton {
                let cond = g.is_complete() && h.is_complete();
                join_claim(rec, g, pg, h, ph, "exhaustive pair", cond, &[2]);
            }
        }
    }
    let mut s = Sampler::new(scale.seed, "T6.10");
    for t in 0..scale.random_trials {
        let (g, h) = if t % 4 == 0 {
            let a = s.range(1, 7);
            let b = s.range(1, 7);
            (
                family(Family::Complete(a)).expect("valid").graph,
                family(Family::Complete(b)).expect("valid").graph,
            )
        } else {
            let g = s.graph(0, 6);
            let h = s.graph(0, 6);
            (with_dominating_vertex(&mut s, &g), with_dominating_vertex(&mut s, &h))
        };
        let (pg, ph) = (profiles.get(&g), profiles.get(&h));
        let cond = g.is_complete() && h.is_complete();
        join_claim(rec, &g, &pg, &h, &ph, &format!("random trial {t}"), cond, &[2]);
    }
}

fn t6_11_conditions(pg: &Profile, m: usize) -> bool {
    pg.wfc && pg.uniform2 && pg.f == pg.alpha + 1 && pg.f == m + 1
}

fn t6_11(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let small = small_profiled(scale.exhaustive_n_max, &mut profiles);
    let empties: Vec<(Graph, Profile)> = (2..=5)
        .map(|m| {
            let e = Graph::empty(m);
            let p = profiles.get(&e);
            (e, p)
        })
        .collect();
    for (g, pg) in small.iter().filter(|(_, p)| p.has_edge) {
        for (h, ph) in &empties {
            let m = h.order();
            join_claim(rec, g, pg, h, ph, "exhaustive", t6_11_conditions(pg, m), &[pg.f, m + 1]);
        }
    }
    let mut s = Sampler::new(scale.seed, "T6.11");
    let gpool = pool(&mut s, 2, 7, 3000, &mut profiles, |p| {
        p.has_edge && p.wfc && p.uniform2 && p.f == p.alpha + 1 && p.f >= 3
    });
    rec.tally(format!("converse pool size {}", gpool.len()));
    for t in 0..scale.random_trials {
        let (g, pg, m) = match s.pick(&gpool).cloned() {
            Some((g, pg)) if t % 2 == 0 => (s.relabel(&g), pg, pg.f - 1),
            _ => {
                let Some((g, pg)) = draw(&mut s, 2, 7, &mut profiles, |_, p| p.has_edge) else {
                    continue;
                };
                let m = s.range(2, 5);
                (g, pg, m)
            }
        };
        let h = Graph::empty(m);
        let ph = profiles.get(&h);
        let cond = t6_11_conditions(&pg, m);
        join_claim(rec, &g, &pg, &h, &ph, &format!("trial {t}"), cond, &[pg.f, m + 1]);
    }
}

fn r6_12(scale: &Scale, rec: &mut Recorder) {
    let mut profiles = Profiles::default();
    let small = small_profiled(scale.exhaustive_n_max, &mut profiles);
    for (g, pg) in small.iter().filter(|(_, p)| p.has_edge && !p.singleton) {
        for m in 2..=5 {
            join_implies(rec, g, &Graph::empty(m), "exhaustive", "G well-covered", pg.well_covered);
        }
    }
    let mut s = Sampler::new(scale.seed, "R6.12");
    for t in 0..scale.random_trials {
        let Some((g, pg)) = draw(&mut s, 2, 7, &mut profiles, |_, p| p.has_edge && !p.singleton) else {
            continue;
        };
        let m = if t % 2 == 0 { pg.f.saturating_sub(1).max(2) } else { s.range(2, 5) };
        join_implies(rec, &g, &Graph::empty(m), &format!("random trial {t}"), "G well-covered", pg.well_covered);
    }
}

fn t6_13_conditions(pg: &Profile) -> bool {
    pg.wfc && pg.well_covered && pg.f == pg.alpha + 1
}

fn t6_13(scale: &Scale, rec: &mut Recorder) {
    rec.note("hypothesis read as: G has an edge and no maximal independent set of size 1");
    let mut profiles = Profiles::default();
    let k1 = Graph::empty(1);
    let pk = profiles.get(&k1);
    let small = small_profiled(scale.exhaustive_n_max, &mut profiles);
    for (g, pg) in small.iter().filter(|(_, p)| p.has_edge && !p.singleton) {
        join_claim(rec, g, pg, &k1, &pk, "exhaustive", t6_13_conditions(pg), &[pg.f]);
    }
    let mut s = Sampler::new(scale.seed, "T6.13");
    let gpool = pool(&mut s, 2, 8, 3000, &mut profiles, |p| {
        p.has_edge && !p.singleton && t6_13_conditions(p)
    });
    rec.tally(format!("converse pool size {}", gpool.len()));
    for t in 0..scale.random_trials {
        let picked = match s.pick(&gpool).cloned() {
            Some((g, pg)) if t % 2 == 0 => Some((s.relabel(&g), pg)),
            _ => draw(&mut s, 2, 8, &mut profiles, |_, p| p.has_edge && !p.singleton),
        };
        let Some((g, pg)) = picked else { continue };
        join_claim(rec, &g, &pg, &k1, &pk, &format!("trial {t}"), t6_13_conditions(&pg), &[pg.f]);
    }
}

fn c6_14(scale: &Scale, rec: &mut Recorder) {
    let mut s = Sampler::new(scale.seed, "C6.14");
    for n in 4..=9 {
        let base = family(Family::Wheel(n)).expect("valid wheel").graph;
        let mut copies = vec![base.clone()];
        copies.extend((0..scale.random_trials).map(|_| s.relabel(&base)));
        let expected = n == 4 || n == 5;
        for g in copies {
            rec.instance();
            let v = decide_well_f_covered(&g);
            if rec.expect_eq(
                &g,
                &format!("W_{n}"),
                format!("well_f_covered={expected}"),
                format!("well_f_covered={}", v.well_f_covered),
            ) {
                rec.tally(format!(
                    "W_{n}: well_f_covered={} f={} min_maximal={}",
                    v.well_f_covered, v.forest_number, v.min_maximal_order
                ));
            }
        }
    }
}

fn t6_15(_scale: &Scale, rec: &mut Recorder) {
    for a in 1..=6 {
        for b in 1..=6 {
            rec.instance();
            let j = join(&Graph::empty(a), &Graph::empty(b)).expect("orders fit").graph;
            let v = decide_well_f_covered(&j);
            let expected = a == b || a.min(b) == 1;
            let ctx = format!("edgeless orders {a} and {b}");
            let ok = rec.expect_eq(
                &j,
                &ctx,
                format!("well_f_covered={expected}"),
                format!("well_f_covered={}", v.well_f_covered),
            );
            if a == b {
                rec.expect_eq(&j, &ctx, format!("f={}", a + 1), format!("f={}", v.forest_number));
            }
            if ok {
                rec.tally(if expected { "well-f-covered" } else { "not well-f-covered" });
            }
        }
    }
}

fn c6_16(scale: &Scale, rec: &mut Recorder) {
    let mut s = Sampler::new(scale.seed, "C6.16");
    for r in 1..=5 {
        for t in 1..=5 {
            let base = family(Family::CompleteBipartite(r, t)).expect("valid").graph;
            let mut copies = vec![base.clone()];
            copies.extend((0..scale.random_trials).map(|_| s.relabel(&base)));
            let expected = r == t || r.min(t) == 1;
            for g in copies {
                rec.instance();
                let v = decide_well_f_covered(&g);
                let ctx = format!("K_{{{r},{t}}}");
                let ok = rec.expect_eq(
                    &g,
                    &ctx,
                    format!("well_f_covered={expected}"),
                    format!("well_f_covered={}", v.well_f_covered),
                );
                if r == t {
                    rec.expect_eq(&g, &ctx, format!("f={}", r + 1), format!("f={}", v.forest_number));
                }
                if ok {
                    rec.tally(if expected { "well-f-covered" } else { "not well-f-covered" });
                }
            }
        }
    }
}
