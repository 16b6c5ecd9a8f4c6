//! Small named graphs with known classifications.

use crate::forest::decide_well_f_covered;
use crate::graph::{Graph, VertexSet};
use crate::independence::independence_verdict;

use super::{Recorder, Scale, TheoremCheckResult};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub well_f_covered: bool,
    pub well_covered: bool,
    /// Vertex sets stated to be maximal induced forests.
    pub maximal_forests: Vec<Vec<usize>>,
}

fn graph(name: &'static str, n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied())
        .expect("fixture edges are valid")
        .named(name)
}

pub fn fixtures() -> Vec<Fixture> {
    let fixture = |name, g, wfc, wc, forests: &[&[usize]]| Fixture {
        name,
        graph: g,
        well_f_covered: wfc,
        well_covered: wc,
        maximal_forests: forests.iter().map(|s| s.to_vec()).collect(),
    };
    // bowtie: x=0 y=1 z=2 t=3 p=4
    let bowtie = graph("G2", 5, &[(0, 2), (0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]);
    // a=0 b=1 c=2 d=3 e=4
    let g4 = graph("G4", 5, &[(0, 1), (0, 3), (3, 2), (2, 1), (4, 0), (4, 1)]);
    // x=0 y=1 z=2 t=3
    let fig2 = graph("figure2", 4, &[(0, 1), (1, 2), (0, 2)]);
    let p4 = graph("figure3", 4, &[(0, 1), (1, 2), (2, 3)]);
    vec![
        fixture("G1", graph("G1", 3, &[(0, 1), (1, 2), (0, 2)]), true, true, &[]),
        fixture("G2", bowtie, false, false, &[&[0, 1, 3, 4], &[0, 2, 4]]),
        fixture(
            "G3",
            graph("G3", 6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
            true,
            false,
            &[],
        ),
        fixture("G4", g4, false, true, &[&[4, 0, 3, 2], &[0, 1, 2]]),
        fixture("figure2", fig2.clone(), true, true, &[]),
        fixture(
            "figure2+zt",
            graph("figure2+zt", 4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
            true,
            false,
            &[],
        ),
        fixture("figure3", p4, true, true, &[]),
        fixture("figure3-e", graph("figure3-e", 4, &[(0, 1), (1, 2)]), true, false, &[]),
    ]
}

/// Checks every fixture's classification and its stated maximal forests.
pub fn fixture_suite() -> TheoremCheckResult {
    let mut rec = Recorder::new();
    run(&mut rec);
    let scale = Scale {
        exhaustive_n_max: 0,
        random_trials: 0,
        seed: 0,
    };
    rec.finish("S4.fixtures", scale)
}

pub(crate) fn run(rec: &mut Recorder) {
    for fx in fixtures() {
        rec.instance();
        let g = &fx.graph;
        let wfc = decide_well_f_covered(g).well_f_covered;
        let wc = independence_verdict(g).well_covered;
        let render = |a: bool, b: bool| format!("well_f_covered={a} well_covered={b}");
        if rec.expect_eq(
            g,
            fx.name,
            render(fx.well_f_covered, fx.well_covered),
            render(wfc, wc),
        ) {
            rec.tally(format!("{}: {}", fx.name, render(wfc, wc)));
        }
        for members in &fx.maximal_forests {
            let s = VertexSet::from_members(g.order(), members.iter().copied())
                .expect("fixture members are in range");
            let maximal = crate::forest::brute_force_maximal_forests(g, &Default::default())
                .map(|all| all.contains(&s))
                .unwrap_or(false);
            rec.expect_eq(
                g,
                &format!("{} set {s}", fx.name),
                format!("maximal forest of order {}", s.len()),
                if maximal {
                    format!("maximal forest of order {}", s.len())
                } else {
                    "not a maximal forest".into()
                },
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Verdict;

    #[test]
    fn suite_passes() {
        let r = fixture_suite();
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.counterexamples);
        assert_eq!(r.instances_checked, 8);
    }
}
