//! Strip isolated vertices, pendant vertices and bridges, then decide on the core.

use wfcover::{decide_well_f_covered, decide_well_f_covered_reduced, reduce, Graph};

fn main() {
    // two triangles joined by a bridge, with a pendant path hanging off one corner
    let g = Graph::new(
        9,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3), (5, 6), (6, 7)],
    )
    .unwrap();
    let trace = reduce(&g);
    for step in &trace.steps {
        println!("{step:?}");
    }
    println!(
        "core: n={} m={} (original ids {:?}), offset {}",
        trace.core.order(),
        trace.core.size(),
        trace.core_vertices,
        trace.f_offset
    );
    let reduced = decide_well_f_covered_reduced(&g);
    let direct = decide_well_f_covered(&g);
    println!(
        "reduced: well-f-covered={} f={}   direct: well-f-covered={} f={}",
        reduced.well_f_covered, reduced.forest_number, direct.well_f_covered, direct.forest_number
    );
}
