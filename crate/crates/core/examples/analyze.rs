//! Decide well-f-coveredness for a few graphs and show the witnesses.

use wfcover::{decide_well_f_covered, Graph};

fn main() {
    let graphs = [
        ("C6", Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap()),
        (
            "bowtie",
            Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap(),
        ),
        ("K4", Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()),
    ];
    for (name, g) in graphs {
        let v = decide_well_f_covered(&g);
        println!(
            "{name:8} well-f-covered={:<5} f={} smallest maximal={}  largest={{{}}} smallest={{{}}}",
            v.well_f_covered, v.forest_number, v.min_maximal_order, v.witness_max, v.witness_min
        );
    }
}
