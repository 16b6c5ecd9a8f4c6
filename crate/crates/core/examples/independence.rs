//! Compare well-f-coveredness with well-coveredness on the named fixtures.

use wfcover::harness::fixtures;
use wfcover::{decide_well_f_covered, independence_verdict};

fn main() {
    println!("{:12} {:>5} {:>5} {:>6} {:>5}", "graph", "f", "wfc", "alpha", "wc");
    for fx in fixtures() {
        let f = decide_well_f_covered(&fx.graph);
        let i = independence_verdict(&fx.graph);
        println!(
            "{:12} {:>5} {:>5} {:>6} {:>5}",
            fx.name, f.forest_number, f.well_f_covered, i.alpha, i.well_covered
        );
    }
}
