//! Wheels W_n = C_{n-1} plus a hub: which are well-f-covered?

use wfcover::constructions::{family, Family};
use wfcover::{decide_well_f_covered, independence_verdict};

fn main() {
    println!(" n  f  min  wfc    alpha(rim)");
    for n in 4..=12 {
        let w = family(Family::Wheel(n)).unwrap().graph;
        let rim = family(Family::Cycle(n - 1)).unwrap().graph;
        let v = decide_well_f_covered(&w);
        println!(
            "{n:2} {:2} {:4}  {:<6} {}",
            v.forest_number,
            v.min_maximal_order,
            v.well_f_covered,
            independence_verdict(&rim).alpha
        );
    }
}
