//! Scan every labeled graph on up to six vertices with a custom predicate:
//! here, that the forest number never drops below the independence number.

use wfcover::harness::{exhaustive_scan, Outcome};
use wfcover::{forest_number, independence_verdict};

fn main() {
    let result = exhaustive_scan(6, |g| {
        let f = forest_number(g);
        let alpha = independence_verdict(g).alpha;
        if f >= alpha {
            Outcome::Holds
        } else {
            Outcome::Fails {
                expected: format!("f >= {alpha}"),
                observed: format!("f = {f}"),
            }
        }
    })
    .unwrap();
    println!(
        "{} graphs checked, verdict {}, {} counterexamples",
        result.instances_checked,
        result.verdict,
        result.counterexamples.len()
    );
}
