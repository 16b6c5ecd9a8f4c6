//! List maximal induced forests and maximal independent sets, with and
//! without a result cap.

use wfcover::{enumerate_maximal_forests, enumerate_maximal_independent_sets, EnumerationBudget, Graph};

fn main() {
    let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let forests = enumerate_maximal_forests(&c4, &EnumerationBudget::default()).unwrap();
    println!("maximal forests of C4:");
    for s in &forests.sets {
        println!("  {s}");
    }

    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    println!("maximal independent sets of P4:");
    for s in enumerate_maximal_independent_sets(&p4) {
        println!("  {s}");
    }

    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let petersen = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
    let capped = enumerate_maximal_forests(&petersen, &EnumerationBudget::default().with_max_results(10)).unwrap();
    println!(
        "Petersen graph: {} forests shown, truncated={}, {} search nodes",
        capped.sets.len(),
        capped.truncated,
        capped.nodes_explored
    );
}
