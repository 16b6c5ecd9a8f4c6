//! Build graphs with the structural operators and compare each predicted
//! forest number with the computed one.

use wfcover::constructions::{
    clique_edge_gadget, connect_by_path, disjoint_union, glue_forest_along_path, identify_vertex,
    matched_cliques, replace_edge_with_path, ConstructionResult,
};
use wfcover::{decide_well_f_covered, Edge, Graph};

fn show(label: &str, r: &ConstructionResult) {
    let v = decide_well_f_covered(&r.graph);
    println!(
        "{label:28} n={:<3} predicted f={:<6} computed f={:<3} well-f-covered={}",
        r.graph.order(),
        r.predicted_f.map_or("-".to_string(), |f| f.to_string()),
        v.forest_number,
        v.well_f_covered
    );
}

fn main() {
    let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();

    show("K3 + C5", &disjoint_union(&k3, &c5).unwrap());
    show("P3 end glued to K3", &identify_vertex(&p3, 0, &k3, 0).unwrap());
    show("K3 -(d=3)- C5", &connect_by_path(&k3, 0, &c5, 2, 3).unwrap());
    show("C5 edge -> path of length 4", &replace_edge_with_path(&c5, Edge::new(0, 1).unwrap(), 4).unwrap());

    let (tree, spine) = (Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap(), [0, 1]);
    show("C5 with a tree glued on", &glue_forest_along_path(&c5, &[0, 1], &tree, &spine).unwrap());

    for n in 2..=5 {
        show(&format!("clique edge gadget n={n}"), &clique_edge_gadget(n).unwrap());
    }
    show("3 x K4, matching of size 2", &matched_cliques(4, 3, &[(0, 4), (5, 8)]).unwrap());
}
