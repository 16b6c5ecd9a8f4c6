//! Read and write the canonical text format.

use wfcover::cli::parse_graph;
use wfcover::constructions::{family, Family};

fn main() {
    let text = "# a triangle with a tail\nn 4\ne 0 1\ne 1 2\ne 0 2\n\ne 2 3\n";
    let doc = parse_graph(text).unwrap();
    println!("parsed n={} edges={:?}", doc.n, doc.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>());

    let k23 = family(Family::CompleteBipartite(2, 3)).unwrap().graph;
    print!("{}", k23.to_text());

    match parse_graph("n 2\ne 0 5") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
