//! Canonical text form: a header `n <count>`, then one `e <u> <v>` line per
//! edge in lexicographic order.

use std::fmt::Write;

use super::Graph;

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = self.name() {
            let _ = writeln!(out, "# {name}");
        }
        let _ = writeln!(out, "n {}", self.order());
        for e in self.edges() {
            let _ = writeln!(out, "e {} {}", e.u, e.v);
        }
        out
    }
}
