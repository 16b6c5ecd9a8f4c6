//! Exact preprocessing: strip isolated vertices, pendant vertices and bridges.
//!
//! Each removed isolated or pendant vertex lies in every maximal induced
//! forest and contributes 1 to the forest number; a bridge lies on no cycle,
//! so deleting it changes neither the maximal forests nor the verdict.

use serde::Serialize;

use crate::forest::{decide_well_f_covered, ForestVerdict};
use crate::graph::{Edge, Graph, Members, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReductionStep {
    Isolated { vertex: usize },
    Pendant { vertex: usize, edge: Edge },
    Bridge { edge: Edge },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub core: Graph,
    /// Original id of each core vertex.
    pub core_vertices: Vec<usize>,
    pub f_offset: usize,
}

impl ReductionTrace {
    /// Original vertices removed as isolated or pendant.
    pub fn removed_vertices(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for step in &self.steps {
            match *step {
                ReductionStep::Isolated { vertex } | ReductionStep::Pendant { vertex, .. } => {
                    s.insert(vertex)
                }
                ReductionStep::Bridge { .. } => {}
            }
        }
        s
    }

    /// Core edges expressed in original ids.
    pub fn core_edges_original(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .core
            .edges()
            .map(|e| Edge::new(self.core_vertices[e.u], self.core_vertices[e.v]).expect("simple"))
            .collect();
        out.sort();
        out
    }
}

struct Working {
    rows: Vec<u64>,
    alive: u64,
}

impl Working {
    fn degree(&self, v: usize) -> u32 {
        (self.rows[v] & self.alive).count_ones()
    }

    fn candidates(&self) -> Vec<ReductionStep> {
        let mut out = Vec::new();
        for v in Members(self.alive) {
            match self.degree(v) {
                0 => out.push(ReductionStep::Isolated { vertex: v }),
                1 => {
                    let u = (self.rows[v] & self.alive).trailing_zeros() as usize;
                    out.push(ReductionStep::Pendant {
                        vertex: v,
                        edge: Edge::new(u, v).expect("simple"),
                    });
                }
                _ => {}
            }
        }
        out
    }

    fn graph(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| if self.alive >> v & 1 == 1 { r & self.alive } else { 0 })
            .collect();
        Graph::from_adjacency(rows).expect("working graph stays simple")
    }

    fn bridges(&self) -> Vec<Edge> {
        self.graph().bridges()
    }

    fn apply(&mut self, step: ReductionStep) {
        match step {
            ReductionStep::Isolated { vertex } | ReductionStep::Pendant { vertex, .. } => {
                self.alive &= !(1 << vertex);
            }
            ReductionStep::Bridge { edge } => {
                self.rows[edge.u] &= !(1 << edge.v);
                self.rows[edge.v] &= !(1 << edge.u);
            }
        }
    }

    fn still_legal(&self, step: &ReductionStep) -> bool {
        match *step {
            ReductionStep::Isolated { vertex } => self.alive >> vertex & 1 == 1 && self.degree(vertex) == 0,
            ReductionStep::Pendant { vertex, .. } => {
                self.alive >> vertex & 1 == 1 && self.degree(vertex) == 1
            }
            ReductionStep::Bridge { .. } => true,
        }
    }
}

fn finish(g: &Graph, w: Working, steps: Vec<ReductionStep>) -> ReductionTrace {
    let core_set = VertexSet::from_bits(w.alive, g.order());
    let stripped = w.graph();
    let (core, core_vertices) = stripped
        .induced_subgraph(&core_set)
        .expect("alive vertices in range");
    let f_offset = steps
        .iter()
        .filter(|s| !matches!(s, ReductionStep::Bridge { .. }))
        .count();
    ReductionTrace {
        steps,
        core,
        core_vertices,
        f_offset,
    }
}

fn working(g: &Graph) -> Working {
    Working {
        rows: g.adjacency_rows().to_vec(),
        alive: g.vertices().bits(),
    }
}

/// Applies the three rules to a fixed point. Each round removes isolated
/// vertices, then pendant vertices (smallest id first, degrees re-read at
/// removal time), then the smallest bridge, and rescans.
pub fn reduce(g: &Graph) -> ReductionTrace {
    let mut w = working(g);
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        for step in w.candidates() {
            if matches!(step, ReductionStep::Isolated { .. }) && w.still_legal(&step) {
                w.apply(step);
                steps.push(step);
                changed = true;
            }
        }
        for v in Members(w.alive) {
            if w.degree(v) == 1 {
                let u = (w.rows[v] & w.alive).trailing_zeros() as usize;
                let step = ReductionStep::Pendant {
                    vertex: v,
                    edge: Edge::new(u, v).expect("simple"),
                };
                w.apply(step);
                steps.push(step);
                changed = true;
            }
        }
        if let Some(&edge) = w.bridges().first() {
            let step = ReductionStep::Bridge { edge };
            w.apply(step);
            steps.push(step);
            changed = true;
        }
        if !changed {
            return finish(g, w, steps);
        }
    }
}

/// Same rules, but `choose` picks which legal removal to apply next from the
/// full candidate list (isolated and pendant vertices, then bridges).
pub fn reduce_in_order<F>(g: &Graph, mut choose: F) -> ReductionTrace
where
    F: FnMut(&[ReductionStep]) -> usize,
{
    let mut w = working(g);
    let mut steps = Vec::new();
    loop {
        let mut cands = w.candidates();
        cands.extend(w.bridges().into_iter().map(|edge| ReductionStep::Bridge { edge }));
        if cands.is_empty() {
            return finish(g, w, steps);
        }
        let step = cands[choose(&cands) % cands.len()];
        w.apply(step);
        steps.push(step);
    }
}

/// Reduce, decide on the core, and lift the witnesses back to `g`.
pub fn decide_well_f_covered_reduced(g: &Graph) -> ForestVerdict {
    let trace = reduce(g);
    let core = decide_well_f_covered(&trace.core);
    let removed = trace.removed_vertices(g.order());
    let lift = |s: &VertexSet| {
        s.iter()
            .fold(removed, |acc, v| acc.with(trace.core_vertices[v]))
    };
    ForestVerdict {
        well_f_covered: core.well_f_covered,
        forest_number: core.forest_number + trace.f_offset,
        min_maximal_order: core.min_maximal_order + trace.f_offset,
        witness_max: lift(&core.witness_max),
        witness_min: lift(&core.witness_min),
    }
}
