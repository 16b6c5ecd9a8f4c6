//! Exact minimum feedback vertex set by branch and bound.
//!
//! Each node strips vertices of degree at most one, branches on the deletable
//! vertices of a shortest remaining cycle (branch `i` deletes the `i`-th and
//! keeps the earlier ones), and is cut off when the greedy packing of
//! vertex-disjoint cycles proves it cannot beat the incumbent.

use crate::graph::{full_mask, Graph, Members};

pub(crate) struct FvsSolver<'g> {
    g: &'g Graph,
    best: u64,
    best_size: usize,
    pub(crate) nodes: u64,
}

impl<'g> FvsSolver<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        FvsSolver {
            g,
            best: 0,
            best_size: usize::MAX,
            nodes: 0,
        }
    }

    /// Minimum feedback vertex set of `G[alive]`.
    pub(crate) fn solve(mut self, alive: u64) -> u64 {
        let alive = self.strip(alive);
        if alive == 0 {
            return 0;
        }
        let greedy = self.greedy(alive);
        self.best = greedy;
        self.best_size = greedy.count_ones() as usize;
        self.branch(alive, 0, 0);
        self.best
    }

    fn degree_in(&self, v: usize, mask: u64) -> u32 {
        (self.g.adjacency_mask(v) & mask).count_ones()
    }

    /// Removes vertices of degree at most one until none remain.
    fn strip(&self, mut alive: u64) -> u64 {
        loop {
            let low = Members(alive).fold(0u64, |acc, v| {
                if self.degree_in(v, alive) <= 1 {
                    acc | 1 << v
                } else {
                    acc
                }
            });
            if low == 0 {
                return alive;
            }
            alive &= !low;
        }
    }

    fn greedy(&self, mut alive: u64) -> u64 {
        let mut chosen = 0u64;
        loop {
            alive = self.strip(alive);
            if alive == 0 {
                return chosen;
            }
            let v = Members(alive)
                .max_by_key(|&v| (self.degree_in(v, alive), std::cmp::Reverse(v)))
                .expect("nonempty");
            chosen |= 1 << v;
            alive &= !(1 << v);
        }
    }

    /// Number of vertex-disjoint cycles found by repeatedly taking a shortest one.
    fn packing_bound(&self, mut alive: u64) -> usize {
        let mut count = 0;
        loop {
            alive = self.strip(alive);
            match self.g.shortest_cycle_within(alive) {
                None => return count,
                Some(c) => {
                    count += 1;
                    for v in c {
                        alive &= !(1 << v);
                    }
                }
            }
        }
    }

    fn branch(&mut self, alive: u64, kept: u64, chosen: u64) {
        self.nodes += 1;
        let alive = self.strip(alive);
        let taken = chosen.count_ones() as usize;
        if alive == 0 {
            if taken < self.best_size {
                self.best = chosen;
                self.best_size = taken;
            }
            return;
        }
        if taken + self.packing_bound(alive) >= self.best_size {
            return;
        }
        let cycle = self
            .g
            .shortest_cycle_within(alive)
            .expect("stripped nonempty graph has a cycle");
        let mut candidates: Vec<usize> = cycle.into_iter().filter(|&v| kept >> v & 1 == 0).collect();
        if candidates.is_empty() {
            // every vertex of this cycle was already promised to stay
            return;
        }
        candidates.sort_by_key(|&v| (std::cmp::Reverse(self.degree_in(v, alive)), v));
        let mut keep = kept;
        for v in candidates {
            let bit = 1u64 << v;
            self.branch(alive & !bit, keep, chosen | bit);
            keep |= bit;
        }
    }
}

/// Minimum feedback vertex set of the whole graph, solved per component.
pub(crate) fn minimum_feedback_vertex_set(g: &Graph) -> u64 {
    g.components_within(full_mask(g.order()))
        .into_iter()
        .map(|comp| FvsSolver::new(g).solve(comp))
        .fold(0, |acc, s| acc | s)
}
