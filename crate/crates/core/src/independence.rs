//! Maximal independent sets, the independence number and well-coveredness.

use serde::Serialize;

use crate::forest::{EngineError, EnumerationBudget};
use crate::graph::{Graph, VertexSet};
use crate::search::{IndependentState, SearchTree, Visit};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceVerdict {
    pub alpha: usize,
    pub well_covered: bool,
    pub has_singleton_mis: bool,
    /// All maximal independent sets of size at least 2 share one size
    /// (vacuously true when there are none).
    pub size_ge2_uniform: bool,
    /// Two maximal independent sets of different sizes, when they exist.
    pub witness_sets: Vec<VertexSet>,
}

/// All maximal independent sets in lexicographic order.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    SearchTree::new(g, IndependentState::new(g)).run(|bits| {
        out.push(VertexSet::from_bits(bits, n));
        Visit::Continue
    });
    out.sort();
    out
}

/// Subset-scan reference for [`enumerate_maximal_independent_sets`].
pub fn brute_force_maximal_independent_sets(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<Vec<VertexSet>, EngineError> {
    let n = g.order();
    if n > budget.brute_force_limit || n >= 64 {
        return Err(EngineError::OverLimit {
            n,
            limit: budget.brute_force_limit,
        });
    }
    let adj = g.adjacency_rows();
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        let s = VertexSet::from_bits(bits, n);
        if !g.is_independent(&s) {
            continue;
        }
        let maximal = (0..n)
            .filter(|&v| !s.contains(v))
            .all(|v| adj[v] & bits != 0);
        if maximal {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Vertices adjacent to every other vertex; each forms a singleton maximal independent set.
pub fn dominating_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    let bits = (0..n)
        .filter(|&v| g.degree(v) + 1 == n)
        .fold(0u64, |acc, v| acc | 1 << v);
    VertexSet::from_bits(bits, n)
}

pub fn independence_number(g: &Graph) -> usize {
    enumerate_maximal_independent_sets(g)
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

pub fn independence_verdict(g: &Graph) -> IndependenceVerdict {
    let sets = enumerate_maximal_independent_sets(g);
    let alpha = sets.iter().map(VertexSet::len).max().unwrap_or(0);

    let smallest = sets.iter().min_by_key(|s| s.len());
    let largest = sets.iter().max_by_key(|s| s.len());
    let well_covered = smallest.map(VertexSet::len) == largest.map(VertexSet::len);

    let big = || sets.iter().filter(|s| s.len() >= 2);
    let size_ge2_uniform = big().map(VertexSet::len).min() == big().map(VertexSet::len).max();

    let witness_sets = match (smallest, largest) {
        (Some(a), Some(b)) if a.len() != b.len() => vec![*a, *b],
        _ => Vec::new(),
    };

    let has_singleton_mis = !dominating_vertices(g).is_empty();
    debug_assert_eq!(
        has_singleton_mis,
        sets.iter().any(|s| s.len() == 1),
        "degree test disagrees with enumeration"
    );

    IndependenceVerdict {
        alpha,
        well_covered,
        has_singleton_mis,
        size_ge2_uniform,
        witness_sets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let k4 = enumerate_maximal_independent_sets(&complete(4));
        assert_eq!(k4.len(), 4);
        assert!(k4.iter().all(|s| s.len() == 1));

        let p4: Vec<Vec<usize>> = enumerate_maximal_independent_sets(&path(4))
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(p4, vec![vec![0, 2], vec![0, 3], vec![1, 3]]);

        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let sets = enumerate_maximal_independent_sets(&c5);
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));

        let null = enumerate_maximal_independent_sets(&Graph::empty(0));
        assert_eq!(null, vec![VertexSet::empty(0)]);
    }

    #[test]
    fn verdict_examples() {
        let p3 = independence_verdict(&path(3));
        assert!(p3.has_singleton_mis);
        assert!(!p3.well_covered);
        assert_eq!(p3.witness_sets.len(), 2);

        assert!(!independence_verdict(&path(6)).well_covered);

        let fig2 = g(4, &[(0, 1), (1, 2), (0, 2)]);
        assert!(independence_verdict(&fig2).well_covered);
        let bridged = fig2.with_edge(crate::graph::Edge::new(2, 3).unwrap()).unwrap();
        assert!(!independence_verdict(&bridged).well_covered);

        for n in 1..=8 {
            let v = independence_verdict(&complete(n));
            assert!(v.well_covered);
            assert_eq!(v.alpha, 1);
            assert!(v.size_ge2_uniform);
        }
    }

    #[test]
    fn uniformity_ignores_singletons() {
        // P_3 has {1} and {0,2}: sets of size >= 2 are uniform, graph is not well-covered
        let v = independence_verdict(&path(3));
        assert!(v.size_ge2_uniform);
        // star K_{1,3} plus the edge between two leaves: {0}, {1,3}, {2,3}
        let s = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        let v = independence_verdict(&s);
        assert!(v.has_singleton_mis && v.size_ge2_uniform && !v.well_covered);
    }
}
