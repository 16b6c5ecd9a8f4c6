//! Maximal induced forests: enumeration, the forest number, and the
//! well-f-covered decision.
//!
//! A vertex set `S` is a maximal induced forest when `G[S]` is acyclic and no
//! `S ∪ {v}` is. A graph is well-f-covered when all of them have one order,
//! which is then the forest number `f(G)`.

mod fvs;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{full_mask, Graph, GraphError, VertexSet};
use crate::search::{Finish, ForestState, SearchTree, Visit};

pub(crate) use fvs::minimum_feedback_vertex_set;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph of order {n} exceeds the brute-force limit of {limit}")]
    OverLimit { n: usize, limit: usize },
    #[error("budget caps must be positive")]
    InvalidBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Caps for exponential enumeration. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_results: Option<usize>,
    pub max_nodes: Option<u64>,
    pub brute_force_limit: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_results: None,
            max_nodes: None,
            brute_force_limit: 20,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_results(mut self, cap: usize) -> Self {
        self.max_results = Some(cap);
        self
    }

    pub fn with_max_nodes(mut self, cap: u64) -> Self {
        self.max_nodes = Some(cap);
        self
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.max_results == Some(0) || self.max_nodes == Some(0) || self.brute_force_limit == 0
        {
            return Err(EngineError::InvalidBudget);
        }
        Ok(())
    }
}

/// Sets produced by a (possibly truncated) enumeration, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestVerdict {
    pub well_f_covered: bool,
    pub forest_number: usize,
    pub min_maximal_order: usize,
    pub witness_max: VertexSet,
    pub witness_min: VertexSet,
}

/// Reference oracle: scans all `2^n` subsets and applies the maximality test
/// literally.
pub fn brute_force_maximal_forests(
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
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        if !g.is_acyclic_mask(bits) {
            continue;
        }
        let maximal = (0..n)
            .filter(|v| bits >> v & 1 == 0)
            .all(|v| !g.is_acyclic_mask(bits | 1 << v));
        if maximal {
            out.push(VertexSet::from_bits(bits, n));
        }
    }
    out.sort();
    Ok(out)
}

pub fn enumerate_maximal_forests(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<Enumeration, EngineError> {
    budget.validate()?;
    let n = g.order();
    let mut sets = Vec::new();
    let mut truncated = false;
    let mut tree = SearchTree::new(g, ForestState::new(g)).node_limit(budget.max_nodes);
    let finish = tree.run(|bits| {
        sets.push(VertexSet::from_bits(bits, n));
        if budget.max_results.is_some_and(|m| sets.len() > m) {
            sets.pop();
            truncated = true;
            Visit::Stop
        } else {
            Visit::Continue
        }
    });
    truncated |= finish == Finish::NodeLimit;
    sets.sort();
    Ok(Enumeration {
        sets,
        truncated,
        nodes_explored: tree.nodes,
    })
}

/// A maximum induced forest: the complement of a minimum feedback vertex set.
pub fn maximum_forest(g: &Graph) -> VertexSet {
    let fvs = minimum_feedback_vertex_set(g);
    VertexSet::from_bits(!fvs & full_mask(g.order()), g.order())
}

pub fn forest_number(g: &Graph) -> usize {
    maximum_forest(g).len()
}

/// Smallest maximal induced forest among those strictly smaller than `below`.
fn smallest_maximal_below(g: &Graph, below: usize, forbid: u64) -> Option<VertexSet> {
    let n = g.order();
    let mut best = None;
    SearchTree::new(g, ForestState::new(g))
        .forbid(forbid)
        .smaller_than(below)
        .run(|bits| {
            let s = VertexSet::from_bits(bits, n);
            let len = s.len();
            best = Some(s);
            Visit::SmallerThan(len)
        });
    best
}

/// A maximal induced forest of minimum order.
pub fn min_maximal_forest(g: &Graph) -> VertexSet {
    let max = maximum_forest(g);
    smallest_maximal_below(g, max.len(), 0).unwrap_or(max)
}

pub fn min_maximal_forest_order(g: &Graph) -> usize {
    min_maximal_forest(g).len()
}

pub fn decide_well_f_covered(g: &Graph) -> ForestVerdict {
    let witness_max = maximum_forest(g);
    let witness_min = smallest_maximal_below(g, witness_max.len(), 0).unwrap_or(witness_max);
    ForestVerdict {
        well_f_covered: witness_min.len() == witness_max.len(),
        forest_number: witness_max.len(),
        min_maximal_order: witness_min.len(),
        witness_max,
        witness_min,
    }
}

/// Verdict only; stops at the first maximal forest smaller than `f(G)`.
pub fn is_well_f_covered(g: &Graph) -> bool {
    let f = forest_number(g);
    let mut found = false;
    SearchTree::new(g, ForestState::new(g))
        .smaller_than(f)
        .run(|_| {
            found = true;
            Visit::Stop
        });
    !found
}

/// True iff no maximal induced forest of `g` omits `v`.
pub fn every_maximal_forest_contains(g: &Graph, v: usize) -> Result<bool, GraphError> {
    g.check_vertex(v)?;
    let mut avoided = false;
    SearchTree::new(g, ForestState::new(g))
        .forbid(1 << v)
        .run(|_| {
            avoided = true;
            Visit::Stop
        });
    Ok(!avoided)
}

/// Both sides of a biconditional, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Biconditional {
    pub applicable: bool,
    pub left: bool,
    pub right: bool,
}

impl Biconditional {
    fn new(applicable: bool, left: bool, right: bool) -> Self {
        Biconditional {
            applicable,
            left,
            right,
        }
    }

    pub fn agrees(&self) -> bool {
        !self.applicable || self.left == self.right
    }
}

/// Characterizations of graphs whose forest number sits at the ends of its range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryReport {
    /// `f = 1` vs. the graph is `K_1`.
    pub trivial: Biconditional,
    /// Connected graphs: `f = 2` vs. complete of order at least 2.
    pub complete: Biconditional,
    /// Disconnected graphs: `f = 2` vs. edgeless of order 2.
    pub empty_pair: Biconditional,
    /// `f = n` vs. the graph is a forest.
    pub forest: Biconditional,
    /// Well-f-covered with `f = n - 1` vs. exactly one cycle.
    pub unicyclic: Biconditional,
}

impl BoundaryReport {
    pub fn all_agree(&self) -> bool {
        [
            self.trivial,
            self.complete,
            self.empty_pair,
            self.forest,
            self.unicyclic,
        ]
        .iter()
        .all(Biconditional::agrees)
    }
}

pub fn check_boundary_characterizations(g: &Graph) -> BoundaryReport {
    let n = g.order();
    let verdict = decide_well_f_covered(g);
    let f = verdict.forest_number;
    let components = g.component_count();
    BoundaryReport {
        trivial: Biconditional::new(true, f == 1, n == 1),
        complete: Biconditional::new(components == 1, f == 2, n >= 2 && g.is_complete()),
        empty_pair: Biconditional::new(components >= 2, f == 2, n == 2 && g.is_edgeless()),
        forest: Biconditional::new(true, f == n, g.is_forest()),
        unicyclic: Biconditional::new(
            true,
            verdict.well_f_covered && f + 1 == n,
            g.cyclomatic_number() == 1,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn bowtie() -> Graph {
        // x=0 y=1 z=2 t=3 p=4
        g(5, &[(0, 2), (0, 1), (1, 2), (2, 3), (3, 4), (2, 4)])
    }

    fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
        v.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn brute_force_small_cases() {
        let b = EnumerationBudget::default();
        let c4 = brute_force_maximal_forests(&cycle(4), &b).unwrap();
        assert_eq!(
            sets(&c4),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        let k3 = brute_force_maximal_forests(&complete(3), &b).unwrap();
        assert_eq!(sets(&k3), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let bt = brute_force_maximal_forests(&bowtie(), &b).unwrap();
        let x_y_t_p = VertexSet::from_members(5, [0, 1, 3, 4]).unwrap();
        let x_z_p = VertexSet::from_members(5, [0, 2, 4]).unwrap();
        assert!(bt.contains(&x_y_t_p));
        assert!(bt.contains(&x_z_p));
    }

    #[test]
    fn brute_force_respects_limit() {
        let b = EnumerationBudget {
            brute_force_limit: 4,
            ..Default::default()
        };
        assert!(matches!(
            brute_force_maximal_forests(&cycle(5), &b),
            Err(EngineError::OverLimit { n: 5, limit: 4 })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let b = EnumerationBudget::default();
        let p5 = enumerate_maximal_forests(&path(5), &b).unwrap();
        assert_eq!(sets(&p5.sets), vec![vec![0, 1, 2, 3, 4]]);
        let c6 = enumerate_maximal_forests(&cycle(6), &b).unwrap();
        assert_eq!(c6.sets.len(), 6);
        assert!(c6.sets.iter().all(|s| s.len() == 5));
        assert!(!c6.truncated);
    }

    #[test]
    fn enumeration_truncates() {
        let b = EnumerationBudget::default().with_max_results(2);
        let e = enumerate_maximal_forests(&cycle(6), &b).unwrap();
        assert_eq!(e.sets.len(), 2);
        assert!(e.truncated);
        let exact = EnumerationBudget::default().with_max_results(6);
        assert!(!enumerate_maximal_forests(&cycle(6), &exact).unwrap().truncated);
        let nodes = EnumerationBudget::default().with_max_nodes(3);
        assert!(enumerate_maximal_forests(&cycle(6), &nodes).unwrap().truncated);
        let bad = EnumerationBudget::default().with_max_results(0);
        assert_eq!(
            enumerate_maximal_forests(&cycle(3), &bad),
            Err(EngineError::InvalidBudget)
        );
    }

    #[test]
    fn forest_numbers() {
        assert_eq!(forest_number(&complete(5)), 2);
        assert_eq!(forest_number(&path(7)), 7);
        assert_eq!(forest_number(&complete(1)), 1);
        assert_eq!(forest_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn min_orders() {
        assert_eq!(min_maximal_forest_order(&cycle(9)), 8);
        assert_eq!(min_maximal_forest_order(&bowtie()), 3);
        // K_{2,3}: parts {0,1} and {2,3,4}
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(min_maximal_forest_order(&k23), 3);
    }

    #[test]
    fn verdicts() {
        // G4: a=0 b=1 c=2 d=3 e=4
        let g4 = g(5, &[(0, 1), (0, 3), (3, 2), (2, 1), (4, 0), (4, 1)]);
        let v = decide_well_f_covered(&g4);
        assert!(!v.well_f_covered);
        assert_eq!((v.min_maximal_order, v.forest_number), (3, 4));
        assert!(!is_well_f_covered(&g4));

        let v = decide_well_f_covered(&cycle(6));
        assert!(v.well_f_covered);
        assert_eq!(v.forest_number, 5);
        assert_eq!(v.witness_min, v.witness_max);

        // W_5: C_4 on 0..4 plus hub 4
        let w5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]);
        let v = decide_well_f_covered(&w5);
        assert!(v.well_f_covered);
        assert_eq!(v.forest_number, 3);

        let null = decide_well_f_covered(&Graph::empty(0));
        assert!(null.well_f_covered);
        assert_eq!(null.forest_number, 0);
    }

    #[test]
    fn containment() {
        let tree = g(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert!((0..5).all(|v| every_maximal_forest_contains(&tree, v).unwrap()));
        let c5 = cycle(5);
        assert!((0..5).all(|v| !every_maximal_forest_contains(&c5, v).unwrap()));
        // triangle 0,1,2 with pendant path 2-3-4; endpoint 4
        let t = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        assert!(every_maximal_forest_contains(&t, 4).unwrap());
        assert!(every_maximal_forest_contains(&t, 3).unwrap());
        assert!(!every_maximal_forest_contains(&t, 2).unwrap());
        assert!(every_maximal_forest_contains(&t, 9).is_err());
    }

    #[test]
    fn boundary_examples() {
        let r = check_boundary_characterizations(&complete(6));
        assert!(r.complete.left && r.complete.right);
        assert!(r.all_agree());

        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.push((0, 5));
        let r = check_boundary_characterizations(&g(6, &e));
        assert!(r.unicyclic.left && r.unicyclic.right);
        assert!(r.all_agree());

        let r = check_boundary_characterizations(&bowtie());
        assert!(!r.unicyclic.left && !r.unicyclic.right);
        assert!(r.all_agree());

        let r = check_boundary_characterizations(&Graph::empty(2));
        assert!(r.empty_pair.applicable && r.empty_pair.left && r.empty_pair.right);
    }
}
