//! Deterministic instance generators: labeled-graph enumeration and seeded
//! random graphs.
//!
//! Random draws use ChaCha8 seeded with `seed_from_u64`. An edge `{u,v}` is
//! visited in lexicographic order and kept when the next 53-bit uniform
//! `(next_u64() >> 11) * 2^-53` is below `p`. The stream is fixed by the
//! algorithm, so a spec yields the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

pub(crate) fn unit(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Graph on `spec.n` vertices, each edge present independently with
/// probability `spec.p` (clamped to `[0, 1]`).
pub fn random_graph(spec: RandomGraphSpec) -> Graph {
    assert!(spec.n <= MAX_ORDER, "order {} exceeds {MAX_ORDER}", spec.n);
    let p = spec.p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if unit(&mut rng) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(spec.n, edges).expect("generated edges are in range")
}

/// Every labeled graph on `n` vertices, in order of the edge bitmask over
/// lexicographically ordered pairs.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> LabeledGraphs {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        assert!(pairs.len() < 64, "too many labeled graphs on {n} vertices");
        LabeledGraphs {
            n,
            end: 1u64 << pairs.len(),
            pairs,
            next: 0,
        }
    }

    pub fn total(n: usize) -> u64 {
        1u64 << (n * n.saturating_sub(1) / 2)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("pairs are in range"))
    }
}

/// All labeled graphs on `0..=n_max` vertices, smallest order first.
pub fn labeled_graphs_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (0..=n_max).flat_map(LabeledGraphs::new)
}

/// Seeded source for one check's random instances.
pub(crate) struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub(crate) fn new(seed: u64, id: &str) -> Sampler {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in id.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ h),
        }
    }

    pub(crate) fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub(crate) fn chance(&mut self, p: f64) -> bool {
        unit(&mut self.rng) < p
    }

    pub(crate) fn spec(&mut self, n: usize) -> RandomGraphSpec {
        let p = 0.15 + 0.7 * unit(&mut self.rng);
        RandomGraphSpec {
            n,
            p,
            seed: self.rng.next_u64(),
        }
    }

    pub(crate) fn graph(&mut self, lo: usize, hi: usize) -> Graph {
        let n = self.range(lo, hi);
        random_graph(self.spec(n))
    }

    pub(crate) fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.rng);
        p
    }

    pub(crate) fn relabel(&mut self, g: &Graph) -> Graph {
        let perm = self.permutation(g.order());
        g.permuted(&perm).expect("permutation of the vertex set")
    }

    pub(crate) fn pick<'a, T>(&mut self, items: &'a [T]) -> Option<&'a T> {
        items.choose(&mut self.rng)
    }

    /// A simple path on `k` vertices found by random walks, if one turns up.
    pub(crate) fn path(&mut self, g: &Graph, k: usize) -> Option<Vec<usize>> {
        if g.order() == 0 || k == 0 {
            return None;
        }
        for _ in 0..64 {
            let mut path = vec![self.range(0, g.order() - 1)];
            let mut seen = 1u64 << path[0];
            while path.len() < k {
                let last = *path.last().unwrap();
                let options: Vec<usize> = g.neighbors(last).filter(|&v| seen >> v & 1 == 0).collect();
                match self.pick(&options) {
                    Some(&v) => {
                        seen |= 1 << v;
                        path.push(v);
                    }
                    None => break,
                }
            }
            if path.len() == k {
                return Some(path);
            }
        }
        None
    }

    /// A random forest on `k + extra` vertices containing a path on `k`
    /// vertices, returned with that path.
    pub(crate) fn forest_with_path(&mut self, k: usize, extra: usize) -> (Graph, Vec<usize>) {
        let n = k + extra;
        let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        for v in k..n {
            if self.chance(0.75) {
                edges.push((self.range(0, v - 1), v));
            }
        }
        let spine = Graph::new(n, edges).expect("tree edges are in range");
        let perm = self.permutation(n);
        let g = spine.permuted(&perm).expect("permutation of the vertex set");
        (g, (0..k).map(|i| perm[i]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let e = random_graph(RandomGraphSpec { n: 6, p: 0.0, seed: 3 });
        assert!(e.is_edgeless());
        let k = random_graph(RandomGraphSpec { n: 6, p: 1.0, seed: 3 });
        assert!(k.is_complete());
    }

    #[test]
    fn reproducible() {
        let spec = RandomGraphSpec { n: 8, p: 0.4, seed: 42 };
        let a = random_graph(spec);
        assert_eq!(a, random_graph(spec));
        assert_ne!(a, random_graph(RandomGraphSpec { seed: 43, ..spec }));
    }

    #[test]
    fn labeled_counts() {
        for n in 0..=5 {
            assert_eq!(LabeledGraphs::new(n).count() as u64, LabeledGraphs::total(n));
        }
        let total: usize = labeled_graphs_up_to(3).count();
        assert_eq!(total, 1 + 1 + 2 + 8);
    }

    #[test]
    fn forests_with_paths() {
        let mut s = Sampler::new(1, "t");
        for _ in 0..50 {
            let (h, p) = s.forest_with_path(3, 3);
            assert!(h.is_forest());
            assert!(p.windows(2).all(|w| h.has_edge(w[0], w[1])));
        }
    }
}
