//! Reference oracles written independently of the library's search code.
#![allow(dead_code)]

use wfcover::Graph;

pub fn rows(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|u| (0..g.order()).filter(|&v| g.has_edge(u, v)).fold(0u64, |m, v| m | 1 << v))
        .collect()
}

/// `G[mask]` is a forest iff its edge count is its order minus its component count.
pub fn acyclic(rows: &[u64], mask: u64) -> bool {
    let mut seen = 0u64;
    let mut components = 0usize;
    let mut edges2 = 0usize;
    for v in 0..rows.len() {
        if mask >> v & 1 == 1 {
            edges2 += (rows[v] & mask).count_ones() as usize;
            if seen >> v & 1 == 0 {
                components += 1;
                let mut stack = vec![v];
                seen |= 1 << v;
                while let Some(u) = stack.pop() {
                    let mut next = rows[u] & mask & !seen;
                    while next != 0 {
                        let w = next.trailing_zeros() as usize;
                        next &= next - 1;
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
        }
    }
    edges2 / 2 + components == mask.count_ones() as usize
}

pub fn maximal_forests(g: &Graph) -> Vec<u64> {
    let r = rows(g);
    let n = g.order();
    assert!(n <= 20, "oracle limited to small graphs");
    (0..1u64 << n)
        .filter(|&s| acyclic(&r, s) && (0..n).all(|v| s >> v & 1 == 1 || !acyclic(&r, s | 1 << v)))
        .collect()
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    let r = rows(g);
    let n = g.order();
    assert!(n <= 20, "oracle limited to small graphs");
    (0..1u64 << n)
        .filter(|&s| {
            (0..n).all(|v| s >> v & 1 == 0 || r[v] & s == 0)
                && (0..n).all(|v| s >> v & 1 == 1 || r[v] & s != 0)
        })
        .collect()
}

/// (well-f-covered, forest number, smallest maximal forest order)
pub fn forest_summary(g: &Graph) -> (bool, usize, usize) {
    let sizes: Vec<usize> = maximal_forests(g).iter().map(|s| s.count_ones() as usize).collect();
    let lo = *sizes.iter().min().unwrap();
    let hi = *sizes.iter().max().unwrap();
    (lo == hi, hi, lo)
}

/// (well-covered, alpha)
pub fn independence_summary(g: &Graph) -> (bool, usize) {
    let sizes: Vec<usize> = maximal_independent_sets(g)
        .iter()
        .map(|s| s.count_ones() as usize)
        .collect();
    let lo = *sizes.iter().min().unwrap();
    let hi = *sizes.iter().max().unwrap();
    (lo == hi, hi)
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// All labeled graphs on exactly `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|m| {
            Graph::new(
                n,
                pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e),
            )
            .unwrap()
        })
        .collect()
}

/// Deterministic xorshift stream for test-side sampling.
pub struct Xs(pub u64);

impl Xs {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.next() % k as u64) as usize
    }

    /// Order in `lo..=hi`, edge percentage in `pct_lo..=pct_hi`.
    pub fn sized(&mut self, lo: usize, hi: usize, pct_lo: u64, pct_hi: u64) -> Graph {
        let n = lo + self.below(hi - lo + 1);
        let pct = pct_lo + self.below((pct_hi - pct_lo + 1) as usize) as u64;
        self.graph(n, pct)
    }

    pub fn graph(&mut self, n: usize, percent: u64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.next() % 100 < percent {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).unwrap()
    }
}
