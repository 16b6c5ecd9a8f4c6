use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::{full_mask, Edge, Graph, Members, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// A shortest cycle as a closed vertex sequence (first vertex not repeated).
pub type ShortestCycle = Vec<usize>;

impl Graph {
    /// Connected components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(full_mask(self.n))
            .into_iter()
            .map(|m| VertexSet::from_bits(m, self.n))
            .collect()
    }

    pub(crate) fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = mask;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components_within(full_mask(self.n)).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Cut edges, found with a low-link depth-first search. Sorted.
    pub fn bridges(&self) -> Vec<Edge> {
        struct State<'a> {
            g: &'a Graph,
            timer: usize,
            tin: Vec<usize>,
            low: Vec<usize>,
            out: Vec<Edge>,
        }

        fn dfs(st: &mut State<'_>, v: usize, parent: Option<usize>) {
            st.timer += 1;
            st.tin[v] = st.timer;
            st.low[v] = st.timer;
            for w in Members(st.g.adj[v]) {
                if Some(w) == parent {
                    continue;
                }
                if st.tin[w] != 0 {
                    st.low[v] = st.low[v].min(st.tin[w]);
                } else {
                    dfs(st, w, Some(v));
                    st.low[v] = st.low[v].min(st.low[w]);
                    if st.low[w] > st.tin[v] {
                        st.out.push(Edge::new(v, w).expect("simple graph"));
                    }
                }
            }
        }

        let mut st = State {
            g: self,
            timer: 0,
            tin: vec![0; self.n],
            low: vec![0; self.n],
            out: Vec::new(),
        };
        for v in 0..self.n {
            if st.tin[v] == 0 {
                dfs(&mut st, v, None);
            }
        }
        st.out.sort();
        st.out
    }

    /// Breadth-first shortest-path length.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut seen = 1u64 << u;
        let mut layer = 1u64 << u;
        let mut d = 0;
        while layer != 0 {
            if layer >> v & 1 == 1 {
                return Ok(Distance::Finite(d));
            }
            let next = Members(layer).fold(0u64, |acc, x| acc | self.adj[x]) & !seen;
            seen |= next;
            layer = next;
            d += 1;
        }
        Ok(Distance::Unreachable)
    }

    /// `|E| - |V| + #components`; equals 1 exactly when the graph has one cycle.
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.component_count() - self.n
    }

    /// A shortest cycle of `G[mask]`, if any.
    pub(crate) fn shortest_cycle_within(&self, mask: u64) -> Option<ShortestCycle> {
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in Members(mask) {
            for v in Members(mask) {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = &best {
                    // Any cycle closed from this layer on is at least 2*dist[u]+1 long.
                    if 2 * dist[u] + 1 >= b.len() {
                        break;
                    }
                }
                for w in Members(self.adj[u] & mask) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            if let Some(c) = close_cycle(&parent, root, u, w) {
                                best = Some(c);
                            }
                        }
                    }
                }
            }
            if best.as_ref().is_some_and(|b| b.len() == 3) {
                break;
            }
        }
        best
    }

    pub fn shortest_cycle(&self) -> Option<ShortestCycle> {
        self.shortest_cycle_within(full_mask(self.n))
    }
}

fn close_cycle(parent: &[usize], root: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while x != root {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let mut a = path_to_root(u);
    let b = path_to_root(w);
    // a: u..root, b: w..root; cycle = u..root..w
    a.pop();
    let mut cycle = a;
    cycle.extend(b.into_iter().rev());
    let mut seen = 0u64;
    for &v in &cycle {
        if seen >> v & 1 == 1 {
            return None;
        }
        seen |= 1 << v;
    }
    Some(cycle)
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

    fn bowtie() -> Graph {
        g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    }

    #[test]
    fn components() {
        let k3 = cycle(3);
        assert_eq!(k3.connected_components().len(), 1);
        let e3 = Graph::empty(3);
        assert_eq!(e3.connected_components().len(), 3);
        let two = g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);
        // triangle x,y,z plus isolated t
        let fig2 = g(4, &[(0, 1), (1, 2), (0, 2)]);
        let comps = fig2.connected_components();
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3]);
        assert_eq!(Graph::empty(0).connected_components().len(), 0);
    }

    #[test]
    fn bridge_examples() {
        let tree = g(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(tree.bridges().len(), 4);
        assert!(cycle(6).bridges().is_empty());
        let joined = g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]);
        assert_eq!(joined.bridges(), vec![Edge { u: 2, v: 3 }]);
    }

    #[test]
    fn distances() {
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(p5.distance(2, 2).unwrap(), Distance::Finite(0));
        assert_eq!(p5.distance(1, 2).unwrap(), Distance::Finite(1));
        assert_eq!(p5.distance(0, 4).unwrap(), Distance::Finite(4));
        let fig2 = g(4, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(fig2.distance(0, 3).unwrap(), Distance::Unreachable);
        assert!(p5.distance(0, 5).is_err());
    }

    #[test]
    fn cyclomatic() {
        assert_eq!(g(4, &[(0, 1), (2, 3)]).cyclomatic_number(), 0);
        assert_eq!(cycle(7).cyclomatic_number(), 1);
        assert_eq!(bowtie().cyclomatic_number(), 2);
        assert_eq!(Graph::empty(0).cyclomatic_number(), 0);
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(cycle(7).shortest_cycle().unwrap().len(), 7);
        assert_eq!(bowtie().shortest_cycle().unwrap().len(), 3);
        assert!(g(4, &[(0, 1), (1, 2), (2, 3)]).shortest_cycle().is_none());
        // C6 with a chord {0,3}: girth 4
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.push((0, 3));
        let c = g(6, &e).shortest_cycle().unwrap();
        assert_eq!(c.len(), 4);
        for i in 0..c.len() {
            assert!(g(6, &e).has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }
}
