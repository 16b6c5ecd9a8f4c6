//! Include/exclude search tree over vertices, shared by the forest and
//! independent-set engines. A [`Hereditary`] property decides incrementally
//! whether a vertex can join the current set; leaves are filtered by the full
//! maximality test against the whole graph.

use crate::graph::{full_mask, Graph, Members, RollbackUnionFind};

pub(crate) trait Hereditary {
    /// An excluded vertex needs at least this many neighbours in the final
    /// set before it can be blocked from joining it.
    const BLOCKING_NEIGHBOURS: u32;

    fn members(&self) -> u64;
    fn fits(&self, v: usize) -> bool;
    fn push(&mut self, v: usize);
    fn pop(&mut self);
}

/// Acyclic vertex sets, tracked with a rollback union-find.
pub(crate) struct ForestState<'g> {
    adj: &'g [u64],
    members: u64,
    uf: RollbackUnionFind,
    marks: Vec<(usize, usize)>,
}

impl<'g> ForestState<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        ForestState {
            adj: g.adjacency_rows(),
            members: 0,
            uf: RollbackUnionFind::new(g.order()),
            marks: Vec::new(),
        }
    }
}

impl Hereditary for ForestState<'_> {
    const BLOCKING_NEIGHBOURS: u32 = 2;

    fn members(&self) -> u64 {
        self.members
    }

    fn fits(&self, v: usize) -> bool {
        let nbrs = self.adj[v] & self.members;
        if nbrs.count_ones() < 2 {
            return true;
        }
        let mut roots = [0usize; 64];
        for (k, u) in Members(nbrs).enumerate() {
            let r = self.uf.find(u);
            if roots[..k].contains(&r) {
                return false;
            }
            roots[k] = r;
        }
        true
    }

    fn push(&mut self, v: usize) {
        self.marks.push((v, self.uf.checkpoint()));
        for u in Members(self.adj[v] & self.members) {
            self.uf.union(v, u);
        }
        self.members |= 1 << v;
    }

    fn pop(&mut self) {
        let (v, mark) = self.marks.pop().expect("pop without push");
        self.uf.rollback(mark);
        self.members &= !(1 << v);
    }
}

/// Independent vertex sets.
pub(crate) struct IndependentState<'g> {
    adj: &'g [u64],
    members: u64,
    stack: Vec<usize>,
}

impl<'g> IndependentState<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        IndependentState {
            adj: g.adjacency_rows(),
            members: 0,
            stack: Vec::new(),
        }
    }
}

impl Hereditary for IndependentState<'_> {
    const BLOCKING_NEIGHBOURS: u32 = 1;

    fn members(&self) -> u64 {
        self.members
    }

    fn fits(&self, v: usize) -> bool {
        self.adj[v] & self.members == 0
    }

    fn push(&mut self, v: usize) {
        self.stack.push(v);
        self.members |= 1 << v;
    }

    fn pop(&mut self) {
        let v = self.stack.pop().expect("pop without push");
        self.members &= !(1 << v);
    }
}

pub(crate) enum Visit {
    Continue,
    Stop,
    /// Only report sets strictly smaller than this from now on.
    SmallerThan(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Finish {
    Exhausted,
    Stopped,
    NodeLimit,
}

pub(crate) struct SearchTree<'g, P> {
    adj: &'g [u64],
    n: usize,
    prop: P,
    order: Vec<usize>,
    forced_out: u64,
    size_cap: usize,
    max_nodes: Option<u64>,
    pub(crate) nodes: u64,
}

impl<'g, P: Hereditary> SearchTree<'g, P> {
    pub(crate) fn new(g: &'g Graph, prop: P) -> Self {
        let mut order: Vec<usize> = (0..g.order()).collect();
        // high degree first, ties by id
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        SearchTree {
            adj: g.adjacency_rows(),
            n: g.order(),
            prop,
            order,
            forced_out: 0,
            size_cap: usize::MAX,
            max_nodes: None,
            nodes: 0,
        }
    }

    /// Vertices that may never be included. Maximality is still judged in the
    /// full graph, so they must end up blocked like any excluded vertex.
    pub(crate) fn forbid(mut self, mask: u64) -> Self {
        self.forced_out = mask;
        self
    }

    pub(crate) fn smaller_than(mut self, cap: usize) -> Self {
        self.size_cap = cap;
        self
    }

    pub(crate) fn node_limit(mut self, limit: Option<u64>) -> Self {
        self.max_nodes = limit;
        self
    }

    pub(crate) fn run<F: FnMut(u64) -> Visit>(&mut self, mut visit: F) -> Finish {
        let undecided = full_mask(self.n);
        match self.descend(0, 0, undecided, &mut visit) {
            Ok(()) => Finish::Exhausted,
            Err(f) => f,
        }
    }

    fn is_maximal(&self) -> bool {
        let outside = full_mask(self.n) & !self.prop.members();
        Members(outside).all(|v| !self.prop.fits(v))
    }

    fn descend<F: FnMut(u64) -> Visit>(
        &mut self,
        depth: usize,
        excluded: u64,
        undecided: u64,
        visit: &mut F,
    ) -> Result<(), Finish> {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(Finish::NodeLimit);
        }
        let members = self.prop.members();
        if members.count_ones() as usize >= self.size_cap {
            return Ok(());
        }
        if depth == self.order.len() {
            if self.is_maximal() {
                match visit(members) {
                    Visit::Continue => {}
                    Visit::Stop => return Err(Finish::Stopped),
                    Visit::SmallerThan(cap) => self.size_cap = cap,
                }
            }
            return Ok(());
        }
        let v = self.order[depth];
        let bit = 1u64 << v;
        let rest = undecided & !bit;

        if self.forced_out & bit == 0 && self.prop.fits(v) {
            self.prop.push(v);
            let r = self.descend(depth + 1, excluded, rest, visit);
            self.prop.pop();
            r?;
        }

        let excluded = excluded | bit;
        let reachable = self.prop.members() | rest;
        let touched = (self.adj[v] | bit) & excluded;
        let hopeless = Members(touched)
            .any(|w| (self.adj[w] & reachable).count_ones() < P::BLOCKING_NEIGHBOURS);
        if !hopeless {
            self.descend(depth + 1, excluded, rest, visit)?;
        }
        Ok(())
    }
}
