//! Graph operators and families used to grow well-f-covered graphs.
//!
//! Every constructor returns a [`ConstructionResult`] carrying the new graph,
//! the forest number the corresponding structural rule predicts (when one
//! applies), and maps from input vertex ids to output ids. Predictions are
//! data to be checked, never trusted.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::forest::{every_maximal_forest_contains, forest_number};
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

type Result<T> = std::result::Result<T, ConstructionError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub predicted_f: Option<usize>,
    pub prediction_source: Option<&'static str>,
    /// `relabeling[k][v]` is the output id of vertex `v` of the `k`-th input,
    /// or `None` if the vertex was removed.
    pub relabeling: Vec<Vec<Option<usize>>>,
}

impl ConstructionResult {
    fn new(graph: Graph, relabeling: Vec<Vec<Option<usize>>>) -> Self {
        ConstructionResult {
            graph,
            predicted_f: None,
            prediction_source: None,
            relabeling,
        }
    }

    pub fn predicting(mut self, f: usize, source: &'static str) -> Self {
        self.predicted_f = Some(f);
        self.prediction_source = Some(source);
        self
    }

    pub fn map(&self, input: usize, v: usize) -> Option<usize> {
        self.relabeling.get(input)?.get(v).copied().flatten()
    }
}

fn identity(n: usize) -> Vec<Option<usize>> {
    (0..n).map(Some).collect()
}

fn shifted(n: usize, by: usize) -> Vec<Option<usize>> {
    (0..n).map(|v| Some(v + by)).collect()
}

fn edges_of(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().map(|e| (e.u, e.v))
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<ConstructionResult> {
    let shift = g.order();
    let graph = Graph::new(
        g.order() + h.order(),
        edges_of(g).chain(edges_of(h).map(|(u, v)| (u + shift, v + shift))),
    )?;
    Ok(
        ConstructionResult::new(graph, vec![identity(g.order()), shifted(h.order(), shift)])
            .predicting(forest_number(g) + forest_number(h), "disjoint union: f(G)+f(H)"),
    )
}

/// Disjoint union plus every edge between the two vertex sets. No prediction
/// is attached; which join rule applies depends on the factors.
pub fn join(g: &Graph, h: &Graph) -> Result<ConstructionResult> {
    let shift = g.order();
    let cross = (0..g.order()).flat_map(|u| (0..h.order()).map(move |v| (u, v + shift)));
    let graph = Graph::new(
        g.order() + h.order(),
        edges_of(g)
            .chain(edges_of(h).map(|(u, v)| (u + shift, v + shift)))
            .chain(cross),
    )?;
    Ok(ConstructionResult::new(
        graph,
        vec![identity(g.order()), shifted(h.order(), shift)],
    ))
}

/// Merges `x` of `g` with `y` of `h`. The merged vertex keeps id `x`; the
/// other vertices of `h` follow those of `g` in order.
pub fn identify_vertex(g: &Graph, x: usize, h: &Graph, y: usize) -> Result<ConstructionResult> {
    g.check_vertex(x)?;
    h.check_vertex(y)?;
    let mut hmap = vec![None; h.order()];
    let mut next = g.order();
    for (v, slot) in hmap.iter_mut().enumerate() {
        *slot = Some(if v == y {
            x
        } else {
            next += 1;
            next - 1
        });
    }
    let graph = Graph::new(
        next,
        edges_of(g).chain(edges_of(h).map(|(u, v)| (hmap[u].unwrap(), hmap[v].unwrap()))),
    )?;
    let result = ConstructionResult::new(graph, vec![identity(g.order()), hmap]);
    let f = || forest_number(g) + forest_number(h) - 1;
    if every_maximal_forest_contains(g, x)? {
        Ok(result.predicting(f(), "identification: x lies in every maximal forest of G"))
    } else if every_maximal_forest_contains(h, y)? {
        Ok(result.predicting(f(), "identification: y lies in every maximal forest of H"))
    } else {
        Ok(result)
    }
}

/// Joins `x` of `g` to `y` of `h` by a path of length `d` through `d - 1`
/// new vertices, numbered after those of `g` and `h`.
pub fn connect_by_path(
    g: &Graph,
    x: usize,
    h: &Graph,
    y: usize,
    d: usize,
) -> Result<ConstructionResult> {
    if d < 1 {
        return Err(ConstructionError::InvalidParameter(
            "path length must be at least 1".into(),
        ));
    }
    g.check_vertex(x)?;
    h.check_vertex(y)?;
    let shift = g.order();
    let first_new = g.order() + h.order();
    let mut chain = vec![x];
    chain.extend(first_new..first_new + d - 1);
    chain.push(y + shift);
    let graph = Graph::new(
        first_new + d - 1,
        edges_of(g)
            .chain(edges_of(h).map(|(u, v)| (u + shift, v + shift)))
            .chain(chain.windows(2).map(|w| (w[0], w[1]))),
    )?;
    Ok(
        ConstructionResult::new(graph, vec![identity(g.order()), shifted(h.order(), shift)])
            .predicting(
                forest_number(g) + forest_number(h) + d - 1,
                "path attachment: f(G)+f(H)+d-1",
            ),
    )
}

/// Subdivides edge `e` into a path of length `d`. One endpoint of `e` must
/// have degree exactly 2.
pub fn replace_edge_with_path(g: &Graph, e: Edge, d: usize) -> Result<ConstructionResult> {
    if d < 2 {
        return Err(ConstructionError::InvalidParameter(
            "replacement path length must be at least 2".into(),
        ));
    }
    g.check_vertex(e.u)?;
    g.check_vertex(e.v)?;
    if !g.has_edge(e.u, e.v) {
        return Err(ConstructionError::Precondition(format!("{e} is not an edge")));
    }
    if g.degree(e.u) != 2 && g.degree(e.v) != 2 {
        return Err(ConstructionError::Precondition(format!(
            "neither endpoint of {e} has degree 2"
        )));
    }
    let n = g.order();
    let mut chain = vec![e.u];
    chain.extend(n..n + d - 1);
    chain.push(e.v);
    let graph = Graph::new(
        n + d - 1,
        g.edges()
            .filter(|&f| f != e)
            .map(|f| (f.u, f.v))
            .chain(chain.windows(2).map(|w| (w[0], w[1]))),
    )?;
    Ok(ConstructionResult::new(graph, vec![identity(n)])
        .predicting(forest_number(g) + d - 1, "edge subdivision: f(G)+d-1"))
}

fn check_path(g: &Graph, p: &[usize], which: &str) -> Result<()> {
    let mut seen = 0u64;
    for &v in p {
        g.check_vertex(v)?;
        if seen >> v & 1 == 1 {
            return Err(ConstructionError::Precondition(format!(
                "{which} path repeats vertex {v}"
            )));
        }
        seen |= 1 << v;
    }
    if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(ConstructionError::Precondition(format!(
            "{which} path has no edge {{{},{}}}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Glues the forest `h` onto `g` by identifying `path_h[i]` with `path_g[i]`.
///
/// The prediction is `f(G) + |V(H)| - n`, where `n` is the number of glued
/// vertices: every maximal forest of the result contains all of `H`.
pub fn glue_forest_along_path(
    g: &Graph,
    path_g: &[usize],
    h: &Graph,
    path_h: &[usize],
) -> Result<ConstructionResult> {
    if !h.is_forest() {
        return Err(ConstructionError::Precondition("H is not a forest".into()));
    }
    if path_g.len() != path_h.len() {
        return Err(ConstructionError::Precondition(format!(
            "paths have {} and {} vertices",
            path_g.len(),
            path_h.len()
        )));
    }
    if path_g.len() < 2 {
        return Err(ConstructionError::Precondition(
            "paths need at least two vertices".into(),
        ));
    }
    check_path(g, path_g, "G")?;
    check_path(h, path_h, "H")?;

    let mut hmap = vec![None; h.order()];
    for (&w, &v) in path_h.iter().zip(path_g) {
        hmap[w] = Some(v);
    }
    let mut next = g.order();
    for slot in hmap.iter_mut().filter(|s| s.is_none()) {
        *slot = Some(next);
        next += 1;
    }
    let graph = Graph::new(
        next,
        edges_of(g).chain(edges_of(h).map(|(u, v)| (hmap[u].unwrap(), hmap[v].unwrap()))),
    )?;
    let f = forest_number(g) + h.order() - path_g.len();
    Ok(ConstructionResult::new(graph, vec![identity(g.order()), hmap])
        .predicting(f, "forest gluing: f(G)+|V(H)|-n"))
}

fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `K_n` plus, for each of its edges, a new vertex adjacent to both endpoints.
/// Clique vertices are `0..n`; ear vertices follow in lexicographic edge order.
pub fn clique_edge_gadget(n: usize) -> Result<ConstructionResult> {
    if n < 2 {
        return Err(ConstructionError::InvalidParameter(
            "clique order must be at least 2".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let ears = pairs
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    let graph = Graph::new(n + pairs.len(), pairs.iter().copied().chain(ears))?;
    Ok(ConstructionResult::new(graph, vec![])
        .predicting(binomial2(n) + 1, "clique edge gadget: C(n,2)+1"))
}

/// `s` disjoint copies of `K_n` (copy `i` on ids `i*n..(i+1)*n`) plus the
/// given cross-copy matching, expressed in those global ids.
pub fn matched_cliques(
    n: usize,
    s: usize,
    matching: &[(usize, usize)],
) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter(
            "clique order must be positive".into(),
        ));
    }
    let total = n * s;
    let mut used = vec![false; total];
    for &(a, b) in matching {
        for v in [a, b] {
            if v >= total {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: total }.into());
            }
            if used[v] {
                return Err(ConstructionError::Precondition(format!(
                    "vertex {v} is in two matching edges"
                )));
            }
            used[v] = true;
        }
        if a / n == b / n {
            return Err(ConstructionError::Precondition(format!(
                "pair ({a},{b}) lies inside one clique"
            )));
        }
    }
    let cliques = (0..s).flat_map(|c| {
        let base = c * n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (base + u, base + v)))
    });
    let graph = Graph::new(total, cliques.chain(matching.iter().copied()))?;
    let result = ConstructionResult::new(graph, vec![]);
    if n >= 3 {
        Ok(result.predicting(2 * s, "matched cliques: 2s"))
    } else {
        Ok(result)
    }
}

pub fn add_pendant_edge(g: &Graph, v: usize) -> Result<ConstructionResult> {
    g.check_vertex(v)?;
    let n = g.order();
    let graph = Graph::new(n + 1, edges_of(g).chain([(v, n)]))?;
    Ok(ConstructionResult::new(graph, vec![identity(n)])
        .predicting(forest_number(g) + 1, "pendant edge: f(G)+1"))
}

pub fn remove_pendant(g: &Graph, leaf: usize) -> Result<ConstructionResult> {
    g.check_vertex(leaf)?;
    if g.degree(leaf) != 1 {
        return Err(ConstructionError::Precondition(format!(
            "vertex {leaf} has degree {}, not 1",
            g.degree(leaf)
        )));
    }
    let mut keep = g.vertices();
    keep.remove(leaf);
    let (graph, members) = g.induced_subgraph(&keep)?;
    let mut map = vec![None; g.order()];
    for (new, &old) in members.iter().enumerate() {
        map[old] = Some(new);
    }
    Ok(ConstructionResult::new(graph, vec![map])
        .predicting(forest_number(g) - 1, "pendant removal: f(G)-1"))
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, `n` vertices.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    Complete(usize),
    /// Edgeless graph of order `n`.
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// `W_n`: a cycle on `n - 1` vertices plus a hub adjacent to all; `n >= 4`.
    Wheel(usize),
    /// `K_{1, n-1}`, `n` vertices in total with the hub at 0.
    Star(usize),
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "path",
        "cycle",
        "complete",
        "empty",
        "complete_bipartite",
        "wheel",
        "star",
    ];

    pub fn from_params(name: &str, params: &[usize]) -> Result<Family> {
        let arity = if name == "complete_bipartite" { 2 } else { 1 };
        if !Family::NAMES.contains(&name) {
            return Err(ConstructionError::InvalidParameter(format!(
                "unknown family {name:?}"
            )));
        }
        if params.len() != arity {
            return Err(ConstructionError::InvalidParameter(format!(
                "{name} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(match name {
            "path" => Family::Path(params[0]),
            "cycle" => Family::Cycle(params[0]),
            "complete" => Family::Complete(params[0]),
            "empty" => Family::Empty(params[0]),
            "complete_bipartite" => Family::CompleteBipartite(params[0], params[1]),
            "wheel" => Family::Wheel(params[0]),
            "star" => Family::Star(params[0]),
            _ => unreachable!(),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Wheel(_) => "wheel",
            Family::Star(_) => "star",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::CompleteBipartite(r, s) => write!(f, "complete_bipartite({r},{s})"),
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Wheel(n)
            | Family::Star(n) => write!(f, "{}({n})", self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    /// Parses `name` followed by whitespace-separated parameters, e.g. `"wheel 6"`.
    fn from_str(s: &str) -> Result<Family> {
        let mut parts = s.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| ConstructionError::InvalidParameter("empty family spec".into()))?;
        let params = parts
            .map(|p| {
                p.parse::<usize>().map_err(|_| {
                    ConstructionError::InvalidParameter(format!("bad parameter {p:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_params(name, &params)
    }
}

fn too_small(what: &str, min: usize, got: usize) -> ConstructionError {
    ConstructionError::InvalidParameter(format!("{what} needs order at least {min}, got {got}"))
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

pub fn family(fam: Family) -> Result<ConstructionResult> {
    let built = match fam {
        Family::Path(n) => {
            if n < 1 {
                return Err(too_small("path", 1, n));
            }
            let g = Graph::new(n, (1..n).map(|i| (i - 1, i)))?;
            ConstructionResult::new(g, vec![]).predicting(n, "forest: f = n")
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(too_small("cycle", 3, n));
            }
            let g = Graph::new(n, cycle_edges(n))?;
            ConstructionResult::new(g, vec![]).predicting(n - 1, "cycle: f = n-1")
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(too_small("complete", 1, n));
            }
            let g = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?;
            let f = if n == 1 { 1 } else { 2 };
            ConstructionResult::new(g, vec![]).predicting(f, "complete: f = 2 (1 for K_1)")
        }
        Family::Empty(n) => {
            ConstructionResult::new(Graph::new(n, [])?, vec![]).predicting(n, "forest: f = n")
        }
        Family::CompleteBipartite(r, s) => {
            if r < 1 || s < 1 {
                return Err(ConstructionError::InvalidParameter(
                    "complete_bipartite needs both parts nonempty".into(),
                ));
            }
            let g = Graph::new(r + s, (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))))?;
            let res = ConstructionResult::new(g, vec![]);
            if r.min(s) == 1 {
                res.predicting(r + s, "forest: f = n")
            } else if r == s {
                res.predicting(r + 1, "balanced complete bipartite: f = r+1")
            } else {
                res
            }
        }
        Family::Wheel(n) => {
            if n < 4 {
                return Err(too_small("wheel", 4, n));
            }
            let rim = n - 1;
            let g = Graph::new(n, cycle_edges(rim).chain((0..rim).map(|v| (v, rim))))?;
            ConstructionResult::new(g, vec![])
        }
        Family::Star(n) => {
            if n < 1 {
                return Err(too_small("star", 1, n));
            }
            let g = Graph::new(n, (1..n).map(|v| (0, v)))?;
            ConstructionResult::new(g, vec![]).predicting(n, "forest: f = n")
        }
    };
    Ok(ConstructionResult {
        graph: built.graph.named(fam.to_string()),
        ..built
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::decide_well_f_covered;

    fn fam(f: Family) -> Graph {
        family(f).unwrap().graph
    }

    fn k(n: usize) -> Graph {
        fam(Family::Complete(n))
    }

    fn check(r: &ConstructionResult) {
        let v = decide_well_f_covered(&r.graph);
        assert_eq!(Some(v.forest_number), r.predicted_f, "{:?}", r.graph);
    }

    #[test]
    fn unions() {
        let r = disjoint_union(&k(3), &k(3)).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        check(&r);
        let r = disjoint_union(&Graph::empty(0), &fam(Family::Cycle(5))).unwrap();
        assert_eq!(r.graph, fam(Family::Cycle(5)));
        assert_eq!(r.predicted_f, Some(4));
        let r = disjoint_union(&fam(Family::Cycle(4)), &fam(Family::Path(2))).unwrap();
        assert_eq!(r.predicted_f, Some(5));
        check(&r);
        assert_eq!(r.map(1, 1), Some(5));
    }

    #[test]
    fn joins() {
        let w5 = join(&Graph::empty(1), &fam(Family::Cycle(4))).unwrap().graph;
        let expected = fam(Family::Wheel(5)).permuted(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(w5, expected);
        let c4 = join(&Graph::empty(2), &Graph::empty(2)).unwrap().graph;
        assert_eq!(c4.size(), 4);
        assert!(c4.degree(0) == 2 && c4.cyclomatic_number() == 1);
        let k33 = join(&Graph::empty(3), &Graph::empty(3)).unwrap().graph;
        assert_eq!(k33, fam(Family::CompleteBipartite(3, 3)));
        assert_eq!(family(Family::CompleteBipartite(3, 3)).unwrap().predicted_f, Some(4));
        // join adds |V(G)||V(H)| edges over the union
        let (a, b) = (fam(Family::Cycle(5)), fam(Family::Path(3)));
        assert_eq!(
            join(&a, &b).unwrap().graph.size(),
            disjoint_union(&a, &b).unwrap().graph.size() + 15
        );
    }

    #[test]
    fn identification() {
        let k3p = add_pendant_edge(&k(3), 0).unwrap().graph;
        let r = identify_vertex(&k3p, 3, &k(3), 0).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        check(&r);
        assert_eq!(r.graph.bridges().len(), 1);

        let bowtie = identify_vertex(&k(3), 0, &k(3), 0).unwrap();
        assert_eq!(bowtie.predicted_f, None);
        assert_eq!(bowtie.graph.order(), 5);
        assert!(!decide_well_f_covered(&bowtie.graph).well_f_covered);

        let c5 = fam(Family::Cycle(5));
        let r = identify_vertex(&Graph::empty(1), 0, &c5, 2).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        assert_eq!(r.graph.order(), 5);
        assert!(identify_vertex(&k(3), 3, &k(3), 0).is_err());
    }

    #[test]
    fn path_connections() {
        let r = connect_by_path(&k(3), 0, &k(3), 1, 2).unwrap();
        assert_eq!(r.predicted_f, Some(5));
        check(&r);
        let r = connect_by_path(&k(3), 2, &fam(Family::Cycle(4)), 0, 1).unwrap();
        assert_eq!(r.predicted_f, Some(5));
        check(&r);
        let r = connect_by_path(&Graph::empty(1), 0, &Graph::empty(1), 0, 3).unwrap();
        assert_eq!(r.graph, fam(Family::Path(4)).permuted(&[0, 2, 3, 1]).unwrap());
        assert_eq!(r.predicted_f, Some(4));
        assert!(connect_by_path(&k(3), 0, &k(3), 0, 0).is_err());
    }

    #[test]
    fn subdivision() {
        let e = Edge::new(0, 1).unwrap();
        let r = replace_edge_with_path(&k(3), e, 3).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        assert_eq!(r.graph.order(), 5);
        assert!(r.graph.is_connected() && r.graph.size() == 5);
        check(&r);
        let r = replace_edge_with_path(&fam(Family::Cycle(4)), e, 2).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        check(&r);
        let bowtie = identify_vertex(&k(3), 0, &k(3), 0).unwrap().graph;
        let outer = bowtie.edges().find(|e| bowtie.degree(e.u) == 2 && bowtie.degree(e.v) == 2);
        let r = replace_edge_with_path(&bowtie, outer.unwrap(), 2).unwrap();
        assert_eq!(r.predicted_f, Some(5));
        check(&r);
        assert!(matches!(
            replace_edge_with_path(&k(4), e, 2),
            Err(ConstructionError::Precondition(_))
        ));
        assert!(replace_edge_with_path(&k(3), Edge::new(0, 1).unwrap(), 1).is_err());
    }

    #[test]
    fn forest_gluing() {
        let c4 = fam(Family::Cycle(4));
        let p3 = fam(Family::Path(3));
        let r = glue_forest_along_path(&c4, &[0, 1], &p3, &[0, 1]).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        assert_eq!(r.graph.order(), 5);
        check(&r);

        let p2 = fam(Family::Path(2));
        let r = glue_forest_along_path(&c4, &[1, 2], &p2, &[0, 1]).unwrap();
        assert_eq!(r.graph, c4);
        assert_eq!(r.predicted_f, Some(3));

        let p4 = fam(Family::Path(4));
        let r = glue_forest_along_path(&k(4), &[0, 1], &p4, &[1, 2]).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        assert_eq!(r.graph.order(), 6);
        check(&r);

        assert!(glue_forest_along_path(&c4, &[0, 1], &k(3), &[0, 1]).is_err());
        assert!(glue_forest_along_path(&c4, &[0, 2], &p3, &[0, 1]).is_err());
        assert!(glue_forest_along_path(&c4, &[0, 1, 2], &p3, &[0, 1]).is_err());
    }

    #[test]
    fn gadgets() {
        for (n, f) in [(2, 2), (3, 4), (4, 7)] {
            let r = clique_edge_gadget(n).unwrap();
            assert_eq!(r.predicted_f, Some(f));
            assert_eq!(r.graph.order(), n + n * (n - 1) / 2);
        }
        assert_eq!(clique_edge_gadget(2).unwrap().graph, k(3));
        assert!(clique_edge_gadget(1).is_err());
    }

    #[test]
    fn matched() {
        let r = matched_cliques(3, 2, &[(0, 3)]).unwrap();
        assert_eq!(r.predicted_f, Some(4));
        check(&r);
        let r = matched_cliques(3, 3, &[(0, 3), (4, 6)]).unwrap();
        assert_eq!(r.predicted_f, Some(6));
        check(&r);
        let r = matched_cliques(2, 2, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(r.predicted_f, None);
        assert_eq!(r.graph.cyclomatic_number(), 1);
        assert!(decide_well_f_covered(&r.graph).well_f_covered);
        assert!(matched_cliques(3, 2, &[(0, 1)]).is_err());
        assert!(matched_cliques(3, 2, &[(0, 3), (0, 4)]).is_err());
        assert!(matched_cliques(3, 2, &[(0, 9)]).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(family(Family::Cycle(8)).unwrap().predicted_f, Some(7));
        assert_eq!(fam(Family::Wheel(4)), k(4));
        assert_eq!(fam(Family::Wheel(6)).order(), 6);
        assert!(family(Family::Cycle(2)).is_err());
        assert!(family(Family::Wheel(3)).is_err());
        assert_eq!("complete_bipartite 3 3".parse::<Family>().unwrap(), Family::CompleteBipartite(3, 3));
        assert!("wheel".parse::<Family>().is_err());
        assert!("hexagon 6".parse::<Family>().is_err());
        assert_eq!(fam(Family::Star(4)).degree(0), 3);
    }

    #[test]
    fn pendants() {
        let r = add_pendant_edge(&k(3), 1).unwrap();
        assert_eq!(r.predicted_f, Some(3));
        check(&r);
        let r = add_pendant_edge(&Graph::empty(1), 0).unwrap();
        assert_eq!(r.graph, fam(Family::Path(2)));
        assert_eq!(r.predicted_f, Some(2));
        let r = remove_pendant(&fam(Family::Path(4)), 3).unwrap();
        assert_eq!(r.graph, fam(Family::Path(3)));
        assert_eq!(r.predicted_f, Some(3));
        assert_eq!(r.map(0, 3), None);
        assert!(remove_pendant(&fam(Family::Path(4)), 1).is_err());
    }
}
