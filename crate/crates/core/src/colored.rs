//! Edge-colored graphs and their color-line graphs.
//!
//! `CL(H)` has one vertex per edge of `H`; two vertices are adjacent when the
//! edges share an endpoint (an L-edge) or carry the same color (a C-edge).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, VertexSet, MAX_VERTICES};

/// Edge cap for [`max_rainbow_matching`].
pub const RAINBOW_MATCHING_LIMIT: usize = 20;
/// Vertex cap for [`max_independent_set`].
pub const INDEPENDENT_SET_LIMIT: usize = 20;

/// A graph with a total edge coloring by dense color ids `1..=k`.
///
/// Edges are kept in lexicographic order; that order fixes the vertex
/// indexing of the color-line graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    graph: Graph,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    k: usize,
    proper: bool,
}

impl EdgeColoredGraph {
    /// Builds from `(u, v, label)` triples. Labels are arbitrary and get
    /// remapped to `1..=k` in increasing label order.
    pub fn new(n: usize, colored_edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut graph = Graph::new(n)?;
        let mut by_edge = BTreeMap::new();
        for &(u, v, c) in colored_edges {
            graph.add_edge(u, v)?;
            let key = (u.min(v), u.max(v));
            if by_edge.insert(key, c).is_some() {
                return Err(Error::invalid(format!("edge {}-{} listed twice", key.0, key.1)));
            }
        }
        let dense: BTreeMap<usize, usize> = by_edge
            .values()
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, label)| (label, i + 1))
            .collect();
        let edges: Vec<(usize, usize)> = by_edge.keys().copied().collect();
        let colors: Vec<usize> = by_edge.values().map(|c| dense[c]).collect();
        let mut h = EdgeColoredGraph {
            k: dense.len(),
            graph,
            edges,
            colors,
            proper: false,
        };
        h.proper = validate_proper(&h);
        Ok(h)
    }

    /// Every edge gets its own color.
    pub fn rainbow(graph: &Graph) -> Self {
        let colored: Vec<_> = graph.edges().into_iter().enumerate().map(|(i, (u, v))| (u, v, i + 1)).collect();
        EdgeColoredGraph::new(graph.n(), &colored).expect("edges of a valid graph")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colors in use.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index(u, v).map(|i| self.colors[i])
    }

    /// `(u, v, color)` in edge order.
    pub fn colored_edges(&self) -> Vec<(usize, usize, usize)> {
        self.edges.iter().zip(&self.colors).map(|(&(u, v), &c)| (u, v, c)).collect()
    }
}

/// The color-line graph together with the provenance of its vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorLineResult {
    #[serde(skip)]
    pub cl: Graph,
    /// `edge_of_vertex[i]` is the root edge represented by vertex `i`.
    pub edge_of_vertex: Vec<(usize, usize)>,
    /// Pairs adjacent because their root edges share an endpoint.
    pub l_edges: Vec<(usize, usize)>,
    /// Pairs adjacent because their root edges share a color.
    pub c_edges: Vec<(usize, usize)>,
}

fn incident(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

pub fn color_line_graph(h: &EdgeColoredGraph) -> Result<ColorLineResult> {
    let m = h.edges.len();
    if m > MAX_VERTICES {
        return Err(Error::Capability {
            what: "color-line graph vertex count (root edges)",
            limit: MAX_VERTICES,
            got: m,
        });
    }
    let mut cl = Graph::new(m)?;
    let mut l_edges = Vec::new();
    let mut c_edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let l = incident(h.edges[i], h.edges[j]);
            let c = h.colors[i] == h.colors[j];
            if l {
                l_edges.push((i, j));
            }
            if c {
                c_edges.push((i, j));
            }
            if l || c {
                cl.add_edge(i, j)?;
            }
        }
    }
    Ok(ColorLineResult {
        cl,
        edge_of_vertex: h.edges.clone(),
        l_edges,
        c_edges,
    })
}

/// `L(H)`: the color-line graph of the rainbow coloring.
pub fn line_graph(h: &Graph) -> Result<ColorLineResult> {
    color_line_graph(&EdgeColoredGraph::rainbow(h))
}

/// True iff no two edges sharing an endpoint have the same color.
pub fn validate_proper(h: &EdgeColoredGraph) -> bool {
    let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for (&(u, v), &c) in h.edges.iter().zip(&h.colors) {
        if seen.insert((u, c), ()).is_some() || seen.insert((v, c), ()).is_some() {
            return false;
        }
    }
    true
}

/// Checks `g = CL(root)` under the vertex-to-edge correspondence, pair by pair.
///
/// This is the final gate every emitted certificate passes; it does not go
/// through [`color_line_graph`].
pub fn certificate_holds(g: &Graph, root: &EdgeColoredGraph, vertex_to_edge: &[(usize, usize)]) -> bool {
    if vertex_to_edge.len() != g.n() || root.edges().len() != g.n() {
        return false;
    }
    let mut colors = Vec::with_capacity(g.n());
    let mut used = vec![false; g.n()];
    for &(u, v) in vertex_to_edge {
        match root.edge_index(u, v) {
            Some(i) if !used[i] => {
                used[i] = true;
                colors.push(root.colors()[i]);
            }
            _ => return false,
        }
    }
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let expect = incident(vertex_to_edge[a], vertex_to_edge[b]) || colors[a] == colors[b];
            if g.has_edge(a, b) != expect {
                return false;
            }
        }
    }
    true
}

/// Largest matching whose edges carry pairwise distinct colors.
pub fn max_rainbow_matching(h: &EdgeColoredGraph) -> Result<Matching> {
    let m = h.edges.len();
    if m > RAINBOW_MATCHING_LIMIT {
        return Err(Error::Capability {
            what: "rainbow matching edge count",
            limit: RAINBOW_MATCHING_LIMIT,
            got: m,
        });
    }
    struct Search<'a> {
        h: &'a EdgeColoredGraph,
        best: Vec<usize>,
        cur: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, covered: u64, used_colors: u64) {
            if self.cur.len() + (self.h.edges.len() - i) <= self.best.len() {
                return;
            }
            if i == self.h.edges.len() {
                self.best = self.cur.clone();
                return;
            }
            let (u, v) = self.h.edges[i];
            let c = self.h.colors[i];
            let vmask = (1u64 << u) | (1u64 << v);
            if covered & vmask == 0 && used_colors >> c & 1 == 0 {
                self.cur.push(i);
                self.go(i + 1, covered | vmask, used_colors | 1u64 << c);
                self.cur.pop();
            }
            self.go(i + 1, covered, used_colors);
        }
    }
    let mut s = Search {
        h,
        best: Vec::new(),
        cur: Vec::new(),
    };
    s.go(0, 0, 0);
    Ok(Matching {
        edges: s.best.into_iter().map(|i| h.edges[i]).collect(),
    })
}

/// Maximum independent set by branch and bound.
pub fn max_independent_set(g: &Graph) -> Result<VertexSet> {
    if g.n() > INDEPENDENT_SET_LIMIT {
        return Err(Error::Capability {
            what: "independent set vertex count",
            limit: INDEPENDENT_SET_LIMIT,
            got: g.n(),
        });
    }
    fn go(g: &Graph, cand: VertexSet, cur: VertexSet, best: &mut VertexSet) {
        if cur.len() + cand.len() <= best.len() {
            return;
        }
        let Some(v) = cand.iter().max_by_key(|&v| g.neighbors(v).intersection(cand).len()) else {
            *best = cur;
            return;
        };
        let nv = g.neighbors(v).intersection(cand);
        let mut with = cur;
        with.insert(v);
        go(g, cand.difference(nv).difference(VertexSet::singleton(v)), with, best);
        if !nv.is_empty() {
            go(g, cand.difference(VertexSet::singleton(v)), cur, best);
        }
    }
    let mut best = VertexSet::empty();
    go(g, g.vertices(), VertexSet::empty(), &mut best);
    Ok(best)
}
