//! Line-graph recognition with root reconstruction.
//!
//! Roots are built one component at a time by adding the vertices in
//! breadth-first order. Each new vertex becomes a root edge whose incident
//! edges must be exactly its already-placed neighbors; the few ways to attach
//! it are tried in turn, with backtracking. Once a component's root has more
//! than four vertices the attachment is forced, so backtracking only happens
//! near the start.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::beineke_catalog;
use crate::graph::{
    bfs_order, connected_components, find_induced_embedding, two_coloring, Graph, VertexSet, MAX_VERTICES,
};

/// A root graph `H` with `L(H) = G` under `vertex_to_edge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRoot {
    pub root: Graph,
    /// `vertex_to_edge[v]` is the root edge `(a, b)`, `a < b`, of vertex `v`.
    pub vertex_to_edge: Vec<(usize, usize)>,
}

impl LineRoot {
    /// True iff `g` equals the line graph of the root under the mapping.
    pub fn is_root_of(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.vertex_to_edge.len() != n || self.root.m() != n {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &self.vertex_to_edge {
            if !self.root.has_edge(a, b) || !seen.insert((a, b)) {
                return false;
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = self.vertex_to_edge[u];
                let (c, d) = self.vertex_to_edge[v];
                let incident = a == c || a == d || b == c || b == d;
                if g.has_edge(u, v) != incident {
                    return false;
                }
            }
        }
        true
    }
}

/// Cliques covering every edge exactly once, every vertex at most twice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KrauszPartition {
    pub cliques: Vec<VertexSet>,
}

/// An induced copy of a catalog graph: `embedding[i]` is the host vertex of
/// catalog vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeinekeViolation {
    /// 1-based; 1 is the claw.
    pub catalog_index: usize,
    pub embedding: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineCertificate {
    Root(LineRoot),
    Refusal(BeinekeViolation),
}

impl LineCertificate {
    pub fn root(&self) -> Option<&LineRoot> {
        match self {
            LineCertificate::Root(r) => Some(r),
            LineCertificate::Refusal(_) => None,
        }
    }
}

/// The lowest-indexed Beineke graph occurring as an induced subgraph.
pub fn beineke_violation(g: &Graph) -> Option<BeinekeViolation> {
    beineke_catalog().iter().enumerate().find_map(|(i, pattern)| {
        find_induced_embedding(pattern, g).map(|embedding| BeinekeViolation {
            catalog_index: i + 1,
            embedding,
        })
    })
}

pub fn recognize_line_graph(g: &Graph) -> Result<LineCertificate> {
    if let Some(root) = find_line_root(g)? {
        return Ok(LineCertificate::Root(root));
    }
    match beineke_violation(g) {
        Some(v) => Ok(LineCertificate::Refusal(v)),
        None => Err(Error::internal("root search failed but no Beineke graph is present")),
    }
}

/// Root reconstruction without consulting the forbidden-subgraph catalog.
///
/// Isolated vertices become isolated root edges; an isolated triangle gets
/// the root `K_{1,3}`.
pub fn find_line_root(g: &Graph) -> Result<Option<LineRoot>> {
    let mut edges = vec![(0usize, 0usize); g.n()];
    let mut offset = 0;
    for comp in connected_components(g) {
        let order = bfs_order(g, comp);
        let local = if comp.len() == 3 && g.is_clique(comp) {
            vec![(0, 1), (0, 2), (0, 3)]
        } else {
            match component_root(g, &order) {
                Some(e) => e,
                None => return Ok(None),
            }
        };
        let used = local.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        for (&v, &(a, b)) in order.iter().zip(&local) {
            edges[v] = (offset + a.min(b), offset + a.max(b));
        }
        offset += used;
    }
    if offset > MAX_VERTICES {
        return Err(Error::Capability {
            what: "root graph vertex count",
            limit: MAX_VERTICES,
            got: offset,
        });
    }
    let root = Graph::from_edges(offset, &edges)?;
    let out = LineRoot {
        root,
        vertex_to_edge: edges,
    };
    if !out.is_root_of(g) {
        return Err(Error::internal("reconstructed root does not reproduce the input"));
    }
    Ok(Some(out))
}

struct RootSearch {
    /// Neighbors of position `i` among positions `< i`.
    back: Vec<u64>,
    edges: Vec<(usize, usize)>,
    /// Positions whose root edge touches root vertex `x`.
    incident: Vec<u64>,
    fresh: usize,
}

impl RootSearch {
    fn place(&mut self, x: usize, y: usize, pos: usize) {
        self.edges.push((x, y));
        self.incident[x] |= 1 << pos;
        self.incident[y] |= 1 << pos;
    }

    fn unplace(&mut self, x: usize, y: usize, pos: usize) {
        self.edges.pop();
        self.incident[x] &= !(1 << pos);
        self.incident[y] &= !(1 << pos);
    }

    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.back.len() {
            return true;
        }
        let need = self.back[pos];
        let first = need.trailing_zeros() as usize;
        let (a, b) = self.edges[first];
        for x in [a, b] {
            if self.incident[x] & !need != 0 {
                continue;
            }
            let rest = need & !self.incident[x];
            if rest == 0 {
                let y = self.fresh;
                self.fresh += 1;
                self.place(x, y, pos);
                if self.extend(pos + 1) {
                    return true;
                }
                self.unplace(x, y, pos);
                self.fresh -= 1;
                continue;
            }
            let (c, d) = self.edges[rest.trailing_zeros() as usize];
            for y in [c, d] {
                if y == x
                    || self.incident[y] & !need != 0
                    || self.incident[x] | self.incident[y] != need
                    || self.incident[x] & self.incident[y] != 0
                {
                    continue;
                }
                self.place(x, y, pos);
                if self.extend(pos + 1) {
                    return true;
                }
                self.unplace(x, y, pos);
            }
        }
        false
    }
}

/// Root edges for the positions of `order`, in local root-vertex ids.
fn component_root(g: &Graph, order: &[usize]) -> Option<Vec<(usize, usize)>> {
    let k = order.len();
    let back: Vec<u64> = (0..k)
        .map(|i| (0..i).filter(|&j| g.has_edge(order[i], order[j])).fold(0u64, |m, j| m | 1 << j))
        .collect();
    let mut s = RootSearch {
        back,
        edges: Vec::with_capacity(k),
        incident: vec![0; k + 2],
        fresh: 2,
    };
    s.place(0, 1, 0);
    s.extend(1).then_some(s.edges)
}

/// Builds the root of a Krausz partition: one root vertex per clique plus a
/// private endpoint for every vertex lying in fewer than two cliques.
pub fn root_from_krausz(g: &Graph, cliques: &[VertexSet]) -> Result<LineRoot> {
    if !is_krausz_partition(g, cliques) {
        return Err(Error::invalid("family is not a Krausz partition of the graph"));
    }
    let mut next = cliques.len();
    let mut edges = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let member: Vec<usize> = (0..cliques.len()).filter(|&i| cliques[i].contains(v)).collect();
        let e = match member[..] {
            [a, b] => (a, b),
            [a] => {
                next += 1;
                (a, next - 1)
            }
            _ => {
                next += 2;
                (next - 2, next - 1)
            }
        };
        edges.push(e);
    }
    if next > MAX_VERTICES {
        return Err(Error::Capability {
            what: "root graph vertex count",
            limit: MAX_VERTICES,
            got: next,
        });
    }
    let root = Graph::from_edges(next, &edges)?;
    let out = LineRoot {
        root,
        vertex_to_edge: edges,
    };
    if !out.is_root_of(g) {
        return Err(Error::internal("Krausz root does not reproduce the input"));
    }
    Ok(out)
}

/// Both Krausz conditions, checked literally.
pub fn is_krausz_partition(g: &Graph, cliques: &[VertexSet]) -> bool {
    let all = g.vertices();
    if cliques.iter().any(|&c| !c.is_subset(all) || !g.is_clique(c)) {
        return false;
    }
    let vertices_ok = (0..g.n()).all(|v| cliques.iter().filter(|c| c.contains(v)).count() <= 2);
    let edges_ok = g.edges().into_iter().all(|(u, v)| {
        cliques.iter().filter(|c| c.contains(u) && c.contains(v)).count() == 1
    });
    vertices_ok && edges_ok
}

/// The Krausz partition read off a root: the edges at every root vertex of
/// degree at least two.
pub fn krausz_from_root(root: &LineRoot) -> KrauszPartition {
    let cliques = (0..root.root.n())
        .map(|x| {
            root.vertex_to_edge
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == x || b == x)
                .map(|(v, _)| v)
                .collect::<VertexSet>()
        })
        .filter(|c| c.len() >= 2)
        .collect();
    KrauszPartition { cliques }
}

pub fn krausz_partition(g: &Graph) -> Result<Option<KrauszPartition>> {
    Ok(find_line_root(g)?.as_ref().map(krausz_from_root))
}

/// For bipartite `g`: line graph iff every component is a path or an even cycle.
pub fn is_line_graph_bipartite_fast(g: &Graph) -> Result<bool> {
    if two_coloring(g).is_err() {
        return Err(Error::invalid("graph is not bipartite"));
    }
    Ok(g.max_degree() <= 2)
}

/// Root of a graph whose components are paths and cycles: a path on `p`
/// vertices gets a path with `p` edges, a cycle gets the same cycle.
pub fn root_of_paths_and_cycles(g: &Graph) -> Result<LineRoot> {
    if g.max_degree() > 2 {
        return Err(Error::invalid("maximum degree exceeds two"));
    }
    let mut edges = vec![(0, 0); g.n()];
    let mut next = 0usize;
    for comp in connected_components(g) {
        let start = comp.iter().find(|&v| g.degree(v) < 2).or(comp.first()).unwrap();
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(nxt) = g.neighbors(cur).iter().find(|&w| w != prev && w != start) {
            if walk.contains(&nxt) {
                break;
            }
            walk.push(nxt);
            prev = cur;
            cur = nxt;
        }
        let p = walk.len();
        let is_cycle = p >= 3 && g.has_edge(walk[0], walk[p - 1]);
        for (i, &v) in walk.iter().enumerate() {
            let a = next + i;
            let b = if is_cycle { next + (i + 1) % p } else { next + i + 1 };
            edges[v] = (a.min(b), a.max(b));
        }
        next += if is_cycle { p } else { p + 1 };
    }
    if next > MAX_VERTICES {
        return Err(Error::Capability {
            what: "root graph vertex count",
            limit: MAX_VERTICES,
            got: next,
        });
    }
    let out = LineRoot {
        root: Graph::from_edges(next, &edges)?,
        vertex_to_edge: edges,
    };
    if !out.is_root_of(g) {
        return Err(Error::internal("path/cycle root does not reproduce the input"));
    }
    Ok(out)
}
