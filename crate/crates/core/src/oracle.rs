//! Exhaustive reference searches for small graphs, the line-bigraph gadget,
//! and the isolated-vertex lift.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{bfs_order, connected_components, induced_subgraph, Graph, VertexSet};
use crate::line::find_line_root;
use crate::partition::for_each_clique_partition;
use crate::recognize::{check_partition_characterization, ColorLineRoot, VertexCliquePartition};

/// Vertex cap for the color-line oracles without a time budget.
pub const ORACLE_LIMIT: usize = 8;
/// Vertex cap when a finite [`Budget`] bounds the search.
pub const BUDGETED_ORACLE_LIMIT: usize = 24;
/// Cap on `|X| + |Y|` for [`oracle_line_bigraph`].
pub const BIGRAPH_LIMIT: usize = 8;

pub const BUDGET_ENV: &str = "COLORLINE_BUDGET_SECS";

/// Wall-clock allowance for a slow search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    secs: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            secs: 0,
        }
    }

    pub fn from_secs(secs: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs(secs)),
            secs,
        }
    }

    /// Reads the allowance from `COLORLINE_BUDGET_SECS`; unset means unlimited.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => {
                let secs = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("{BUDGET_ENV} must be a whole number of seconds, got {v:?}")))?;
                Ok(Budget::from_secs(secs))
            }
            Err(_) => Ok(Budget::unlimited()),
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.deadline.is_none()
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(self.secs)),
            _ => Ok(()),
        }
    }
}

fn cap(g: &Graph, budget: &Budget) -> Result<()> {
    let limit = if budget.is_unlimited() {
        ORACLE_LIMIT
    } else {
        BUDGETED_ORACLE_LIMIT
    };
    if g.n() > limit {
        return Err(Error::Capability {
            what: "oracle vertex count",
            limit,
            got: g.n(),
        });
    }
    Ok(())
}

/// Labels class members `i + 1` for class index `i`.
fn labels(n: usize, classes: &[VertexSet]) -> Vec<usize> {
    let mut label = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for v in c.iter() {
            label[v] = i + 1;
        }
    }
    label
}

/// Searches for any edge coloring with at most `k` colors whose color-line
/// graph is `g`.
///
/// Color classes are cliques of `g`; cross-class adjacency must come from
/// incidence, while within a class incidence is free. So for every clique
/// partition this looks for a set of within-class pairs whose union with
/// the cross-class edges is a line graph.
pub fn oracle_k_color_line(g: &Graph, k: usize) -> Result<Option<ColorLineRoot>> {
    oracle_k_color_line_with(g, k, &Budget::unlimited())
}

/// As [`oracle_k_color_line`]; a finite budget raises the vertex cap to
/// [`BUDGETED_ORACLE_LIMIT`].
pub fn oracle_k_color_line_with(g: &Graph, k: usize, budget: &Budget) -> Result<Option<ColorLineRoot>> {
    cap(g, budget)?;
    let n = g.n();
    let vertices: Vec<usize> = (0..n).collect();
    let found = for_each_clique_partition(g, &vertices, 1.min(n), k.min(n), |classes| {
        if let Err(e) = budget.check() {
            return ControlFlow::Break(Err(e));
        }
        match realize_classes(g, classes, budget) {
            Ok(Some(root)) => ControlFlow::Break(Ok(root)),
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => ControlFlow::Break(Err(e)),
        }
    });
    found.transpose()
}

fn realize_classes(g: &Graph, classes: &[VertexSet], budget: &Budget) -> Result<Option<ColorLineRoot>> {
    let n = g.n();
    let label = labels(n, classes);
    let mut base = g.clone();
    for &c in classes {
        base.delete_edges_within(c);
    }
    // within-class partners of j among 0..j
    let partners: Vec<Vec<usize>> = (0..n).map(|j| (0..j).filter(|&i| label[i] == label[j]).collect()).collect();
    let mut l = base;
    if !extend_superset(&mut l, &partners, 0, budget)? {
        return Ok(None);
    }
    let line_root = find_line_root(&l)?.ok_or_else(|| Error::internal("accepted superset has no root"))?;
    let colored: Vec<(usize, usize, usize)> =
        line_root.vertex_to_edge.iter().zip(&label).map(|(&(a, b), &c)| (a, b, c)).collect();
    let root = crate::colored::EdgeColoredGraph::new(line_root.root.n(), &colored)?;
    if !crate::colored::certificate_holds(g, &root, &line_root.vertex_to_edge) {
        return Err(Error::internal("oracle root does not reproduce the input"));
    }
    Ok(Some(ColorLineRoot {
        root,
        vertex_to_edge: line_root.vertex_to_edge,
        classes: classes.to_vec(),
    }))
}

/// Decides the within-class pairs ending at vertex `j`, smallest subsets
/// first, keeping `l[0..=j]` a line graph after each step.
fn extend_superset(l: &mut Graph, partners: &[Vec<usize>], j: usize, budget: &Budget) -> Result<bool> {
    if j == partners.len() {
        return Ok(true);
    }
    budget.check()?;
    let p = &partners[j];
    let by_size = (0..=p.len() as u32).flat_map(|size| (0..1u64 << p.len()).filter(move |m| m.count_ones() == size));
    for mask in by_size {
        for (b, &i) in p.iter().enumerate() {
            if mask >> b & 1 == 1 {
                l.add_edge(i, j)?;
            }
        }
        let (prefix, _) = induced_subgraph(l, VertexSet::prefix(j + 1))?;
        if find_line_root(&prefix)?.is_some() && extend_superset(l, partners, j + 1, budget)? {
            return Ok(true);
        }
        for &i in p {
            l.remove_edge(i, j);
        }
    }
    Ok(false)
}

/// First clique partition into at most `k` classes (restricted growth
/// string order) whose class-free remainder is a line graph.
pub fn oracle_proper_k_color_line(g: &Graph, k: usize) -> Result<Option<ColorLineRoot>> {
    oracle_proper_k_color_line_with(g, k, &Budget::unlimited())
}

/// As [`oracle_proper_k_color_line`]; a finite budget raises the vertex cap
/// to [`BUDGETED_ORACLE_LIMIT`].
pub fn oracle_proper_k_color_line_with(g: &Graph, k: usize, budget: &Budget) -> Result<Option<ColorLineRoot>> {
    cap(g, budget)?;
    let n = g.n();
    let vertices: Vec<usize> = (0..n).collect();
    let found = for_each_clique_partition(g, &vertices, 1.min(n), k.min(n), |classes| {
        if let Err(e) = budget.check() {
            return ControlFlow::Break(Err(e));
        }
        let p = VertexCliquePartition {
            classes: classes.to_vec(),
        };
        match check_partition_characterization(g, &p) {
            Ok(Some(root)) => ControlFlow::Break(Ok(root)),
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => ControlFlow::Break(Err(e)),
        }
    });
    found.transpose()
}

/// Every clique partition into at most `k` classes that satisfies the
/// partition characterization.
pub fn valid_proper_partitions(g: &Graph, k: usize) -> Result<Vec<Vec<VertexSet>>> {
    cap(g, &Budget::unlimited())?;
    let n = g.n();
    let vertices: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let err = for_each_clique_partition(g, &vertices, 1.min(n), k.min(n), |classes| {
        let p = VertexCliquePartition {
            classes: classes.to_vec(),
        };
        match check_partition_characterization(g, &p) {
            Ok(Some(_)) => {
                out.push(p.classes);
                ControlFlow::Continue(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => ControlFlow::Break(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// A bipartite graph with sides `X = 0..nx` and `Y = 0..ny`; `edges` holds
/// `(x, y)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBigraphInstance {
    nx: usize,
    ny: usize,
    edges: Vec<(usize, usize)>,
}

impl LineBigraphInstance {
    pub fn new(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if nx + ny > crate::graph::MAX_VERTICES {
            return Err(Error::Capability {
                what: "bigraph vertex count",
                limit: crate::graph::MAX_VERTICES,
                got: nx + ny,
            });
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for &(x, y) in edges {
            if x >= nx {
                return Err(Error::VertexOutOfRange { vertex: x, n: nx });
            }
            if y >= ny {
                return Err(Error::VertexOutOfRange { vertex: y, n: ny });
            }
            sorted.push((x, y));
        }
        sorted.sort_unstable();
        sorted.dedup();
        Ok(LineBigraphInstance { nx, ny, edges: sorted })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.edges.binary_search(&(x, y)).is_ok()
    }

    /// The bipartite graph on `X` then `Y` (`y` becomes `nx + y`).
    pub fn graph(&self) -> Graph {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(x, y)| (x, self.nx + y)).collect();
        Graph::from_edges(self.nx + self.ny, &pairs).expect("validated on construction")
    }
}

/// Two edge sets on a common vertex set `0..vertices`: `e1[x]` represents
/// `x` and `e2[y]` represents `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigraphRealization {
    pub vertices: usize,
    pub e1: Vec<(usize, usize)>,
    pub e2: Vec<(usize, usize)>,
}

impl BigraphRealization {
    /// True iff all edges are distinct and `x ~ y` exactly when their edges meet.
    pub fn realizes(&self, b: &LineBigraphInstance) -> bool {
        if self.e1.len() != b.nx() || self.e2.len() != b.ny() {
            return false;
        }
        let mut all: Vec<(usize, usize)> = self.e1.iter().chain(&self.e2).copied().collect();
        if all.iter().any(|&(u, v)| u >= v || v >= self.vertices) {
            return false;
        }
        all.sort_unstable();
        all.dedup();
        if all.len() != b.nx() + b.ny() {
            return false;
        }
        (0..b.nx()).all(|x| (0..b.ny()).all(|y| meets(self.e1[x], self.e2[y]) == b.adjacent(x, y)))
    }
}

fn meets(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// Exhaustive search for two disjoint edge sets whose intersection pattern
/// is `b`. Root vertices are introduced in order of first use, which fixes
/// their labels up to symmetry.
pub fn oracle_line_bigraph(b: &LineBigraphInstance) -> Result<Option<BigraphRealization>> {
    oracle_line_bigraph_with(b, &Budget::unlimited())
}

pub fn oracle_line_bigraph_with(b: &LineBigraphInstance, budget: &Budget) -> Result<Option<BigraphRealization>> {
    let total = b.nx() + b.ny();
    if total > BIGRAPH_LIMIT {
        return Err(Error::Capability {
            what: "bigraph oracle vertex count",
            limit: BIGRAPH_LIMIT,
            got: total,
        });
    }
    let g = b.graph();
    let mut order = Vec::with_capacity(total);
    for comp in connected_components(&g) {
        order.extend(bfs_order(&g, comp));
    }
    let mut search = BigraphSearch {
        b,
        order,
        assigned: vec![None; total],
        used: 0,
        budget,
    };
    if !search.run(0)? {
        return Ok(None);
    }
    let edge = |i: usize| search.assigned[i].expect("all assigned");
    let out = BigraphRealization {
        vertices: search.used,
        e1: (0..b.nx()).map(edge).collect(),
        e2: (b.nx()..total).map(edge).collect(),
    };
    if !out.realizes(b) {
        return Err(Error::internal("bigraph realization fails its own check"));
    }
    Ok(Some(out))
}

struct BigraphSearch<'a> {
    b: &'a LineBigraphInstance,
    order: Vec<usize>,
    /// Edge assigned to bigraph vertex `i` (`X` first, then `Y`).
    assigned: Vec<Option<(usize, usize)>>,
    used: usize,
    budget: &'a Budget,
}

impl BigraphSearch<'_> {
    fn consistent(&self, item: usize, e: (usize, usize)) -> bool {
        let nx = self.b.nx();
        for (other, slot) in self.assigned.iter().enumerate() {
            let Some(f) = *slot else { continue };
            if f == e {
                return false;
            }
            let cross = (item < nx) != (other < nx);
            if cross {
                let (x, y) = if item < nx { (item, other - nx) } else { (other, item - nx) };
                if meets(e, f) != self.b.adjacent(x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, pos: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        self.budget.check()?;
        let item = self.order[pos];
        let used = self.used;
        let mut options = Vec::new();
        for a in 0..used {
            for c in a + 1..used {
                options.push(((a, c), used));
            }
        }
        for a in 0..used {
            options.push(((a, used), used + 1));
        }
        options.push(((used, used + 1), used + 2));
        for (e, next_used) in options {
            if !self.consistent(item, e) {
                continue;
            }
            self.assigned[item] = Some(e);
            self.used = next_used;
            if self.run(pos + 1)? {
                return Ok(true);
            }
            self.assigned[item] = None;
            self.used = used;
        }
        Ok(false)
    }
}

/// The gadget graph: `X` on `0..nx`, `Y` on `nx..nx+ny`, each completed to a
/// clique, the cross edges of `b`, and two extra vertices `x = nx + ny`
/// (joined to all of `X`) and `y = nx + ny + 1` (joined to all of `Y`).
pub fn reduce_line_bigraph_to_2cl(b: &LineBigraphInstance) -> Result<Graph> {
    let (nx, ny) = (b.nx(), b.ny());
    let x = nx + ny;
    let y = x + 1;
    let mut g = Graph::new(nx + ny + 2)?;
    for i in 0..nx {
        for j in i + 1..nx {
            g.add_edge(i, j)?;
        }
        g.add_edge(i, x)?;
    }
    for i in nx..nx + ny {
        for j in i + 1..nx + ny {
            g.add_edge(i, j)?;
        }
        g.add_edge(i, y)?;
    }
    for &(i, j) in b.edges() {
        g.add_edge(i, nx + j)?;
    }
    Ok(g)
}

/// `g` plus one isolated vertex.
pub fn lift_k1(g: &Graph) -> Result<Graph> {
    let mut out = Graph::new(g.n() + 1)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    Ok(out)
}
