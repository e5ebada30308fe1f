//! Recognition of (proper) color-line graphs.
//!
//! Every accepting path ends in [`assemble`], which checks the produced root
//! against the input pair by pair before handing it out.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::colored::{certificate_holds, validate_proper, EdgeColoredGraph};
use crate::error::{Error, Result};
use crate::fixtures::proper_2_forbidden;
use crate::graph::{
    complement, find_clique_at_least, find_induced_embedding, induced_subgraph, is_co_bipartite, maximum_matching,
    bridges, two_coloring, Graph, VertexSet,
};
use crate::line::{find_line_root, is_line_graph_bipartite_fast, root_from_krausz, root_of_paths_and_cycles, LineRoot};
use crate::partition::for_each_clique_partition;

/// A clique family with the two choice maps `e -> Q_e` (over edges in two
/// members) and `v -> Q_v` (over vertices in three members). Map values are
/// indices into `cliques`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrauszFamily {
    pub cliques: Vec<VertexSet>,
    #[serde(default, with = "pair_keyed")]
    pub edge_map: BTreeMap<(usize, usize), usize>,
    #[serde(default)]
    pub vertex_map: BTreeMap<usize, usize>,
}

/// JSON object keys must be strings, so the edge map travels as a list of
/// `[u, v, clique]` triples.
mod pair_keyed {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<(usize, usize), usize>, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<[usize; 3]> = map.iter().map(|(&(u, v), &q)| [u, v, q]).collect();
        triples.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), usize>, D::Error> {
        let triples = Vec::<[usize; 3]>::deserialize(d)?;
        Ok(triples.into_iter().map(|[u, v, q]| ((u.min(v), u.max(v)), q)).collect())
    }
}

impl KrauszFamily {
    /// Family with empty choice maps.
    pub fn new(cliques: Vec<VertexSet>) -> Self {
        KrauszFamily {
            cliques,
            ..Default::default()
        }
    }

    fn edge_members(&self, u: usize, v: usize) -> usize {
        self.cliques.iter().filter(|c| c.contains(u) && c.contains(v)).count()
    }

    fn vertex_members(&self, v: usize) -> usize {
        self.cliques.iter().filter(|c| c.contains(v)).count()
    }

    /// Edges of `g` lying in exactly two members.
    pub fn multi_edges(&self, g: &Graph) -> BTreeSet<(usize, usize)> {
        g.edges().into_iter().filter(|&(u, v)| self.edge_members(u, v) == 2).collect()
    }

    /// Vertices of `g` lying in exactly three members.
    pub fn multi_vertices(&self, g: &Graph) -> BTreeSet<usize> {
        (0..g.n()).filter(|&v| self.vertex_members(v) == 3).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KrauszClause {
    A,
    B1,
    B2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KrauszCheck {
    Holds,
    Fails(KrauszClause),
}

impl KrauszCheck {
    pub fn holds(self) -> bool {
        self == KrauszCheck::Holds
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Elem {
    Vertex(usize),
    Edge(usize, usize),
}

impl Elem {
    fn inside(self, q: VertexSet) -> bool {
        match self {
            Elem::Vertex(v) => q.contains(v),
            Elem::Edge(u, v) => q.contains(u) && q.contains(v),
        }
    }
}

fn validate_family(g: &Graph, fam: &KrauszFamily) -> Result<()> {
    for (i, &c) in fam.cliques.iter().enumerate() {
        if !c.is_subset(g.vertices()) {
            return Err(Error::invalid(format!("member {i} has vertices outside the graph")));
        }
        if !g.is_clique(c) {
            return Err(Error::invalid(format!("member {i} is not a clique")));
        }
    }
    Ok(())
}

fn check_choices(fam: &KrauszFamily, chosen: &[(Elem, usize)]) -> KrauszCheck {
    let q = |i: usize| fam.cliques[i];
    if chosen.iter().any(|&(x, i)| i >= fam.cliques.len() || !x.inside(q(i))) {
        return KrauszCheck::Fails(KrauszClause::B1);
    }
    for &(x, qx) in chosen {
        for &(_, qy) in chosen {
            let ok = if x.inside(q(qy)) {
                q(qx) == q(qy)
            } else {
                q(qx).is_disjoint(q(qy))
            };
            if !ok {
                return KrauszCheck::Fails(KrauszClause::B2);
            }
        }
    }
    KrauszCheck::Holds
}

/// Conditions for `g` to be a color-line graph: (a) membership bounds,
/// (b1) every chosen member contains its element, (b2) chosen members agree
/// or are disjoint. A map whose domain differs from the multi-membership
/// sets fails (b1).
pub fn check_krausz_color(g: &Graph, fam: &KrauszFamily) -> Result<KrauszCheck> {
    validate_family(g, fam)?;
    let vertices_ok = (0..g.n()).all(|v| fam.vertex_members(v) <= 3);
    let edges_ok = g.edges().into_iter().all(|(u, v)| (1..=2).contains(&fam.edge_members(u, v)));
    if !vertices_ok || !edges_ok {
        return Ok(KrauszCheck::Fails(KrauszClause::A));
    }
    let f = fam.multi_edges(g);
    let w = fam.multi_vertices(g);
    if !fam.edge_map.keys().copied().eq(f.iter().copied()) || !fam.vertex_map.keys().copied().eq(w.iter().copied()) {
        return Ok(KrauszCheck::Fails(KrauszClause::B1));
    }
    let chosen: Vec<(Elem, usize)> = fam
        .edge_map
        .iter()
        .map(|(&(u, v), &i)| (Elem::Edge(u, v), i))
        .chain(fam.vertex_map.iter().map(|(&v, &i)| (Elem::Vertex(v), i)))
        .collect();
    Ok(check_choices(fam, &chosen))
}

/// The proper variant: every edge in exactly one member, and (b) over the
/// vertex map only. The edge map is ignored.
pub fn check_krausz_proper(g: &Graph, fam: &KrauszFamily) -> Result<KrauszCheck> {
    validate_family(g, fam)?;
    let vertices_ok = (0..g.n()).all(|v| fam.vertex_members(v) <= 3);
    let edges_ok = g.edges().into_iter().all(|(u, v)| fam.edge_members(u, v) == 1);
    if !vertices_ok || !edges_ok {
        return Ok(KrauszCheck::Fails(KrauszClause::A));
    }
    if !fam.vertex_map.keys().copied().eq(fam.multi_vertices(g)) {
        return Ok(KrauszCheck::Fails(KrauszClause::B1));
    }
    let chosen: Vec<(Elem, usize)> = fam.vertex_map.iter().map(|(&v, &i)| (Elem::Vertex(v), i)).collect();
    Ok(check_choices(fam, &chosen))
}

/// A root `H` with `CL(H) = G` under `vertex_to_edge`. `classes[i]` holds
/// the vertices of `G` whose root edge has color `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorLineRoot {
    pub root: EdgeColoredGraph,
    pub vertex_to_edge: Vec<(usize, usize)>,
    pub classes: Vec<VertexSet>,
}

impl ColorLineRoot {
    pub fn k_used(&self) -> usize {
        self.root.k()
    }

    /// Colors of the root edges in the root's edge order.
    pub fn coloring(&self) -> &[usize] {
        self.root.colors()
    }
}

/// Turns a line root of a subgraph of `g` plus a per-vertex color label into
/// a colored root, and verifies it reproduces `g`.
fn assemble(g: &Graph, line_root: &LineRoot, label: &[usize]) -> Result<ColorLineRoot> {
    let colored: Vec<(usize, usize, usize)> =
        line_root.vertex_to_edge.iter().zip(label).map(|(&(a, b), &c)| (a, b, c)).collect();
    let root = EdgeColoredGraph::new(line_root.root.n(), &colored)?;
    if !certificate_holds(g, &root, &line_root.vertex_to_edge) {
        return Err(Error::internal("constructed root does not reproduce the input graph"));
    }
    let mut classes = vec![VertexSet::empty(); root.k()];
    for (v, &(a, b)) in line_root.vertex_to_edge.iter().enumerate() {
        classes[root.color_of(a, b).expect("edge of the root") - 1].insert(v);
    }
    Ok(ColorLineRoot {
        root,
        vertex_to_edge: line_root.vertex_to_edge.clone(),
        classes,
    })
}

/// Builds a colored root from a family passing [`check_krausz_color`]: edges
/// covered only by chosen members are dropped, the rest is rooted through its
/// Krausz partition, and each distinct chosen member becomes one color class.
/// Chosen members are numbered first, in family order; every other vertex
/// gets a fresh color.
pub fn build_root_from_krausz(g: &Graph, fam: &KrauszFamily) -> Result<ColorLineRoot> {
    if !check_krausz_color(g, fam)?.holds() {
        return Err(Error::invalid("family fails the Krausz conditions"));
    }
    let designated: BTreeSet<usize> = fam.edge_map.values().chain(fam.vertex_map.values()).copied().collect();
    // equal members may sit at different indices; keep one per vertex set
    let mut class_sets: Vec<VertexSet> = Vec::new();
    for &i in &designated {
        if !class_sets.contains(&fam.cliques[i]) {
            class_sets.push(fam.cliques[i]);
        }
    }
    let rest: Vec<VertexSet> = fam
        .cliques
        .iter()
        .copied()
        .filter(|c| !class_sets.contains(c))
        .collect();
    let mut reduced = g.clone();
    for (u, v) in g.edges() {
        if !rest.iter().any(|c| c.contains(u) && c.contains(v)) {
            reduced.remove_edge(u, v);
        }
    }
    let line_root = root_from_krausz(&reduced, &rest).map_err(|e| match e {
        Error::InvalidArgument(msg) => Error::internal(format!("reduced family is not a Krausz partition: {msg}")),
        other => other,
    })?;
    let mut label = vec![0; g.n()];
    let mut next = class_sets.len();
    for (v, slot) in label.iter_mut().enumerate() {
        *slot = match class_sets.iter().position(|c| c.contains(v)) {
            Some(i) => i + 1,
            None => {
                next += 1;
                next
            }
        };
    }
    assemble(g, &line_root, &label)
}

/// Vertex classes for the partition characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCliquePartition {
    pub classes: Vec<VertexSet>,
}

fn validate_partition(g: &Graph, classes: &[VertexSet]) -> Result<()> {
    let mut seen = VertexSet::empty();
    for (i, &c) in classes.iter().enumerate() {
        if c.is_empty() {
            return Err(Error::invalid(format!("class {i} is empty")));
        }
        if !c.is_subset(g.vertices()) {
            return Err(Error::invalid(format!("class {i} has vertices outside the graph")));
        }
        if !c.is_disjoint(seen) {
            return Err(Error::invalid(format!("class {i} overlaps an earlier class")));
        }
        if !g.is_clique(c) {
            return Err(Error::invalid(format!("class {i} is not a clique")));
        }
        seen = seen.union(c);
    }
    if seen != g.vertices() {
        return Err(Error::invalid("classes do not cover every vertex"));
    }
    Ok(())
}

/// `g` minus every within-class edge must be a line graph. On success the
/// root colors class `i` with color `i + 1`.
pub fn check_partition_characterization(g: &Graph, p: &VertexCliquePartition) -> Result<Option<ColorLineRoot>> {
    validate_partition(g, &p.classes)?;
    partition_root(g, &p.classes)
}

fn partition_root(g: &Graph, classes: &[VertexSet]) -> Result<Option<ColorLineRoot>> {
    let mut residual = g.clone();
    let mut label = vec![0; g.n()];
    for (i, &c) in classes.iter().enumerate() {
        residual.delete_edges_within(c);
        for v in c {
            label[v] = i + 1;
        }
    }
    let Some(line_root) = find_line_root(&residual)? else {
        return Ok(None);
    };
    let out = assemble(g, &line_root, &label)?;
    if !validate_proper(&out.root) {
        return Err(Error::internal("partition root is not properly colored"));
    }
    Ok(Some(out))
}

/// Why a proper recognizer said no.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", content = "witness", rename_all = "snake_case")]
pub enum Refusal {
    /// An odd cycle of the complement, as a vertex sequence.
    NotCoBipartite { odd_cycle: Vec<usize> },
    /// `embedding[i]` is the host vertex of pattern vertex `i`.
    ForbiddenSubgraph { name: String, embedding: Vec<usize> },
    ExhaustedPartitions { peeled: Vec<VertexSet>, partitions_tried: usize },
    CliqueBudgetExceeded { peeled: Vec<VertexSet>, residual: VertexSet, limit: usize },
}

impl Refusal {
    pub fn reason(&self) -> &'static str {
        match self {
            Refusal::NotCoBipartite { .. } => "not_co_bipartite",
            Refusal::ForbiddenSubgraph { .. } => "forbidden_subgraph",
            Refusal::ExhaustedPartitions { .. } => "exhausted_partitions",
            Refusal::CliqueBudgetExceeded { .. } => "clique_budget_exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperCertificate {
    Accept(ColorLineRoot),
    Reject(Refusal),
}

impl ProperCertificate {
    pub fn is_accept(&self) -> bool {
        matches!(self, ProperCertificate::Accept(_))
    }

    pub fn root(&self) -> Option<&ColorLineRoot> {
        match self {
            ProperCertificate::Accept(r) => Some(r),
            ProperCertificate::Reject(_) => None,
        }
    }

    pub fn refusal(&self) -> Option<&Refusal> {
        match self {
            ProperCertificate::Accept(_) => None,
            ProperCertificate::Reject(r) => Some(r),
        }
    }
}

/// Proper `k`-color-line recognition by clique peeling followed by an
/// exhaustive partition search over the small remainder. Certificates use at
/// most `k` colors.
pub fn recognize_proper_k(g: &Graph, k: usize) -> Result<ProperCertificate> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let mut peeled: Vec<VertexSet> = Vec::new();
    let mut rest = g.vertices();
    while peeled.len() < k {
        let s = peeled.len();
        let (sub, map) = induced_subgraph(g, rest)?;
        let Some(q) = find_clique_at_least(&sub, k - s + 4) else {
            break;
        };
        let q: VertexSet = q.iter().map(|i| map[i]).collect();
        log::debug!("peeled clique {q:?}");
        rest = rest.difference(q);
        peeled.push(q);
    }
    let free = k - peeled.len();
    let limit = free * (free + 3);
    if rest.len() > limit {
        return Ok(ProperCertificate::Reject(Refusal::CliqueBudgetExceeded {
            peeled,
            residual: rest,
            limit,
        }));
    }
    if rest.is_empty() {
        return Ok(match partition_root(g, &peeled)? {
            Some(root) => ProperCertificate::Accept(root),
            None => ProperCertificate::Reject(Refusal::ExhaustedPartitions {
                peeled,
                partitions_tried: 1,
            }),
        });
    }
    let (sub, map) = induced_subgraph(g, rest)?;
    let local: Vec<usize> = (0..sub.n()).collect();
    let mut tried = 0usize;
    let mut classes = peeled.clone();
    for blocks in 1..=free.min(rest.len()) {
        let found = for_each_clique_partition(&sub, &local, blocks, blocks, |part| {
            tried += 1;
            classes.truncate(peeled.len());
            classes.extend(part.iter().map(|b| b.iter().map(|i| map[i]).collect::<VertexSet>()));
            match partition_root(g, &classes) {
                Ok(Some(root)) => ControlFlow::Break(Ok(root)),
                Ok(None) => ControlFlow::Continue(()),
                Err(e) => ControlFlow::Break(Err(e)),
            }
        });
        if let Some(found) = found {
            return Ok(ProperCertificate::Accept(found?));
        }
    }
    Ok(ProperCertificate::Reject(Refusal::ExhaustedPartitions {
        peeled,
        partitions_tried: tried,
    }))
}

/// Proper 2-color-line recognition: co-bipartite test, universal vertices
/// `U`, a clique bipartition `(A, B)` of `G - U`, then the two candidate
/// class pairs `(A + U, B)` and `(A, B + U)`.
pub fn recognize_proper_2(g: &Graph) -> Result<ProperCertificate> {
    if let Err(odd_cycle) = two_coloring(&complement(g)) {
        return Ok(ProperCertificate::Reject(Refusal::NotCoBipartite { odd_cycle }));
    }
    let u = g.universal_vertices();
    let (sub, map) = induced_subgraph(g, g.vertices().difference(u))?;
    let (a, b) = is_co_bipartite(&sub).ok_or_else(|| Error::internal("induced subgraph lost co-bipartiteness"))?;
    let a: VertexSet = a.iter().map(|i| map[i]).collect();
    let b: VertexSet = b.iter().map(|i| map[i]).collect();
    let mut candidates = vec![(a.union(u), b)];
    if !u.is_empty() {
        candidates.push((a, b.union(u)));
    }
    for (c1, c2) in candidates {
        let mut residual = g.clone();
        residual.delete_edges_within(c1);
        residual.delete_edges_within(c2);
        if !is_line_graph_bipartite_fast(&residual)? {
            continue;
        }
        let line_root = root_of_paths_and_cycles(&residual)?;
        let label: Vec<usize> = (0..g.n()).map(|v| if c1.contains(v) { 1 } else { 2 }).collect();
        let out = assemble(g, &line_root, &label)?;
        if !validate_proper(&out.root) {
            return Err(Error::internal("2-class root is not properly colored"));
        }
        return Ok(ProperCertificate::Accept(out));
    }
    for (name, pattern) in proper_2_forbidden() {
        if let Some(embedding) = find_induced_embedding(&pattern, g) {
            return Ok(ProperCertificate::Reject(Refusal::ForbiddenSubgraph {
                name: name.to_string(),
                embedding,
            }));
        }
    }
    Err(Error::internal("co-bipartite reject without a forbidden induced subgraph"))
}

/// Proper root of a bridgeless cubic graph: a perfect matching gives the
/// two-vertex classes and the 2-regular remainder is a line graph.
pub fn cubic_proper_root(g: &Graph) -> Result<ProperCertificate> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::invalid(format!("vertex {v} has degree {}, not 3", g.degree(v))));
    }
    if let Some(&(u, v)) = bridges(g).first() {
        return Err(Error::invalid(format!("edge {u}-{v} is a bridge")));
    }
    let m = maximum_matching(g);
    if !m.is_perfect_in(g) {
        return Err(Error::internal("bridgeless cubic graph without a perfect matching"));
    }
    let classes: Vec<VertexSet> = m.edges.iter().map(|&(u, v)| [u, v].into_iter().collect()).collect();
    match check_partition_characterization(g, &VertexCliquePartition { classes })? {
        Some(root) => Ok(ProperCertificate::Accept(root)),
        None => Err(Error::internal("2-regular remainder is not a line graph")),
    }
}
