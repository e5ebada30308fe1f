//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices with bitset
//! adjacency, plus the small-graph subroutines the recognizers are built on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the number of vertices of a [`Graph`]; one `u64` word per row.
pub const MAX_VERTICES: usize = 64;

/// Largest graph accepted by [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 16;

/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const ENUMERATION_LIMIT: usize = 7;

/// A set of vertices, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn prefix(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// Simple undirected graph on vertices `0..n`.
///
/// Vertex order is part of the identity of a graph: every deterministic
/// result in this crate is relative to the input labeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capability {
                what: "graph vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op. Self-loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let all = self.vertices();
        (0..self.n)
            .filter(|&v| all.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
            .collect()
    }

    /// Removes every edge with both ends in `s`.
    pub fn delete_edges_within(&mut self, s: VertexSet) {
        for v in s {
            self.adj[v] &= !s.bits();
        }
    }

    /// Disjoint union, `other` relabeled to `self.n()..`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Applies `perm` (old vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::prefix(n).difference(VertexSet::singleton(v)).bits();
        }
        Ok(g)
    }

    /// `K_n` minus the edge `{0, n-1}`.
    pub fn complete_minus_edge(n: usize) -> Result<Graph> {
        let mut g = Graph::complete(n)?;
        if n >= 2 {
            g.remove_edge(0, n - 1);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid("a cycle needs at least 3 vertices"));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// `K_{1,q}` with center 0.
    pub fn star(q: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=q).map(|v| (0, v)).collect();
        Graph::from_edges(q + 1, &edges)
    }

    /// `K_{p,q}` with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
        let mut g = Graph::new(p + q)?;
        for u in 0..p {
            for v in p..p + q {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// `t` disjoint copies of `K_2`.
    pub fn matching_graph(t: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * t, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Subgraph induced by `s`, relabeled to `0..|s|` in increasing order.
/// Also returns the map from new to original vertex indices.
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
    if let Some(v) = s.difference(g.vertices()).first() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let map = s.to_vec();
    let mut h = Graph::new(map.len())?;
    for (i, &u) in map.iter().enumerate() {
        for (j, &v) in map.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j)?;
            }
        }
    }
    Ok((h, map))
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertices();
    let adj = (0..g.n())
        .map(|v| all.difference(g.neighbors(v)).difference(VertexSet::singleton(v)).bits())
        .collect();
    Graph { n: g.n(), adj }
}

/// Proper 2-coloring of `g`, or an odd cycle as witness.
///
/// Components are explored from their smallest vertex, which lands on the
/// first side.
pub fn two_coloring(g: &Graph) -> std::result::Result<(VertexSet, VertexSet), Vec<usize>> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(s) if s == side[u].unwrap() => {
                        return Err(odd_cycle(u, w, &parent, &depth));
                    }
                    _ => {}
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let b = (0..n).filter(|&v| side[v] == Some(true)).collect();
    Ok((a, b))
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (u, w);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// A partition of `V(g)` into two cliques, if one exists.
pub fn is_co_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    two_coloring(&complement(g)).ok()
}

/// Connected components ordered by their smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::empty();
    let mut out = Vec::new();
    for root in 0..g.n() {
        if seen.contains(root) {
            continue;
        }
        let mut comp = VertexSet::singleton(root);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier {
                next = next.union(g.neighbors(v));
            }
            frontier = next.difference(comp);
            comp = comp.union(next);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Vertices of `comp` in breadth-first order from its smallest member.
pub fn bfs_order(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let Some(root) = comp.first() else {
        return Vec::new();
    };
    let mut order = vec![root];
    let mut seen = VertexSet::singleton(root);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for w in g.neighbors(u).intersection(comp).difference(seen) {
            seen.insert(w);
            order.push(w);
        }
        i += 1;
    }
    order
}

/// Edges whose removal disconnects their endpoints.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let mut h = g.clone();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        h.remove_edge(u, v);
        let reach = connected_components(&h).into_iter().find(|c| c.contains(u)).unwrap();
        if !reach.contains(v) {
            out.push((u, v));
        }
        h.add_edge(u, v).expect("edge endpoints are valid");
    }
    out
}

/// A maximal clique containing the lexicographically least `q`-clique, or
/// `None` when `g` has no clique of size `q`.
///
/// The seed is extended greedily by the smallest admissible vertex.
pub fn find_clique_at_least(g: &Graph, q: usize) -> Option<VertexSet> {
    let need = q.saturating_sub(1);
    let cand: VertexSet = (0..g.n()).filter(|&v| g.degree(v) >= need).collect();
    let seed = lex_least_clique(g, VertexSet::empty(), cand, q)?;
    let mut clique = seed;
    for v in 0..g.n() {
        if !clique.contains(v) && clique.is_subset(g.neighbors(v)) {
            clique.insert(v);
        }
    }
    Some(clique)
}

fn lex_least_clique(g: &Graph, clique: VertexSet, cand: VertexSet, need: usize) -> Option<VertexSet> {
    if need == 0 {
        return Some(clique);
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if rest.len() < need {
            return None;
        }
        rest.remove(v);
        let next = rest.intersection(g.neighbors(v));
        if next.len() + 1 >= need {
            let mut c = clique;
            c.insert(v);
            if let Some(found) = lex_least_clique(g, c, next, need - 1) {
                return Some(found);
            }
        }
    }
    None
}

/// A set of pairwise disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True iff every pair is an edge of `g` and no vertex is covered twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::empty();
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || covered.contains(u) || covered.contains(v) {
                return false;
            }
            covered.insert(u);
            covered.insert(v);
        }
        true
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.is_valid_in(g) && 2 * self.len() == g.n()
    }
}

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
pub fn maximum_matching(g: &Graph) -> Matching {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut mate = vec![NONE; n];

    // Greedy warm start.
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }

    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];

    let lca = |mut a: usize, mut b: usize, base: &[usize], mate: &[usize], parent: &[usize]| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        parent.fill(NONE);
        used.fill(false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut end = NONE;
        'search: while let Some(v) = queue.pop_front() {
            for to in g.neighbors(v) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    let cur = lca(v, to, &base, &mate, &parent);
                    blossom.fill(false);
                    for (start, child) in [(v, to), (to, v)] {
                        let (mut x, mut c) = (start, child);
                        while base[x] != cur {
                            blossom[base[x]] = true;
                            blossom[base[mate[x]]] = true;
                            parent[x] = c;
                            c = mate[x];
                            x = parent[mate[x]];
                        }
                    }
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        end = to;
                        break 'search;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut v = end;
        while v != NONE {
            let pv = parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

    let edges = (0..n).filter(|&u| mate[u] != NONE && u < mate[u]).map(|u| (u, mate[u])).collect();
    Matching { edges }
}

/// An isomorphism `g1 -> g2` (as `phi[v1] = v2`), or `None`.
///
/// Backtracking over candidates filtered by degree and neighbor-degree
/// signature. Limited to [`ISOMORPHISM_LIMIT`] vertices.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g1.n().max(g2.n());
    if n > ISOMORPHISM_LIMIT {
        return Err(Error::Capability {
            what: "isomorphism test vertex count",
            limit: ISOMORPHISM_LIMIT,
            got: n,
        });
    }
    if g1.n() != g2.n() || g1.m() != g2.m() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(None);
    }
    let sig1 = signatures(g1);
    let sig2 = signatures(g2);
    let order = search_order(g1);
    let candidates: Vec<VertexSet> = (0..g1.n())
        .map(|u| (0..g2.n()).filter(|&v| sig1[u] == sig2[v]).collect())
        .collect();
    let mut phi = vec![usize::MAX; g1.n()];
    let found = extend_map(g1, g2, &order, 0, &candidates, &mut phi, VertexSet::empty(), true);
    Ok(found.then_some(phi))
}

/// An embedding of `pattern` into `host` as an induced subgraph.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    let order = search_order(pattern);
    let candidates: Vec<VertexSet> = (0..pattern.n())
        .map(|u| (0..host.n()).filter(|&v| host.degree(v) >= pattern.degree(u)).collect())
        .collect();
    let mut phi = vec![usize::MAX; pattern.n()];
    extend_map(pattern, host, &order, 0, &candidates, &mut phi, VertexSet::empty(), false)
        .then_some(phi)
}

fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Connected-first order: each next vertex has the most already-ordered neighbors.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut placed = VertexSet::empty();
    while order.len() < g.n() {
        let v = (0..g.n())
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (g.neighbors(v).intersection(placed).len(), g.degree(v), usize::MAX - v))
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend_map(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    depth: usize,
    candidates: &[VertexSet],
    phi: &mut [usize],
    used: VertexSet,
    exact: bool,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let mapped_nbrs: VertexSet = order[..depth]
        .iter()
        .filter(|&&w| a.has_edge(u, w))
        .map(|&w| phi[w])
        .collect();
    for v in candidates[u].difference(used) {
        // adjacency to the image of the placed prefix must match exactly
        if b.neighbors(v).intersection(used) != mapped_nbrs {
            continue;
        }
        if exact && a.degree(u) != b.degree(v) {
            continue;
        }
        phi[u] = v;
        let mut next = used;
        next.insert(v);
        if extend_map(a, b, order, depth + 1, candidates, phi, next, exact) {
            return true;
        }
    }
    phi[u] = usize::MAX;
    false
}

/// Pairs `(u, v)`, `u < v`, in the order used for edge masks.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The labeled graph on `n` vertices whose edge set is selected by `mask`
/// over [`pair_order`].
pub fn graph_from_mask(n: usize, mask: u64) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    let pairs = pair_order(n);
    if pairs.len() > 64 {
        return Err(Error::Capability {
            what: "edge-mask vertex count",
            limit: 11,
            got: n,
        });
    }
    for (i, (u, v)) in pairs.into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices, in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::Capability {
            what: "labeled graph enumeration vertex count",
            limit: ENUMERATION_LIMIT,
            got: n,
        });
    }
    let pairs = pair_order(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Graph { n, adj: vec![0; n] };
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        g
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn c(n: usize) -> Graph {
        Graph::cycle(n).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn induced_subgraph_examples() {
        let (h, map) = induced_subgraph(&k(4), set(&[0, 1, 2])).unwrap();
        assert_eq!(h, k(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (h, _) = induced_subgraph(&c(5), set(&[0, 1, 2])).unwrap();
        assert_eq!(h, Graph::path(3).unwrap());

        // K5-e misses {0,4}: {0,1,4} induces the path 0-1-4
        let (h, _) = induced_subgraph(&Graph::complete_minus_edge(5).unwrap(), set(&[0, 1, 4])).unwrap();
        assert_eq!(h.m(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));

        assert!(matches!(
            induced_subgraph(&k(3), set(&[0, 5])),
            Err(Error::VertexOutOfRange { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&k(4)), Graph::new(4).unwrap());
        let c5 = c(5);
        assert!(are_isomorphic(&complement(&c5), &c5).unwrap().is_some());
        let two_k2 = Graph::matching_graph(2).unwrap();
        let co = complement(&two_k2);
        assert_eq!(co.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(are_isomorphic(&co, &c(4)).unwrap().is_some());
    }

    #[test]
    fn co_bipartite_examples() {
        let (a, b) = is_co_bipartite(&Graph::complete_minus_edge(5).unwrap()).unwrap();
        assert!(a.contains(0) && b.contains(4));
        assert!(is_co_bipartite(&c(5)).is_none());
        let (a, b) = is_co_bipartite(&k(3)).unwrap();
        assert_eq!((a, b), (set(&[0, 1, 2]), VertexSet::empty()));
        let (a, b) = is_co_bipartite(&Graph::new(0).unwrap()).unwrap();
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        let g = c(7);
        let cyc = two_coloring(&g).unwrap_err();
        assert_eq!(cyc.len() % 2, 1);
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn components_examples() {
        let comps = connected_components(&Graph::matching_graph(2).unwrap());
        assert_eq!(comps, vec![set(&[0, 1]), set(&[2, 3])]);
        assert_eq!(connected_components(&Graph::new(1).unwrap()), vec![set(&[0])]);
        assert_eq!(connected_components(&Graph::path(4).unwrap()).len(), 1);
    }

    #[test]
    fn clique_search_examples() {
        let k7e = Graph::complete_minus_edge(7).unwrap();
        assert_eq!(find_clique_at_least(&k7e, 6), Some(set(&[0, 1, 2, 3, 4, 5])));
        assert_eq!(find_clique_at_least(&c(5), 3), None);
        assert_eq!(find_clique_at_least(&k(4), 2), Some(set(&[0, 1, 2, 3])));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(maximum_matching(&k(4)).len(), 2);
        assert_eq!(maximum_matching(&Graph::star(3).unwrap()).len(), 1);
        let petersen = crate::fixtures::petersen();
        let m = maximum_matching(&petersen);
        assert_eq!(m.len(), 5);
        assert!(m.is_perfect_in(&petersen));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&c(4), &Graph::matching_graph(2).unwrap()).unwrap().is_none());
        let claw_line = crate::colored::line_graph(&Graph::star(3).unwrap()).unwrap().cl;
        assert!(are_isomorphic(&claw_line, &k(3)).unwrap().is_some());
        let mut octa = k(6);
        for i in 0..3 {
            octa.remove_edge(2 * i, 2 * i + 1);
        }
        let lk4 = crate::colored::line_graph(&k(4)).unwrap().cl;
        let phi = are_isomorphic(&octa, &lk4).unwrap().unwrap();
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(octa.has_edge(u, v), lk4.has_edge(phi[u], phi[v]));
            }
        }
        assert!(matches!(
            are_isomorphic(&Graph::new(17).unwrap(), &Graph::new(17).unwrap()),
            Err(Error::Capability { .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn bridges_of_path_and_cycle() {
        assert_eq!(bridges(&Graph::path(3).unwrap()).len(), 2);
        assert!(bridges(&c(5)).is_empty());
    }

    #[test]
    fn graph_rejects_self_loops_and_oversize() {
        assert!(Graph::new(65).is_err());
        let mut g = Graph::new(2).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 2).is_err());
    }
}
