mod common;

use colorline::colored::{
    color_line_graph, line_graph, max_independent_set, max_rainbow_matching, validate_proper, EdgeColoredGraph,
};
use colorline::graph::{are_isomorphic, induced_subgraph, pair_order, Graph, VertexSet};
use proptest::prelude::*;

/// All colorings of `m` edges with at most `k` colors, as restricted growth strings.
fn colorings(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let top = cur.iter().copied().max().unwrap_or(0);
        for c in 1..=(top + 1).min(k) {
            cur.push(c);
            go(m, k, cur, out);
            cur.pop();
        }
    }
    go(m, k, &mut cur, &mut out);
    out
}

fn colored(g: &Graph, colors: &[usize]) -> EdgeColoredGraph {
    let triples: Vec<_> = g.edges().into_iter().zip(colors).map(|((u, v), &c)| (u, v, c)).collect();
    EdgeColoredGraph::new(g.n(), &triples).unwrap()
}

fn check_facts(h: &EdgeColoredGraph) {
    let r = color_line_graph(h).unwrap();
    let l = line_graph(h.graph()).unwrap();
    assert_eq!(r.cl.n(), l.cl.n());
    assert_eq!(r.l_edges, l.cl.edges(), "L-edges are exactly L(H)");
    for &(a, b) in r.l_edges.iter().chain(&r.c_edges) {
        assert!(r.cl.has_edge(a, b));
    }
    assert_eq!(r.l_edges.len() + r.c_edges.len() - overlap(&r.l_edges, &r.c_edges), r.cl.m());
    if validate_proper(h) {
        assert_eq!(overlap(&r.l_edges, &r.c_edges), 0);
    }
    let rainbow = max_rainbow_matching(h).unwrap();
    let mis = max_independent_set(&r.cl).unwrap();
    assert_eq!(rainbow.len(), mis.len(), "{h:?}");
    assert!(rainbow.is_valid_in(h.graph()));
    assert!(r.cl.is_independent(mis));
}

fn overlap(a: &[(usize, usize)], b: &[(usize, usize)]) -> usize {
    a.iter().filter(|e| b.contains(e)).count()
}

#[test]
fn facts_hold_for_every_coloring_of_small_roots() {
    for n in 0..=4 {
        for g in common::all_graphs(n) {
            for cs in colorings(g.m(), 3) {
                check_facts(&colored(&g, &cs));
            }
        }
    }
}

#[test]
fn facts_hold_on_eight_edge_roots() {
    // two disjoint paths and a star, 8 edges in total, every 3-coloring
    let g = Graph::from_edges(10, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (7, 9), (8, 9)]).unwrap();
    for cs in colorings(8, 3) {
        check_facts(&colored(&g, &cs));
    }
}

fn arb_colored() -> impl Strategy<Value = EdgeColoredGraph> {
    (2usize..=8).prop_flat_map(|n| {
        let pairs = pair_order(n);
        proptest::collection::vec((0..pairs.len(), 1usize..=3), 0..=8).prop_map(move |picks| {
            let mut triples = Vec::new();
            let mut used = std::collections::BTreeSet::new();
            for (i, c) in picks {
                if used.insert(i) {
                    let (u, v) = pairs[i];
                    triples.push((u, v, c));
                }
            }
            EdgeColoredGraph::new(n, &triples).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_roots_satisfy_the_facts(h in arb_colored()) {
        check_facts(&h);
    }

    #[test]
    fn deleting_root_edges_gives_the_induced_subgraph(h in arb_colored(), keep in any::<u64>()) {
        let edges = h.colored_edges();
        let kept: Vec<_> = edges.iter().enumerate().filter(|(i, _)| keep >> i & 1 == 1).map(|(_, &e)| e).collect();
        let sub = EdgeColoredGraph::new(h.graph().n(), &kept).unwrap();
        let full = color_line_graph(&h).unwrap().cl;
        let idx: VertexSet = kept.iter().map(|&(u, v, _)| h.edge_index(u, v).unwrap()).collect();
        let (induced, _) = induced_subgraph(&full, idx).unwrap();
        let direct = color_line_graph(&sub).unwrap().cl;
        prop_assert!(are_isomorphic(&direct, &induced).unwrap().is_some());
    }

    #[test]
    fn disjoint_union_with_disjoint_colors(a in arb_colored(), b in arb_colored()) {
        prop_assume!(a.graph().n() + b.graph().n() <= 64);
        let shift = a.graph().n();
        let mut triples = a.colored_edges();
        triples.extend(b.colored_edges().into_iter().map(|(u, v, c)| (u + shift, v + shift, c + 100)));
        let joined = EdgeColoredGraph::new(shift + b.graph().n(), &triples).unwrap();
        let expect = color_line_graph(&a).unwrap().cl.disjoint_union(&color_line_graph(&b).unwrap().cl).unwrap();
        prop_assert!(are_isomorphic(&color_line_graph(&joined).unwrap().cl, &expect).unwrap().is_some());
    }
}
