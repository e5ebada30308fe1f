#![allow(dead_code)]

use colorline::colored::certificate_holds;
use colorline::fixtures::proper_2_forbidden;
use colorline::graph::{find_induced_embedding, graph_from_mask, is_co_bipartite, Graph};
use colorline::oracle::LineBigraphInstance;
use colorline::recognize::ColorLineRoot;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every labeled graph on `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask).unwrap())
}

pub fn masks(n: usize) -> std::ops::Range<u64> {
    0..1u64 << (n * n.saturating_sub(1) / 2)
}

/// `count` distinct edge masks on `n` vertices drawn from a fixed seed.
pub fn sampled_masks(n: usize, count: usize, seed: u64) -> Vec<u64> {
    let pairs = n * (n - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    while seen.len() < count {
        seen.insert(rng.gen_range(0..1u64 << pairs));
    }
    seen.into_iter().collect()
}

/// Co-bipartite and free of the five forbidden induced subgraphs, by direct search.
pub fn proper_2_predicate(g: &Graph) -> bool {
    is_co_bipartite(g).is_some() && proper_2_forbidden().iter().all(|(_, f)| find_induced_embedding(f, g).is_none())
}

pub fn replays(g: &Graph, root: &ColorLineRoot) -> bool {
    certificate_holds(g, &root.root, &root.vertex_to_edge)
}

/// Every bipartite instance with `|X| + |Y| <= max_total`, sides possibly empty.
pub fn all_bigraphs(max_total: usize) -> Vec<LineBigraphInstance> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for nx in 0..=total {
            let ny = total - nx;
            let cells: Vec<(usize, usize)> = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
            for mask in 0..1u64 << cells.len() {
                let edges: Vec<(usize, usize)> =
                    cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect();
                out.push(LineBigraphInstance::new(nx, ny, &edges).unwrap());
            }
        }
    }
    out
}
