//! Named graphs used as fixtures throughout the tests and by `fixtures emit`.

use crate::colored::EdgeColoredGraph;
use crate::graph::Graph;
use crate::io::parse_graph6;

/// The nine minimal non-line graphs, in catalog order (index 1 is the claw).
const BEINEKE_GRAPH6: [&str; 9] = ["CF", "Dxs", "ExBG", "ExFG", "Dz{", "EwNg", "ExNw", "EpNg", "Ehfw"];

/// Beineke graph number `index` (1-based).
pub fn beineke(index: usize) -> Graph {
    assert!((1..=9).contains(&index), "Beineke catalog index {index} outside 1..=9");
    parse_graph6(BEINEKE_GRAPH6[index - 1]).expect("catalog strings are valid graph6")
}

pub fn beineke_catalog() -> Vec<Graph> {
    (1..=9).map(beineke).collect()
}

pub fn k1_4() -> Graph {
    Graph::star(4).unwrap()
}

/// `K_n - e`, missing edge `{0, n-1}`.
pub fn k_minus_e(n: usize) -> Graph {
    Graph::complete_minus_edge(n).unwrap()
}

/// `F_i` for `i` in `1..=4`: triangles `{0,1,2}` and `{3,4,5}`, vertex 6
/// joined to all six, and `i - 1` rungs `2-5`, `1-4`, `0-3` added in that order.
pub fn forbidden_f(i: usize) -> Graph {
    assert!((1..=4).contains(&i), "F index {i} outside 1..=4");
    let mut g = Graph::new(7).unwrap();
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
        g.add_edge(u, v).unwrap();
    }
    for u in 0..6 {
        g.add_edge(6, u).unwrap();
    }
    for &(u, v) in [(2, 5), (1, 4), (0, 3)].iter().take(i - 1) {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// The forbidden induced subgraphs of proper 2-color-line graphs, with names.
pub fn proper_2_forbidden() -> Vec<(&'static str, Graph)> {
    vec![
        ("K5-e", k_minus_e(5)),
        ("F1", forbidden_f(1)),
        ("F2", forbidden_f(2)),
        ("F3", forbidden_f(3)),
        ("F4", forbidden_f(4)),
    ]
}

/// The 9-vertex graph with clique family `{1..6}, {2..7}, {1,8}, {1,9},
/// {7,8}, {7,9}`; label `i` is vertex `i - 1`.
pub fn fig2_graph() -> Graph {
    let cliques: [&[usize]; 6] = [&[1, 2, 3, 4, 5, 6], &[2, 3, 4, 5, 6, 7], &[1, 8], &[1, 9], &[7, 8], &[7, 9]];
    let mut g = Graph::new(9).unwrap();
    for c in cliques {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                g.add_edge(u - 1, v - 1).unwrap();
            }
        }
    }
    g
}

/// Root of [`fig2_graph`]: a 5-star at vertex 5 extended by the path
/// 5-6-7-8-9. Colors: 1 = `{2..7}` (the star plus edge 7-8), 2 = `{1, 8}`,
/// 3 = `{9}`.
pub fn fig2_root() -> EdgeColoredGraph {
    // (u, v, color) with the G-label of each edge in the comment
    EdgeColoredGraph::new(
        10,
        &[
            (5, 0, 1), // 6
            (5, 1, 1), // 5
            (5, 2, 1), // 4
            (5, 3, 1), // 3
            (5, 4, 1), // 2
            (7, 8, 1), // 7
            (5, 6, 2), // 1
            (8, 9, 2), // 8
            (6, 7, 3), // 9
        ],
    )
    .unwrap()
}

/// Two copies of a 9-vertex cubic-except-one gadget joined through a
/// degree-2 vertex; 19 vertices, 28 edges, maximum degree 3.
pub fn fig3_subcubic() -> Graph {
    // per gadget: outer 4-cycle 0-1-2-3, inner 4-cycle 4-5-6-7, hub 8
    let gadget = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (1, 5),
        (3, 7),
        (4, 8),
        (8, 6),
        (2, 8),
    ];
    let mut g = Graph::new(19).unwrap();
    for offset in [0, 9] {
        for &(u, v) in &gadget {
            g.add_edge(u + offset, v + offset).unwrap();
        }
    }
    g.add_edge(0, 18).unwrap();
    g.add_edge(18, 9).unwrap();
    g
}

/// Complement of `6K_2`.
pub fn co_6k2() -> Graph {
    crate::graph::complement(&Graph::matching_graph(6).unwrap())
}

pub fn k4() -> Graph {
    Graph::complete(4).unwrap()
}

pub fn k33() -> Graph {
    Graph::complete_bipartite(3, 3).unwrap()
}

/// Triangular prism: triangles `{0,1,2}`, `{3,4,5}` and the matching `i - (i+3)`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

pub fn bridgeless_cubic() -> Vec<(&'static str, Graph)> {
    vec![("K4", k4()), ("K3_3", k33()), ("prism", prism()), ("petersen", petersen())]
}

/// A catalog entry: most fixtures are plain graphs, `fig2-H` is colored.
#[derive(Clone, Debug)]
pub enum Fixture {
    Plain(Graph),
    Colored(EdgeColoredGraph),
}

pub const NAMES: &[&str] = &[
    "K1_4", "K5-e", "K6-e", "K7-e", "F1", "F2", "F3", "F4", "beineke1", "beineke2", "beineke3", "beineke4", "beineke5",
    "beineke6", "beineke7", "beineke8", "beineke9", "fig2-G", "fig2-H", "fig3-subcubic", "co-6K2", "K4", "K3_3",
    "prism", "petersen",
];

pub fn by_name(name: &str) -> Option<Fixture> {
    let plain = match name {
        "K1_4" => k1_4(),
        "K5-e" => k_minus_e(5),
        "K6-e" => k_minus_e(6),
        "K7-e" => k_minus_e(7),
        "F1" | "F2" | "F3" | "F4" => forbidden_f(name[1..].parse().unwrap()),
        "fig2-G" => fig2_graph(),
        "fig2-H" => return Some(Fixture::Colored(fig2_root())),
        "fig3-subcubic" => fig3_subcubic(),
        "co-6K2" => co_6k2(),
        "K4" => k4(),
        "K3_3" => k33(),
        "prism" => prism(),
        "petersen" => petersen(),
        _ => {
            let idx: usize = name.strip_prefix("beineke")?.parse().ok()?;
            if !(1..=9).contains(&idx) {
                return None;
            }
            beineke(idx)
        }
    };
    Some(Fixture::Plain(plain))
}
