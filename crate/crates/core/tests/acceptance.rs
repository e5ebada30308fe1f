//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or overruns its time limit.

mod common;

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use colorline::cli::{run, Cli, EXIT_ACCEPT};
use colorline::colored::line_graph;
use colorline::fixtures::{self, forbidden_f, k1_4, k_minus_e};
use colorline::graph::{are_isomorphic, find_induced_embedding, graph_from_mask, induced_subgraph, Graph};
use colorline::io::{parse_edge_list, write_colored_edge_list};
use colorline::line::{beineke_violation, is_krausz_partition, krausz_from_root, recognize_line_graph, LineCertificate};
use colorline::oracle::{
    lift_k1, oracle_k_color_line, oracle_line_bigraph, oracle_proper_k_color_line, reduce_line_bigraph_to_2cl,
};
use colorline::partition::for_each_clique_partition;
use colorline::recognize::{cubic_proper_root, recognize_proper_2, recognize_proper_k, ProperCertificate, Refusal};
use clap::Parser;
use rayon::prelude::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mismatches<T: Send + Sync>(items: Vec<T>, bad: impl Fn(&T) -> Option<String> + Sync) -> Vec<String> {
    let mut found: Vec<String> = items.par_iter().filter_map(|t| bad(t)).collect();
    found.truncate(5);
    found
}

fn cl_of_example_root() -> Check {
    let cli = Cli::try_parse_from(["colorline", "cl"]).map_err(|e| e.to_string())?;
    let input = write_colored_edge_list(&fixtures::fig2_root());
    let (out, err) = run(&cli, &mut input.as_bytes());
    ensure(out.code == EXIT_ACCEPT, || format!("exit {} ({err:?})", out.code))?;
    let cl = parse_edge_list(&out.stdout).map_err(|e| e.to_string())?;
    let target = fixtures::fig2_graph();
    match are_isomorphic(&cl, &target).map_err(|e| e.to_string())? {
        Some(_) => Ok(format!("{} vertices, {} edges, isomorphic", cl.n(), cl.m())),
        None => Err(format!("output ({}, {}) not isomorphic to the target", cl.n(), cl.m())),
    }
}

fn k7_minus_e() -> Check {
    let g = k_minus_e(7);
    let vertices: Vec<usize> = (0..7).collect();
    let mut scanned = 0;
    for_each_clique_partition::<()>(&g, &vertices, 1, 7, |_| {
        scanned += 1;
        ControlFlow::Continue(())
    });
    ensure(scanned <= 877, || format!("{scanned} clique partitions"))?;
    match oracle_proper_k_color_line(&g, 7).map_err(|e| e.to_string())? {
        None => Ok(format!("no valid partition among {scanned} clique partitions")),
        Some(r) => Err(format!("oracle found a root with {} colors", r.k_used())),
    }
}

fn proper_2_minimal_forbidden() -> Check {
    let mut accepted = 0;
    for (name, g) in fixtures::proper_2_forbidden() {
        match recognize_proper_2(&g).map_err(|e| e.to_string())? {
            ProperCertificate::Reject(Refusal::ForbiddenSubgraph { name: found, embedding }) => {
                ensure(found == name, || format!("{name}: witness names {found}"))?;
                let mut sorted = embedding.clone();
                sorted.sort_unstable();
                ensure(sorted == (0..g.n()).collect::<Vec<_>>(), || format!("{name}: witness {embedding:?}"))?;
            }
            other => return Err(format!("{name}: {other:?}")),
        }
        for v in 0..g.n() {
            let (sub, _) = induced_subgraph(&g, g.vertices().difference([v].into_iter().collect())).unwrap();
            let cert = recognize_proper_2(&sub).map_err(|e| e.to_string())?;
            let root = cert.root().ok_or_else(|| format!("{name} - {v} rejected"))?;
            ensure(common::replays(&sub, root), || format!("{name} - {v}: certificate does not replay"))?;
            accepted += 1;
        }
    }
    Ok(format!("5 rejected with self-witness, {accepted} vertex-deleted subgraphs accepted"))
}

fn proper_2_sweep() -> Check {
    let check = |g: &Graph| -> Option<String> {
        match recognize_proper_2(g) {
            Ok(cert) => {
                if cert.is_accept() != common::proper_2_predicate(g) {
                    return Some(format!("{g:?}: recognizer {}", cert.is_accept()));
                }
                if let Some(root) = cert.root() {
                    if !common::replays(g, root) || root.k_used() > 2 {
                        return Some(format!("{g:?}: bad certificate"));
                    }
                }
                None
            }
            Err(e) => Some(format!("{g:?}: {e}")),
        }
    };
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 0..=6 {
        let masks: Vec<u64> = common::masks(n).collect();
        count += masks.len();
        bad.extend(mismatches(masks, |&m| check(&graph_from_mask(n, m).unwrap())));
    }
    let sample = common::sampled_masks(7, 10_000, 0x5eed_0007);
    count += sample.len();
    let sample_accepted = sample
        .par_iter()
        .filter(|&&m| recognize_proper_2(&graph_from_mask(7, m).unwrap()).is_ok_and(|c| c.is_accept()))
        .count();
    bad.extend(mismatches(sample, |&m| check(&graph_from_mask(7, m).unwrap())));
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{count} graphs ({sample_accepted} of the 7-vertex sample accepted), zero discrepancies"))
}

fn peeling_vs_oracle() -> Check {
    let mut count = 0;
    let accepted = std::sync::atomic::AtomicUsize::new(0);
    let mut bad = Vec::new();
    for n in 0..=5 {
        let masks: Vec<u64> = common::masks(n).collect();
        count += masks.len() * 3;
        bad.extend(mismatches(masks, |&m| {
            let g = graph_from_mask(n, m).unwrap();
            for k in 1..=3 {
                let fast = match recognize_proper_k(&g, k) {
                    Ok(c) => c,
                    Err(e) => return Some(format!("{g:?} k={k}: {e}")),
                };
                let slow = match oracle_proper_k_color_line(&g, k) {
                    Ok(r) => r,
                    Err(e) => return Some(format!("{g:?} k={k}: {e}")),
                };
                if fast.is_accept() != slow.is_some() {
                    return Some(format!("{g:?} k={k}: recognizer {} oracle {}", fast.is_accept(), slow.is_some()));
                }
                if let Some(root) = fast.root() {
                    accepted.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if !common::replays(&g, root) || !root.root.is_proper() || root.k_used() > k {
                        return Some(format!("{g:?} k={k}: bad certificate"));
                    }
                }
            }
            None
        }));
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{count} (graph, k) pairs ({} accepted), zero discrepancies", accepted.into_inner()))
}

fn bigraph_gadget() -> Check {
    let instances = common::all_bigraphs(5);
    let count = instances.len();
    let realizable = instances.par_iter().filter(|b| oracle_line_bigraph(b).is_ok_and(|r| r.is_some())).count();
    let bad = mismatches(instances, |b| {
        let realized = match oracle_line_bigraph(b) {
            Ok(r) => r,
            Err(e) => return Some(format!("{b:?}: {e}")),
        };
        let gadget = reduce_line_bigraph_to_2cl(b).unwrap();
        let colored = match oracle_k_color_line(&gadget, 2) {
            Ok(r) => r,
            Err(e) => return Some(format!("{b:?}: {e}")),
        };
        if let Some(r) = &realized {
            if !r.realizes(b) {
                return Some(format!("{b:?}: realization fails its check"));
            }
        }
        (realized.is_some() != colored.is_some())
            .then(|| format!("{b:?}: bigraph {} gadget {}", realized.is_some(), colored.is_some()))
    });
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{count} instances ({realizable} realizable), zero discrepancies"))
}

fn isolated_vertex_lift() -> Check {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 0..=5 {
        let masks: Vec<u64> = common::masks(n).collect();
        count += masks.len() * 4;
        bad.extend(mismatches(masks, |&m| {
            let g = graph_from_mask(n, m).unwrap();
            let lifted = lift_k1(&g).unwrap();
            for k in 1..=2 {
                let a = oracle_k_color_line(&g, k).unwrap().is_some();
                let b = oracle_k_color_line(&lifted, k + 1).unwrap().is_some();
                let c = oracle_proper_k_color_line(&g, k).unwrap().is_some();
                let d = oracle_proper_k_color_line(&lifted, k + 1).unwrap().is_some();
                if a != b || c != d {
                    return Some(format!("{g:?} k={k}: any {a}/{b} proper {c}/{d}"));
                }
            }
            None
        }));
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{count} (graph, k, variant) checks, zero discrepancies"))
}

fn line_characterizations() -> Check {
    let mut count = 0;
    let mut lines = 0;
    let mut bad = Vec::new();
    for n in 0..=6 {
        let masks: Vec<u64> = common::masks(n).collect();
        count += masks.len();
        lines += masks
            .par_iter()
            .filter(|&&m| {
                let g = graph_from_mask(n, m).unwrap();
                matches!(recognize_line_graph(&g), Ok(LineCertificate::Root(_)))
            })
            .count();
        bad.extend(mismatches(masks, |&m| {
            let g = graph_from_mask(n, m).unwrap();
            let violation = beineke_violation(&g);
            match recognize_line_graph(&g) {
                Ok(LineCertificate::Root(root)) => {
                    if violation.is_some() {
                        return Some(format!("{g:?}: root found but a forbidden graph embeds"));
                    }
                    let l = line_graph(&root.root).unwrap();
                    let mapped: Vec<(usize, usize)> = root.vertex_to_edge.clone();
                    let exact = (0..g.n()).all(|u| {
                        (u + 1..g.n()).all(|v| {
                            let (a, b) = mapped[u];
                            let (c, d) = mapped[v];
                            g.has_edge(u, v) == (a == c || a == d || b == c || b == d)
                        })
                    });
                    if !exact || are_isomorphic(&l.cl, &g).unwrap().is_none() {
                        return Some(format!("{g:?}: root does not reproduce the input"));
                    }
                    if !is_krausz_partition(&g, &krausz_from_root(&root).cliques) {
                        return Some(format!("{g:?}: Krausz conditions fail"));
                    }
                    None
                }
                Ok(LineCertificate::Refusal(v)) => {
                    let pattern = fixtures::beineke(v.catalog_index);
                    let sub: colorline::VertexSet = v.embedding.iter().copied().collect();
                    let (induced, map) = induced_subgraph(&g, sub).unwrap();
                    let relabel: Vec<usize> = v.embedding.iter().map(|x| map.iter().position(|y| y == x).unwrap()).collect();
                    let ok = (0..pattern.n()).all(|a| {
                        (a + 1..pattern.n()).all(|b| pattern.has_edge(a, b) == induced.has_edge(relabel[a], relabel[b]))
                    });
                    (violation.is_none() || !ok).then(|| format!("{g:?}: refusal not backed by an induced copy"))
                }
                Err(e) => Some(format!("{g:?}: {e}")),
            }
        }));
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{count} graphs ({lines} line graphs), zero discrepancies"))
}

fn cubic_roots() -> Check {
    let mut parts = Vec::new();
    for (name, g) in fixtures::bridgeless_cubic() {
        let start = Instant::now();
        let cert = cubic_proper_root(&g).map_err(|e| format!("{name}: {e}"))?;
        let root = cert.root().ok_or_else(|| format!("{name}: rejected"))?;
        let cl = colorline::color_line_graph(&root.root).unwrap().cl;
        ensure(common::replays(&g, root) && root.root.is_proper(), || format!("{name}: certificate fails"))?;
        ensure(are_isomorphic(&cl, &g).unwrap().is_some(), || format!("{name}: CL(root) not isomorphic"))?;
        let t = start.elapsed();
        ensure(t < Duration::from_secs(1), || format!("{name}: {t:?}"))?;
        parts.push(format!("{name} {:.3}s", t.as_secs_f64()));
    }
    Ok(parts.join(", "))
}

fn small_examples() -> Check {
    for k in 1..=4 {
        ensure(oracle_k_color_line(&k1_4(), k).unwrap().is_none(), || format!("K1_4 accepted at k={k}"))?;
    }
    for (name, g) in [("K5-e", k_minus_e(5)), ("F1", forbidden_f(1)), ("F2", forbidden_f(2))] {
        let three = oracle_proper_k_color_line(&g, 3).unwrap();
        let root = three.ok_or_else(|| format!("{name} rejected at k=3"))?;
        ensure(common::replays(&g, &root), || format!("{name}: certificate fails"))?;
        ensure(oracle_proper_k_color_line(&g, 2).unwrap().is_none(), || format!("{name} accepted at k=2"))?;
    }
    ensure(find_induced_embedding(&k1_4(), &k1_4()).is_some(), || "self-embedding".into())?;
    Ok("K1_4 rejected for k=1..4; K5-e, F1, F2 accepted at k=3 and rejected at k=2".into())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 10] = [
        ("color-line graph of the 10-vertex example root", Duration::from_secs(1), cl_of_example_root),
        ("K7-e is not a proper color-line graph", Duration::from_secs(10), k7_minus_e),
        ("minimal forbidden graphs for proper 2-color-line", Duration::from_secs(5), proper_2_minimal_forbidden),
        ("proper 2-color-line characterization sweep", Duration::from_secs(300), proper_2_sweep),
        ("peeling recognizer agrees with the partition oracle", Duration::from_secs(600), peeling_vs_oracle),
        ("line bigraph gadget equivalence", Duration::from_secs(600), bigraph_gadget),
        ("isolated vertex lifting", Duration::from_secs(600), isolated_vertex_lift),
        ("line graph characterizations agree", Duration::from_secs(300), line_characterizations),
        ("bridgeless cubic graphs have proper roots", Duration::from_secs(4), cubic_roots),
        ("K1_4 and the 3-color examples", Duration::from_secs(600), small_examples),
    ];
    let only: Option<usize> = std::env::args().nth(1).and_then(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {limit:?} limit")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {verdict} [{:.2}s] {name}: {detail}", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
