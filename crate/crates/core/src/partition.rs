//! Enumeration of vertex partitions into cliques.
//!
//! Partitions are generated as restricted growth strings over the given
//! vertex list (vertex `i` goes to an existing block or opens block
//! `max + 1`), so the visiting order is lexicographic in the string. A
//! branch is cut as soon as a block stops being a clique.

use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// Visits every partition of `vertices` into between `min_blocks` and
/// `max_blocks` cliques of `g`, in restricted-growth-string order, until
/// `visit` breaks.
pub fn for_each_clique_partition<B>(
    g: &Graph,
    vertices: &[usize],
    min_blocks: usize,
    max_blocks: usize,
    mut visit: impl FnMut(&[VertexSet]) -> ControlFlow<B>,
) -> Option<B> {
    if vertices.is_empty() {
        return if min_blocks == 0 {
            visit(&[]).break_value()
        } else {
            None
        };
    }
    let mut blocks = Vec::with_capacity(max_blocks);
    walk(g, vertices, 0, min_blocks, max_blocks, &mut blocks, &mut visit).break_value()
}

fn walk<B>(
    g: &Graph,
    vertices: &[usize],
    i: usize,
    min_blocks: usize,
    max_blocks: usize,
    blocks: &mut Vec<VertexSet>,
    visit: &mut impl FnMut(&[VertexSet]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if i == vertices.len() {
        return if blocks.len() >= min_blocks {
            visit(blocks)
        } else {
            ControlFlow::Continue(())
        };
    }
    // not enough vertices left to open the blocks still required
    if blocks.len() + (vertices.len() - i) < min_blocks {
        return ControlFlow::Continue(());
    }
    let v = vertices[i];
    let nv = g.neighbors(v);
    for b in 0..blocks.len() {
        if blocks[b].is_subset(nv) {
            blocks[b].insert(v);
            let flow = walk(g, vertices, i + 1, min_blocks, max_blocks, blocks, visit);
            blocks[b].remove(v);
            flow?;
        }
    }
    if blocks.len() < max_blocks {
        blocks.push(VertexSet::singleton(v));
        let flow = walk(g, vertices, i + 1, min_blocks, max_blocks, blocks, visit);
        blocks.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Number of partitions of `V(g)` into at most `max_blocks` cliques.
pub fn count_clique_partitions(g: &Graph, max_blocks: usize) -> usize {
    let vertices = g.vertices().to_vec();
    let mut count = 0;
    for_each_clique_partition::<()>(g, &vertices, 1.min(vertices.len()), max_blocks, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
