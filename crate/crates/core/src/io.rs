//! Text formats: plain and colored edge lists, graph6, and line-bigraph instances.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (0-based). The
//! colored variant has header `n m k` and lines `u v c` with `1 <= c <= k`.
//! Blank lines and `#` comments are ignored everywhere.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::colored::EdgeColoredGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::LineBigraphInstance;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_fields<const N: usize>(line: usize, fields: &[&str], what: &str) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(Error::parse(
            line,
            format!("expected {N} fields for {what}, found {}", fields.len()),
        ));
    }
    let mut out = [0usize; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

fn check_vertex(line: usize, v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::parse(line, format!("vertex {v} out of range for n = {n}")));
    }
    Ok(())
}

fn new_graph(line: usize, n: usize) -> Result<Graph> {
    Graph::new(n).map_err(|e| match e {
        Error::Capability { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
    let [n, m] = parse_fields::<2>(hline, &header, "header `n m`")?;
    let mut g = new_graph(hline, n)?;
    let mut count = 0;
    for (line, fields) in lines {
        count += 1;
        if count > m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = parse_fields::<2>(line, &fields, "edge `u v`")?;
        check_vertex(line, u, n)?;
        check_vertex(line, v, n)?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            log::warn!("line {line}: duplicate edge {u}-{v} ignored");
        }
        g.add_edge(u, v)?;
    }
    if count < m {
        return Err(Error::parse(hline, format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_colored_edge_list(text: &str) -> Result<EdgeColoredGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `n m k`"))?;
    let [n, m, k] = parse_fields::<3>(hline, &header, "header `n m k`")?;
    new_graph(hline, n)?;
    let mut triples: Vec<(usize, usize, usize)> = Vec::with_capacity(m);
    let mut count = 0;
    for (line, fields) in lines {
        count += 1;
        if count > m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let [u, v, c] = parse_fields::<3>(line, &fields, "colored edge `u v c`")?;
        check_vertex(line, u, n)?;
        check_vertex(line, v, n)?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if c == 0 || c > k {
            return Err(Error::parse(line, format!("color {c} outside 1..={k}")));
        }
        let key = (u.min(v), u.max(v));
        match triples.iter().find(|t| (t.0, t.1) == key) {
            Some(t) if t.2 == c => log::warn!("line {line}: duplicate edge {u}-{v} ignored"),
            Some(t) => {
                return Err(Error::parse(
                    line,
                    format!("edge {u}-{v} colored both {} and {c}", t.2),
                ))
            }
            None => triples.push((key.0, key.1, c)),
        }
    }
    if count < m {
        return Err(Error::parse(hline, format!("header declares {m} edges, found {count}")));
    }
    EdgeColoredGraph::new(n, &triples)
}

pub fn write_colored_edge_list(h: &EdgeColoredGraph) -> String {
    let mut out = format!("{} {} {}\n", h.graph().n(), h.edges().len(), h.k());
    for (u, v, c) in h.colored_edges() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

/// Standard graph6 encoding (no `>>graph6<<` header).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, "graph6 byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [126, 126, ..] => return Err(Error::parse(1, "graph6 sizes above 258047 are not supported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::parse(1, "truncated graph6 size field")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    let mut g = new_graph(1, n)?;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::parse(
            1,
            format!("graph6 body has {} bytes, expected {needed}", body.len()),
        ));
    }
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Bipartite instance: header `nx ny m`, then `m` lines `i j` joining
/// `X`-vertex `i` to `Y`-vertex `j`.
pub fn parse_bigraph(text: &str) -> Result<LineBigraphInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `nx ny m`"))?;
    let [nx, ny, m] = parse_fields::<3>(hline, &header, "header `nx ny m`")?;
    let mut edges = Vec::with_capacity(m);
    for (line, fields) in lines {
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let [i, j] = parse_fields::<2>(line, &fields, "cross edge `i j`")?;
        if i >= nx || j >= ny {
            return Err(Error::parse(line, format!("cross edge {i}-{j} outside {nx}x{ny}")));
        }
        edges.push((i, j));
    }
    if edges.len() < m {
        return Err(Error::parse(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    LineBigraphInstance::new(nx, ny, &edges)
}

/// SHA-256 over the normalized edge list.
pub fn input_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(write_edge_list(g).as_bytes()))
}
