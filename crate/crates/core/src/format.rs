//! Text formats: the `planar-rot 1` rotation-system file and a plain tree
//! edge list.
//!
//! ```text
//! planar-rot 1
//! n 4
//! outer 0 1 2
//! v 0: 1 2 3
//! v 1: 0 3 2
//! v 2: 0 1 3
//! v 3: 0 2 1
//! coords 0 0.0 0.0
//! ```
//!
//! `#` starts a comment. `outer` and `coords` are optional; when coordinates
//! are given, every vertex needs one.

use std::fmt::Write as _;

use crate::embedding::PlanarEmbedding;
use crate::error::{Error, Result};
use crate::tree_partition::FreeTree;

pub const HEADER: &str = "planar-rot 1";

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub graph: PlanarEmbedding,
    pub coords: Option<Vec<[f64; 2]>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn int<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

fn exactly<'a, const K: usize>(line: usize, toks: impl Iterator<Item = &'a str>, what: &str) -> Result<[&'a str; K]> {
    let got: Vec<&str> = toks.collect();
    got.try_into()
        .map_err(|got: Vec<&str>| parse_err(line, format!("{what} takes {K} values, got {}", got.len())))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, l)) if l.split_whitespace().eq(HEADER.split_whitespace()) => {}
        Some((i, l)) => return Err(parse_err(i, format!("expected `{HEADER}`, found `{l}`"))),
        None => return Err(parse_err(0, "empty input")),
    }

    let mut n: Option<(usize, usize)> = None;
    let mut outer: Option<[u32; 3]> = None;
    // Collected before n-sized allocations so a huge declared n costs nothing.
    let mut vertex_lines: Vec<(usize, u32, Vec<u32>)> = Vec::new();
    let mut coord_lines: Vec<(usize, u32, [f64; 2])> = Vec::new();

    for (i, line) in lines {
        if let Some(rest) = line.strip_prefix("v ").or_else(|| line.strip_prefix("v\t")) {
            let (id, nbrs) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(i, "vertex line needs `:` after the id"))?;
            let id = int(i, id.trim(), "vertex id")?;
            let nbrs = nbrs
                .split_whitespace()
                .map(|t| int(i, t, "neighbor id"))
                .collect::<Result<Vec<u32>>>()?;
            vertex_lines.push((i, id, nbrs));
            continue;
        }
        let mut toks = line.split_whitespace();
        let key = toks.next().unwrap_or_default();
        match key {
            "n" => {
                if n.is_some() {
                    return Err(parse_err(i, "duplicate `n` line"));
                }
                let [v] = exactly::<1>(i, toks, "n")?;
                n = Some((i, int(i, v, "vertex count")?));
            }
            "outer" => {
                if outer.is_some() {
                    return Err(parse_err(i, "duplicate `outer` line"));
                }
                let [a, b, c] = exactly::<3>(i, toks, "outer")?;
                outer = Some([
                    int(i, a, "vertex id")?,
                    int(i, b, "vertex id")?,
                    int(i, c, "vertex id")?,
                ]);
            }
            "coords" => {
                let [id, x, y] = exactly::<3>(i, toks, "coords")?;
                let coord = |t: &str| -> Result<f64> {
                    t.parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| parse_err(i, format!("bad coordinate `{t}`")))
                };
                coord_lines.push((i, int(i, id, "vertex id")?, [coord(x)?, coord(y)?]));
            }
            _ => return Err(parse_err(i, format!("unknown line `{line}`"))),
        }
    }

    let (n_line, n) = n.ok_or_else(|| parse_err(0, "missing `n` line"))?;
    if vertex_lines.len() != n {
        return Err(parse_err(
            n_line,
            format!("n = {n} but {} vertex lines", vertex_lines.len()),
        ));
    }
    let mut rotations: Vec<Option<Vec<u32>>> = vec![None; n];
    for (i, id, nbrs) in vertex_lines {
        let slot = rotations
            .get_mut(id as usize)
            .ok_or_else(|| parse_err(i, format!("vertex id {id} out of range")))?;
        if slot.replace(nbrs).is_some() {
            return Err(parse_err(i, format!("vertex {id} listed twice")));
        }
    }
    let rotations: Vec<Vec<u32>> = rotations.into_iter().map(|r| r.expect("n distinct ids")).collect();

    let coords = if coord_lines.is_empty() {
        None
    } else {
        if coord_lines.len() != n {
            return Err(parse_err(
                coord_lines[0].0,
                format!("{} coordinate lines for {n} vertices", coord_lines.len()),
            ));
        }
        let mut coords: Vec<Option<[f64; 2]>> = vec![None; n];
        for (i, id, xy) in coord_lines {
            let slot = coords
                .get_mut(id as usize)
                .ok_or_else(|| parse_err(i, format!("vertex id {id} out of range")))?;
            if slot.replace(xy).is_some() {
                return Err(parse_err(i, format!("coordinates for {id} given twice")));
            }
        }
        Some(coords.into_iter().map(|c| c.expect("n distinct ids")).collect())
    };

    let graph = PlanarEmbedding::new(n, &rotations, outer)?;
    Ok(GraphFile { graph, coords })
}

pub fn write_graph(g: &PlanarEmbedding, coords: Option<&[[f64; 2]]>) -> String {
    let mut out = String::new();
    let [a, b, c] = g.outer_face();
    let _ = writeln!(out, "{HEADER}\nn {}\nouter {a} {b} {c}", g.n());
    for v in 0..g.n() as u32 {
        let _ = write!(out, "v {v}:");
        for w in g.rotation(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    if let Some(coords) = coords {
        for (v, [x, y]) in coords.iter().enumerate() {
            let _ = writeln!(out, "coords {v} {x} {y}");
        }
    }
    out
}

/// Parses `nodes <m>`, an optional `degree <d>` bound, then one `<a> <b>`
/// line per edge.
pub fn parse_tree(text: &str) -> Result<FreeTree> {
    let mut m: Option<usize> = None;
    let mut degree: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["nodes", v] if m.is_none() && edges.is_empty() => m = Some(int(i, v, "node count")?),
            ["degree", v] if degree.is_none() && edges.is_empty() => degree = Some((i, int(i, v, "degree")?)),
            [a, b] if m.is_some() => edges.push((int(i, a, "node id")?, int(i, b, "node id")?)),
            _ => return Err(parse_err(i, format!("unexpected line `{line}`"))),
        }
    }
    let m = m.ok_or_else(|| parse_err(0, "missing `nodes` line"))?;
    let tree = FreeTree::from_edges(m, &edges)?;
    match degree {
        Some((i, d)) => tree.with_degree_bound(d).map_err(|e| parse_err(i, e.to_string())),
        None => Ok(tree),
    }
}

pub fn write_tree(t: &FreeTree) -> String {
    let mut out = format!("nodes {}\ndegree {}\n", t.node_count(), t.max_degree());
    for (a, b) in t.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}
