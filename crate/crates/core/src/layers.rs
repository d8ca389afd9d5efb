//! BFS layering: face levels, the boundary cycles of the `i`-close regions,
//! and selection of a light ladder of nested cycles.

use crate::embedding::{PlanarEmbedding, NONE};
use crate::error::{Error, Result};
use crate::faces::FaceTable;
use crate::fundamental::{BfsTree, Cycle};

/// Level of every face: the largest BFS depth among its three corners.
pub fn face_levels(ft: &FaceTable, t: &BfsTree) -> Vec<u32> {
    ft.faces
        .iter()
        .map(|f| f.iter().map(|&x| t.rdist[x as usize]).max().unwrap_or(0))
        .collect()
}

/// Boundary cycles `C_0 .. C_{hT-1}` separating the root from `deep`.
#[derive(Debug, Clone)]
pub struct LevelDecomposition {
    pub face_level: Vec<u32>,
    /// `cycles[i]` has every vertex at depth `i`. `cycles[0]` is the trivial
    /// cycle at the root. Walk order keeps faces of level `<= i` on the left.
    pub cycles: Vec<Cycle>,
    pub cycle_sizes: Vec<usize>,
    pub deep_path: Vec<u32>,
}

/// Traces, for each level `i < rdist(deep)`, the boundary between the faces
/// of level `<= i` and the region of deeper faces that contains `deep`.
///
/// The walk for level `i` starts at the depth-`i` vertex of `deep_path` and
/// follows boundary edges (level `i` on one side, `i + 1` on the other),
/// turning counterclockwise around each vertex past deeper faces. Every
/// vertex is scanned on at most one level, so the total work is linear.
pub fn boundary_cycles(
    g: &PlanarEmbedding,
    ft: &FaceTable,
    levels: &[u32],
    t: &BfsTree,
    deep_path: &[u32],
) -> Result<LevelDecomposition> {
    let deep = *deep_path
        .last()
        .ok_or_else(|| Error::Internal("empty deep path".into()))?;
    let h_t = t.rdist[deep as usize] as usize;
    if deep_path.len() != h_t + 1 || deep_path[0] != t.root {
        return Err(Error::Internal("deep path is not a root-to-deep shortest path".into()));
    }

    let mut cycles = Vec::with_capacity(h_t);
    let mut visited = vec![NONE; g.n()];
    if h_t > 0 {
        cycles.push(Cycle::trivial(t.root));
    }
    for i in 1..h_t {
        let level = i as u32;
        let shallow = |h: u32| levels[ft.left_face[h as usize] as usize] <= level;
        let trace_err = |reason: String| Error::TraceFailure { level: i, reason };

        let w = deep_path[i];
        let toward = g
            .find_half_edge(w, deep_path[i + 1])
            .ok_or_else(|| trace_err("deep path edge missing".into()))?;
        let start =
            scan_ccw(g, toward, shallow).ok_or_else(|| trace_err(format!("no shallow face around vertex {w}")))?;

        let mut verts = Vec::new();
        let mut h = start;
        loop {
            let x = g.tail(h);
            if t.rdist[x as usize] != level {
                return Err(trace_err(format!("vertex {x} has depth {}", t.rdist[x as usize])));
            }
            if visited[x as usize] == level {
                return Err(trace_err(format!("vertex {x} repeats")));
            }
            visited[x as usize] = level;
            verts.push(x);
            h = scan_ccw(g, g.twin(h), shallow)
                .ok_or_else(|| trace_err(format!("boundary ends at vertex {}", g.head(h))))?;
            if g.tail(h) == w {
                if h != start {
                    return Err(trace_err(format!("walk pinches at vertex {w}")));
                }
                break;
            }
            if verts.len() > g.n() {
                return Err(trace_err("walk does not close".into()));
            }
        }
        if verts.len() < 3 {
            return Err(trace_err(format!("cycle of {} vertices", verts.len())));
        }
        cycles.push(Cycle::new(verts));
    }
    let cycle_sizes = cycles.iter().map(|c| c.vertices().len()).collect();
    Ok(LevelDecomposition {
        face_level: levels.to_vec(),
        cycles,
        cycle_sizes,
        deep_path: deep_path.to_vec(),
    })
}

/// First half-edge strictly counterclockwise from `from` (around its tail)
/// whose left face satisfies `shallow`.
fn scan_ccw(g: &PlanarEmbedding, from: u32, shallow: impl Fn(u32) -> bool) -> Option<u32> {
    let mut h = g.ccw_next(from);
    while h != from {
        if shallow(h) {
            return Some(h);
        }
        h = g.ccw_next(h);
    }
    None
}

/// A light subsequence of boundary cycles, framed by the trivial cycles at
/// the root and at the deep vertex.
#[derive(Debug, Clone)]
pub struct Ladder {
    pub delta: usize,
    pub i0: usize,
    /// Levels `alpha_1 .. alpha_{k-1}` of the real rungs.
    pub alpha: Vec<usize>,
    /// `rungs[0]` is the root, `rungs[k]` the deep vertex, `rungs[j] = C_{alpha_j}`.
    pub rungs: Vec<Cycle>,
    pub k: usize,
    /// `weights[i] = sum_j |C_{i + j*delta}|` for every offset `i < delta`.
    pub weights: Vec<usize>,
    /// Depth at which each rung meets the fundamental cycle; `h_t` for the last.
    pub depths: Vec<usize>,
}

impl Ladder {
    pub fn weight(&self) -> usize {
        self.weights[self.i0]
    }
}

/// `ceil(sqrt(n / 2))`, computed exactly: the least `d` with `2 d^2 >= n`.
pub fn default_delta(n: usize) -> usize {
    let mut d = ((n as f64 / 2.0).sqrt()).floor() as usize;
    while 2 * d * d < n {
        d += 1;
    }
    while d > 1 && 2 * (d - 1) * (d - 1) >= n {
        d -= 1;
    }
    d.max(1)
}

/// Picks the offset `i0 < delta` minimizing the total size of the cycles at
/// levels `i0, i0 + delta, ...` (smallest offset on ties).
pub fn ladder_select(dec: &LevelDecomposition, delta: usize, n: usize) -> Result<Ladder> {
    let h_t = dec.cycles.len();
    if delta == 0 || h_t <= delta {
        return Err(Error::Internal(format!(
            "ladder needs depth {h_t} to exceed delta {delta}"
        )));
    }
    let mut weights = vec![0usize; delta];
    for (i, &s) in dec.cycle_sizes.iter().enumerate() {
        weights[i % delta] += s;
    }
    let (i0, &best) = weights
        .iter()
        .enumerate()
        .min_by_key(|&(i, &w)| (w, i))
        .expect("delta > 0");
    if best == 0 {
        return Err(Error::LadderEmpty);
    }
    if best * delta > n {
        return Err(Error::Internal(format!(
            "ladder weight {best} exceeds n/delta = {n}/{delta}"
        )));
    }

    let root = dec.deep_path[0];
    let deep = *dec.deep_path.last().expect("nonempty");
    let alpha: Vec<usize> = (i0..h_t).step_by(delta).collect();
    let mut rungs = Vec::with_capacity(alpha.len() + 2);
    rungs.push(Cycle::trivial(root));
    rungs.extend(alpha.iter().map(|&a| dec.cycles[a].clone()));
    rungs.push(Cycle::trivial(deep));
    let mut depths = vec![0];
    depths.extend(alpha.iter().copied());
    depths.push(h_t);
    Ok(Ladder {
        delta,
        i0,
        k: alpha.len() + 1,
        alpha,
        rungs,
        weights,
        depths,
    })
}

/// Root-side face counts of every rung, plus the annulus of every face.
#[derive(Debug, Clone)]
pub struct RungCounts {
    /// `faces_within[j]`: faces on the root side of rung `j`.
    pub faces_within: Vec<usize>,
    /// `annulus[f] = j` when face `f` lies between rungs `j - 1` and `j`.
    pub annulus: Vec<u32>,
}

/// Counts the faces on the root side of every rung in one outside-in sweep:
/// flood the deep vertex's region without crossing rung edges, then seed
/// each next-inner annulus from the faces across the rung just reached.
pub fn region_face_counts(g: &PlanarEmbedding, ft: &FaceTable, ladder: &Ladder) -> Result<RungCounts> {
    let k = ladder.k;
    let mut rung_of = vec![NONE; g.half_edge_count()];
    for (j, rung) in ladder.rungs.iter().enumerate().take(k).skip(1) {
        for (a, b) in rung.edges() {
            let h = g
                .find_half_edge(a, b)
                .ok_or_else(|| Error::Internal(format!("rung {j} uses non-edge {a}-{b}")))?;
            rung_of[h as usize] = j as u32;
            rung_of[g.twin(h) as usize] = j as u32;
        }
    }

    let mut annulus = vec![NONE; ft.len()];
    let deep = ladder.rungs[k].vertices()[0];
    let first = g.out_edges(deep).start;
    let mut seeds = vec![ft.left_face[first as usize]];
    let mut per_annulus = vec![0usize; k + 1];
    let mut stack = Vec::new();

    for label in (1..=k).rev() {
        let mut next_seeds = Vec::new();
        for &s in &seeds {
            if annulus[s as usize] == NONE {
                annulus[s as usize] = label as u32;
                stack.push(s);
            }
        }
        while let Some(f) = stack.pop() {
            per_annulus[label] += 1;
            for (slot, &h) in ft.face_edges[f as usize].iter().enumerate() {
                let across = ft.dual_adjacency[f as usize][slot];
                let r = rung_of[h as usize];
                if r == NONE {
                    if annulus[across as usize] == NONE {
                        annulus[across as usize] = label as u32;
                        stack.push(across);
                    }
                } else if r as usize == label - 1 {
                    next_seeds.push(across);
                } else if r as usize != label {
                    return Err(Error::Internal(format!("annulus {label} touches rung {r}")));
                }
            }
        }
        seeds = next_seeds;
    }
    if let Some(f) = annulus.iter().position(|&a| a == NONE) {
        return Err(Error::Internal(format!("face {f} not reached by the rung sweep")));
    }

    let mut faces_within = vec![0usize; k + 1];
    for j in 1..=k {
        faces_within[j] = faces_within[j - 1] + per_annulus[j];
    }
    Ok(RungCounts { faces_within, annulus })
}
