//! Brute-force checks that deliberately share nothing with the separator
//! pipeline: plain hash maps, plain BFS, plain arithmetic.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::assembly::SeparatorReport;
use crate::embedding::PlanarEmbedding;
use crate::error::{Error, Result};
use crate::faces::FaceTable;
use crate::tree_partition::FreeTree;

/// Face ids on each side of a cycle. "Outside" holds the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSides {
    pub inside: Vec<u32>,
    pub outside: Vec<u32>,
}

fn undirected(a: u32, b: u32) -> (u32, u32) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn adjacent(g: &PlanarEmbedding, a: u32, b: u32) -> bool {
    (a as usize) < g.n() && g.rotation(a).contains(&b)
}

/// Checks that `cycle` is a simple closed walk along edges of `g`. A single
/// vertex counts as a trivial cycle; two vertices never form a cycle.
fn check_cycle(g: &PlanarEmbedding, cycle: &[u32]) -> std::result::Result<(), String> {
    if cycle.is_empty() {
        return Err("empty cycle".into());
    }
    let mut seen = HashSet::new();
    for &x in cycle {
        if x as usize >= g.n() {
            return Err(format!("vertex {x} out of range"));
        }
        if !seen.insert(x) {
            return Err(format!("vertex {x} repeated"));
        }
    }
    if cycle.len() == 1 {
        return Ok(());
    }
    if cycle.len() == 2 {
        return Err("two vertices do not make a cycle".into());
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !adjacent(g, a, b) {
            return Err(format!("{a}-{b} is not an edge"));
        }
    }
    Ok(())
}

/// Splits the faces by a dual BFS from the outer face that never crosses an
/// edge of `cycle`.
pub fn flood_fill_faces(g: &PlanarEmbedding, ft: &FaceTable, cycle: &[u32]) -> Result<FaceSides> {
    if check_cycle(g, cycle).is_err() {
        return Err(Error::NotSimple {
            vertex: cycle.first().copied().unwrap_or(0) as usize,
            neighbor: cycle.get(1).copied().unwrap_or(0) as usize,
        });
    }
    let mut walls = HashSet::new();
    if cycle.len() > 1 {
        for i in 0..cycle.len() {
            walls.insert(undirected(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }
    let mut by_edge: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for (f, tri) in ft.faces.iter().enumerate() {
        for i in 0..3 {
            by_edge
                .entry(undirected(tri[i], tri[(i + 1) % 3]))
                .or_default()
                .push(f as u32);
        }
    }

    let mut reached = vec![false; ft.faces.len()];
    let mut queue = VecDeque::new();
    reached[ft.outer_face_id as usize] = true;
    queue.push_back(ft.outer_face_id);
    while let Some(f) = queue.pop_front() {
        let tri = ft.faces[f as usize];
        for i in 0..3 {
            let e = undirected(tri[i], tri[(i + 1) % 3]);
            if walls.contains(&e) {
                continue;
            }
            for &other in &by_edge[&e] {
                if !reached[other as usize] {
                    reached[other as usize] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    let (mut inside, mut outside) = (Vec::new(), Vec::new());
    for (f, &r) in reached.iter().enumerate() {
        if r {
            outside.push(f as u32);
        } else {
            inside.push(f as u32);
        }
    }
    Ok(FaceSides { inside, outside })
}

/// Vertices strictly enclosed: corners of inside faces that are not on the
/// cycle.
pub fn enclosed_vertices(ft: &FaceTable, sides: &FaceSides, cycle: &[u32]) -> Vec<u32> {
    let on: HashSet<u32> = cycle.iter().copied().collect();
    let mut found = HashSet::new();
    for &f in &sides.inside {
        for &x in &ft.faces[f as usize] {
            if !on.contains(&x) {
                found.insert(x);
            }
        }
    }
    let mut out: Vec<u32> = found.into_iter().collect();
    out.sort_unstable();
    out
}

/// Hop distances from `root`.
pub fn bfs_distances(g: &PlanarEmbedding, root: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    dist[root as usize] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.rotation(x) {
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Simple cycle along graph edges; length and vertex fields agree with it.
    Cycle,
    /// Face counts match the flood fill.
    FaceCounts,
    /// Both face sides within `⌈2F/3⌉`.
    FaceBalance,
    /// Direct vertex counts match the report, the closed form, and `2n/3`.
    VertexBalance,
    /// Length at most `√(8n) + 4`.
    Length,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::Cycle,
        CheckKind::FaceCounts,
        CheckKind::FaceBalance,
        CheckKind::VertexBalance,
        CheckKind::Length,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Cycle => "cycle",
            CheckKind::FaceCounts => "face-counts",
            CheckKind::FaceBalance => "face-balance",
            CheckKind::VertexBalance => "vertex-balance",
            CheckKind::Length => "length",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

/// Itemized outcome of [`verify_separator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&Check> {
        self.checks.iter().find(|c| c.kind == kind)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            writeln!(f, "{:<15} {:<4} {}", c.kind.name(), mark, c.detail)?;
        }
        Ok(())
    }
}

/// Validates a separator report against the graph from scratch.
pub fn verify_separator(g: &PlanarEmbedding, ft: &FaceTable, rep: &SeparatorReport) -> Verdict {
    let n = g.n();
    let total = ft.faces.len();
    let cycle = rep.cycle.vertices();
    let mut checks = Vec::new();
    let mut push = |kind, passed, detail: String| checks.push(Check { kind, passed, detail });

    let shape = check_cycle(g, cycle).and_then(|()| {
        let edges = if cycle.len() == 1 { 0 } else { cycle.len() };
        if rep.n != n {
            Err(format!("report n = {} but graph has {n} vertices", rep.n))
        } else if rep.length != edges {
            Err(format!("length field {} but cycle has {edges} edges", rep.length))
        } else if rep.vertices_on != cycle.len() {
            Err(format!(
                "vertices_on {} but cycle has {} vertices",
                rep.vertices_on,
                cycle.len()
            ))
        } else {
            Ok(())
        }
    });
    let sides = match shape {
        Ok(()) => {
            push(CheckKind::Cycle, true, format!("simple, {} vertices", cycle.len()));
            flood_fill_faces(g, ft, cycle).ok()
        }
        Err(reason) => {
            push(CheckKind::Cycle, false, reason);
            None
        }
    };
    let Some(sides) = sides else {
        for kind in [CheckKind::FaceCounts, CheckKind::FaceBalance, CheckKind::VertexBalance] {
            push(kind, false, "skipped: cycle invalid".into());
        }
        push_length(&mut push, rep.length, n);
        return Verdict { checks };
    };

    let (fin, fout) = (sides.inside.len(), sides.outside.len());
    push(
        CheckKind::FaceCounts,
        fin == rep.faces_inside && fout == rep.faces_outside,
        format!(
            "flood fill {fin}/{fout}, reported {}/{}",
            rep.faces_inside, rep.faces_outside
        ),
    );

    let cap = (2 * total).div_ceil(3);
    push(
        CheckKind::FaceBalance,
        fin <= cap && fout <= cap,
        format!("sides {fin}/{fout}, cap {cap} of {total}"),
    );

    let vin = enclosed_vertices(ft, &sides, cycle).len();
    let von = cycle.len();
    let vout = n - vin - von;
    let closed_form = if von == 1 {
        (fin == 0).then_some(0)
    } else {
        let twice = fin as i64 - von as i64 + 2;
        (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
    };
    let mut problems = Vec::new();
    if vin != rep.vertices_inside || vout != rep.vertices_outside {
        problems.push(format!("reported {}/{}", rep.vertices_inside, rep.vertices_outside));
    }
    if closed_form != Some(vin) {
        problems.push(format!("closed form gives {closed_form:?}"));
    }
    if 3 * vin > 2 * n || 3 * vout > 2 * n {
        problems.push(format!("a side exceeds 2n/3 = {:.1}", 2.0 * n as f64 / 3.0));
    }
    push(
        CheckKind::VertexBalance,
        problems.is_empty(),
        format!("direct {vin}/{vout} with {von} on cycle {}", problems.join("; ")),
    );
    push_length(&mut push, rep.length, n);
    Verdict { checks }
}

fn push_length(push: &mut impl FnMut(CheckKind, bool, String), len: usize, n: usize) {
    // len <= sqrt(8n) + 4  <=>  len <= 4 or (len - 4)^2 <= 8n
    let ok = len <= 4 || (len - 4) * (len - 4) <= 8 * n;
    push(
        CheckKind::Length,
        ok,
        format!("{len} vs sqrt(8n) + 4 = {:.2}", (8.0 * n as f64).sqrt() + 4.0),
    );
}

/// Every edge of a tree whose removal meets the `⌈(1 - 1/d)·m⌉` bound,
/// found by trying them all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCutOracle {
    pub feasible: Vec<usize>,
    /// Smallest achievable larger side over all edges.
    pub best: usize,
    pub bound: usize,
}

pub fn brute_force_tree_cut(t: &FreeTree) -> Result<TreeCutOracle> {
    let m = t.node_count();
    if m < 2 {
        return Err(Error::SingleNode);
    }
    let d = t.max_degree();
    let (wide_m, wide_d) = (m as u128, d as u128);
    let bound = ((wide_d - 1) * wide_m).div_ceil(wide_d);
    let bound = bound as usize;
    let edges = t.edges();
    let mut adj = vec![Vec::new(); m];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a as usize].push((b as usize, i));
        adj[b as usize].push((a as usize, i));
    }
    let mut feasible = Vec::new();
    let mut best = m;
    for (skip, &(a, _)) in edges.iter().enumerate() {
        let mut seen = vec![false; m];
        seen[a as usize] = true;
        let mut stack = vec![a as usize];
        let mut side = 1;
        while let Some(x) = stack.pop() {
            for &(y, e) in &adj[x] {
                if e != skip && !seen[y] {
                    seen[y] = true;
                    side += 1;
                    stack.push(y);
                }
            }
        }
        let larger = side.max(m - side);
        best = best.min(larger);
        if larger <= bound {
            feasible.push(skip);
        }
    }
    Ok(TreeCutOracle { feasible, best, bound })
}
