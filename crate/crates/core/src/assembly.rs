//! Ring surgery: combining ladder rungs with the fundamental cycle into a
//! short balanced cycle, plus vertex-side accounting.

use std::collections::HashSet;
use std::fmt;

use crate::embedding::PlanarEmbedding;
use crate::error::{Error, Result};
use crate::faces::{enumerate_faces, FaceTable};
use crate::fundamental::{find_root_cycle, Cycle, FundamentalCycle};
use crate::layers::{
    boundary_cycles, default_delta, face_levels, ladder_select, region_face_counts, Ladder, LevelDecomposition,
    RungCounts,
};

/// Which construction produced the separator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The fundamental cycle was already short.
    Direct,
    /// A single ladder rung is balanced.
    Rung,
    /// The half of the heavy ring inside the fundamental cycle.
    InnerHalf,
    /// The half of the heavy ring outside the fundamental cycle.
    OuterHalf,
    /// Inner rung's interior together with the inner half of the ring.
    Combined,
}

impl Branch {
    pub const ALL: [Branch; 5] = [
        Branch::Direct,
        Branch::Rung,
        Branch::InnerHalf,
        Branch::OuterHalf,
        Branch::Combined,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Branch::Direct => "S-direct",
            Branch::Rung => "rung",
            Branch::InnerHalf => "B1",
            Branch::OuterHalf => "B2",
            Branch::Combined => "C-combined",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Branch::ALL.into_iter().find(|b| b.tag() == tag)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The separator cycle with exact side counts. "Inside" is always the side
/// away from the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorReport {
    pub n: usize,
    pub cycle: Cycle,
    pub faces_inside: usize,
    pub faces_outside: usize,
    pub vertices_inside: usize,
    pub vertices_outside: usize,
    pub vertices_on: usize,
    pub length: usize,
    pub branch: Branch,
    pub delta: usize,
}

impl SeparatorReport {
    fn new(
        g: &PlanarEmbedding,
        ft: &FaceTable,
        cycle: Cycle,
        faces_inside: usize,
        branch: Branch,
        delta: usize,
    ) -> Result<Self> {
        let length = cycle.len();
        let vertices_on = cycle.vertices().len();
        let vertices_inside = vertices_inside(faces_inside, length)?;
        let faces_outside = ft.len() - faces_inside;
        let vertices_outside = g
            .n()
            .checked_sub(vertices_inside + vertices_on)
            .ok_or(Error::ParityViolation {
                faces_in: faces_inside,
                len: length,
            })?;
        Ok(SeparatorReport {
            n: g.n(),
            cycle,
            faces_inside,
            faces_outside,
            vertices_inside,
            vertices_outside,
            vertices_on,
            length,
            branch,
            delta,
        })
    }
}

/// Number of vertices strictly inside a simple cycle of `cycle_len` edges
/// enclosing `faces_in` faces of a triangulation: `(faces_in - len) / 2 + 1`.
pub fn vertices_inside(faces_in: usize, cycle_len: usize) -> Result<usize> {
    let err = Error::ParityViolation {
        faces_in,
        len: cycle_len,
    };
    let twice = (faces_in + 2).checked_sub(cycle_len).ok_or(err.clone())?;
    if twice % 2 != 0 {
        return Err(err);
    }
    Ok(twice / 2)
}

/// A rung cut by the fundamental cycle into two arcs, both running from
/// `p` (on the `u` side) to `q` (on the `v` side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RungSplit {
    pub inside_arc: Vec<u32>,
    pub outside_arc: Vec<u32>,
    pub p: u32,
    pub q: u32,
}

/// Splits rung `rung` (all of whose vertices sit at BFS depth `depth`) at
/// its two crossings with the fundamental cycle. A trivial rung splits into
/// two empty arcs at its single vertex.
pub fn split_rung_at_s(
    g: &PlanarEmbedding,
    ft: &FaceTable,
    rung: &Cycle,
    depth: usize,
    fc: &FundamentalCycle,
    rung_index: usize,
) -> Result<RungSplit> {
    let vs = rung.vertices();
    if rung.is_trivial() {
        let x = vs[0];
        return Ok(RungSplit {
            inside_arc: vec![x],
            outside_arc: vec![x],
            p: x,
            q: x,
        });
    }
    let degenerate = |count| Error::DegenerateIntersection {
        rung: rung_index,
        count,
    };
    let (Some(&p), Some(&q)) = (fc.p_u.get(depth), fc.p_v.get(depth)) else {
        return Err(degenerate(0));
    };
    let on_s: HashSet<u32> = fc.cycle.vertices().iter().copied().collect();
    let hits = vs.iter().filter(|x| on_s.contains(x)).count();
    let ip = vs.iter().position(|&x| x == p);
    let iq = vs.iter().position(|&x| x == q);
    let (Some(ip), Some(iq)) = (ip, iq) else {
        return Err(degenerate(hits));
    };
    if hits != 2 || p == q {
        return Err(degenerate(hits));
    }

    let len = vs.len();
    let walk = |step: usize| {
        let mut arc = vec![p];
        let mut i = ip;
        while i != iq {
            i = (i + step) % len;
            arc.push(vs[i]);
        }
        arc
    };
    let forward = walk(1);
    let backward = walk(len - 1);
    let h = g
        .find_half_edge(forward[0], forward[1])
        .ok_or_else(|| Error::Internal("rung edge missing".into()))?;
    let forward_inside = fc.inside[ft.left_face[h as usize] as usize];
    let (inside_arc, outside_arc) = if forward_inside {
        (forward, backward)
    } else {
        (backward, forward)
    };
    Ok(RungSplit {
        inside_arc,
        outside_arc,
        p,
        q,
    })
}

/// The heavy ring between rungs `lower` and `upper` and its two halves.
#[derive(Debug, Clone)]
pub struct RingSplit {
    pub lower: usize,
    pub upper: usize,
    pub lower_split: RungSplit,
    pub upper_split: RungSplit,
    /// Fundamental-cycle segments from the lower anchors up to the upper ones.
    pub segment_p: Vec<u32>,
    pub segment_q: Vec<u32>,
    pub faces_inner_half: usize,
    pub faces_outer_half: usize,
}

/// Glues paths end to start into a closed cycle, checking simplicity.
fn glue(parts: &[&[u32]]) -> Result<Cycle> {
    let mut out: Vec<u32> = Vec::new();
    for part in parts {
        for (i, &x) in part.iter().enumerate() {
            if i == 0 && out.last() == Some(&x) {
                continue;
            }
            out.push(x);
        }
    }
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    let distinct: HashSet<u32> = out.iter().copied().collect();
    if distinct.len() != out.len() || out.len() < 3 {
        return Err(Error::InternalContradiction(format!(
            "assembled cycle of {} vertices is not simple",
            out.len()
        )));
    }
    Ok(Cycle::new(out))
}

fn reversed(xs: &[u32]) -> Vec<u32> {
    xs.iter().rev().copied().collect()
}

/// Picks the separator from the fundamental cycle, a ladder, and the rung
/// face counts.
pub fn assemble(
    g: &PlanarEmbedding,
    ft: &FaceTable,
    fc: &FundamentalCycle,
    ladder: &Ladder,
    counts: &RungCounts,
) -> Result<(SeparatorReport, Option<RingSplit>)> {
    let f = ft.len();
    let lo = f / 3;
    let hi = (2 * f).div_ceil(3);
    let k = ladder.k;
    let within = &counts.faces_within;
    let outer_annulus = counts.annulus[ft.outer_face_id as usize] as usize;
    let delta = ladder.delta;

    for (j, &w) in within.iter().enumerate().take(k).skip(1) {
        if (lo..=hi).contains(&w) {
            let inside = if outer_annulus <= j { f - w } else { w };
            let rep = SeparatorReport::new(g, ft, ladder.rungs[j].clone(), inside, Branch::Rung, delta)?;
            return Ok((rep, None));
        }
    }

    let i = (0..=k)
        .rev()
        .find(|&j| within[j] < lo)
        .ok_or_else(|| Error::InternalContradiction("root rung is not light".into()))?;
    if i == k || within[i + 1] <= hi {
        return Err(Error::InternalContradiction(format!(
            "no heavy ring: F={f}, counts={within:?}"
        )));
    }

    let mut lower = i;
    let mut upper = i + 1;
    let lower_split = match split_rung_at_s(g, ft, &ladder.rungs[lower], ladder.depths[lower], fc, lower) {
        Ok(s) => s,
        Err(Error::DegenerateIntersection { .. }) => {
            lower = 0;
            split_rung_at_s(g, ft, &ladder.rungs[0], 0, fc, 0)?
        }
        Err(e) => return Err(e),
    };
    let upper_split = match split_rung_at_s(g, ft, &ladder.rungs[upper], ladder.depths[upper], fc, upper) {
        Ok(s) => s,
        Err(Error::DegenerateIntersection { .. }) => {
            upper = k;
            split_rung_at_s(g, ft, &ladder.rungs[k], ladder.depths[k], fc, k)?
        }
        Err(e) => return Err(e),
    };

    // Routes from the root to the deep vertex along either side of S.
    let mut route_p = fc.p_u.clone();
    let mut route_q = fc.p_v.clone();
    if fc.deep == fc.u {
        route_q.push(fc.u);
    } else {
        route_p.push(fc.v);
    }
    let anchor = |j: usize, route: &[u32]| if j == k { route.len() - 1 } else { ladder.depths[j] };
    let segment_p = route_p[anchor(lower, &route_p)..=anchor(upper, &route_p)].to_vec();
    let segment_q = route_q[anchor(lower, &route_q)..=anchor(upper, &route_q)].to_vec();

    let (mut r1, mut r2) = (0usize, 0usize);
    for (face, &a) in counts.annulus.iter().enumerate() {
        let a = a as usize;
        if a > lower && a <= upper {
            if fc.inside[face] {
                r1 += 1;
            } else {
                r2 += 1;
            }
        }
    }
    if within[lower] + r1 + r2 != within[upper] {
        return Err(Error::InternalContradiction("ring halves do not add up".into()));
    }

    let ring = RingSplit {
        lower,
        upper,
        lower_split,
        upper_split,
        segment_p,
        segment_q,
        faces_inner_half: r1,
        faces_outer_half: r2,
    };
    let back_p = reversed(&ring.segment_p);
    let (cycle, inside, branch) = if 3 * r1 >= f {
        let c = glue(&[
            &ring.segment_q,
            &reversed(&ring.upper_split.inside_arc),
            &back_p,
            &ring.lower_split.inside_arc,
        ])?;
        (c, r1, Branch::InnerHalf)
    } else if 3 * r2 >= f {
        let c = glue(&[
            &ring.segment_q,
            &reversed(&ring.upper_split.outside_arc),
            &back_p,
            &ring.lower_split.outside_arc,
        ])?;
        let outer_in = outer_annulus > lower && outer_annulus <= upper;
        (c, if outer_in { f - r2 } else { r2 }, Branch::OuterHalf)
    } else {
        let z = within[lower] + r1;
        if !(3 * z > f && 3 * z < 2 * f) {
            return Err(Error::InternalContradiction(format!(
                "combined region holds {z} of {f} faces"
            )));
        }
        let c = glue(&[
            &ring.lower_split.outside_arc,
            &ring.segment_q,
            &reversed(&ring.upper_split.inside_arc),
            &back_p,
        ])?;
        (c, if outer_annulus <= lower { f - z } else { z }, Branch::Combined)
    };

    let rep = SeparatorReport::new(g, ft, cycle, inside, branch, delta)?;
    if (rep.length.saturating_sub(2 * delta)) * delta > g.n() {
        return Err(Error::InternalContradiction(format!(
            "cycle length {} exceeds 2*{delta} + n/{delta}",
            rep.length
        )));
    }
    Ok((rep, Some(ring)))
}

/// Intermediate results of the layering phase.
#[derive(Debug, Clone)]
pub struct LayerPhase {
    pub decomposition: LevelDecomposition,
    pub ladder: Ladder,
    pub counts: RungCounts,
    pub ring: Option<RingSplit>,
}

/// Everything computed on the way to a separator.
#[derive(Debug, Clone)]
pub struct Separation {
    pub faces: FaceTable,
    pub root_cycle: FundamentalCycle,
    pub layers: Option<LayerPhase>,
    pub report: SeparatorReport,
}

/// Runs the full pipeline on a validated embedding.
pub fn separate(g: &PlanarEmbedding) -> Result<Separation> {
    let faces = enumerate_faces(g)?;
    let root_cycle = find_root_cycle(g, &faces)?;
    let delta = default_delta(g.n());

    // Fall back on S only when it is short enough that h_t > delta otherwise.
    if root_cycle.cycle.len() <= 2 * delta + 1 {
        let report = SeparatorReport::new(
            g,
            &faces,
            root_cycle.cycle.clone(),
            root_cycle.faces_inside,
            Branch::Direct,
            delta,
        )?;
        return Ok(Separation {
            faces,
            root_cycle,
            layers: None,
            report,
        });
    }

    let levels = face_levels(&faces, &root_cycle.tree);
    let decomposition = boundary_cycles(g, &faces, &levels, &root_cycle.tree, root_cycle.deep_path())?;
    let ladder = ladder_select(&decomposition, delta, g.n())?;
    let counts = region_face_counts(g, &faces, &ladder)?;
    let (report, ring) = assemble(g, &faces, &root_cycle, &ladder, &counts)?;
    Ok(Separation {
        faces,
        root_cycle,
        layers: Some(LayerPhase {
            decomposition,
            ladder,
            counts,
            ring,
        }),
        report,
    })
}
