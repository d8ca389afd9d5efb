//! Barycentric layout and SVG output.

use std::collections::HashSet;
use std::fmt::Write as _;

use psep::oracle::flood_fill_faces;
use psep::{FaceTable, PlanarEmbedding};

use crate::CliError;

pub const TOLERANCE: f64 = 1e-6;
pub const MAX_ROUNDS: usize = 10_000;

/// Pins the outer face to a fixed triangle and repeatedly moves every other
/// vertex to the average of its neighbors (in place, in id order) until no
/// vertex moves more than [`TOLERANCE`].
pub fn barycentric_layout(g: &PlanarEmbedding) -> Result<Vec<[f64; 2]>, CliError> {
    let n = g.n();
    let corners = [[0.0, 0.0], [1.0, 0.0], [0.5, 0.866_025_403_784_438_6]];
    let centre = [0.5, 0.288_675_134_594_812_9];
    let mut pos = vec![centre; n];
    let mut pinned = vec![false; n];
    for (v, xy) in g.outer_face().into_iter().zip(corners) {
        pos[v as usize] = xy;
        pinned[v as usize] = true;
    }
    for _ in 0..MAX_ROUNDS {
        let mut moved: f64 = 0.0;
        for v in 0..n {
            if pinned[v] {
                continue;
            }
            let nbrs = g.rotation(v as u32);
            let (mut x, mut y) = (0.0, 0.0);
            for &w in nbrs {
                x += pos[w as usize][0];
                y += pos[w as usize][1];
            }
            let k = nbrs.len() as f64;
            let next = [x / k, y / k];
            moved = moved.max((next[0] - pos[v][0]).hypot(next[1] - pos[v][1]));
            pos[v] = next;
        }
        if moved < TOLERANCE {
            return Ok(pos);
        }
    }
    Err(CliError::NoConvergence { rounds: MAX_ROUNDS })
}

/// Draws faces (tinted when inside `cycle`), edges in gray, and the cycle's
/// edges in red with `data-u`/`data-v` endpoints.
pub fn svg(g: &PlanarEmbedding, ft: &FaceTable, pos: &[[f64; 2]], cycle: Option<&[u32]>) -> Result<String, CliError> {
    const SIZE: f64 = 800.0;
    const MARGIN: f64 = 20.0;
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in pos {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(f64::MIN_POSITIVE);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    // SVG y grows downward; flip so counterclockwise stays counterclockwise.
    let at = |v: u32| {
        let [x, y] = pos[v as usize];
        (MARGIN + (x - lo[0]) * scale, SIZE - MARGIN - (y - lo[1]) * scale)
    };

    let (inside, sep_edges) = match cycle {
        Some(c) => {
            let sides = flood_fill_faces(g, ft, c)?;
            let inside: HashSet<u32> = sides.inside.into_iter().collect();
            let edges: HashSet<(u32, u32)> = if c.len() > 1 {
                (0..c.len())
                    .map(|i| {
                        let (a, b) = (c[i], c[(i + 1) % c.len()]);
                        (a.min(b), a.max(b))
                    })
                    .collect()
            } else {
                HashSet::new()
            };
            (inside, edges)
        }
        None => (HashSet::new(), HashSet::new()),
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    out.push_str("<style>.face{fill:none}.inside{fill:#fde2c4}.edge{stroke:#999;stroke-width:1}.sep{stroke:#d00;stroke-width:2.5}</style>\n");
    for (f, tri) in ft.faces.iter().enumerate() {
        let class = if inside.contains(&(f as u32)) {
            "face inside"
        } else {
            "face"
        };
        let pts: Vec<String> = tri
            .iter()
            .map(|&v| {
                let (x, y) = at(v);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon class="{class}" data-face="{f}" points="{}"/>"#,
            pts.join(" ")
        );
    }
    for u in 0..g.n() as u32 {
        for &v in g.rotation(u) {
            if u > v || sep_edges.contains(&(u, v)) {
                continue;
            }
            let ((x1, y1), (x2, y2)) = (at(u), at(v));
            let _ = writeln!(
                out,
                r#"<line class="edge" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
            );
        }
    }
    let mut sep: Vec<&(u32, u32)> = sep_edges.iter().collect();
    sep.sort_unstable();
    for &(u, v) in sep {
        let ((x1, y1), (x2, y2)) = (at(u), at(v));
        let _ = writeln!(
            out,
            r#"<line class="sep" data-u="{u}" data-v="{v}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use psep::{enumerate_faces, gen_apollonian};

    #[test]
    fn k4_layout_centres_the_inner_vertex() {
        let g = gen_apollonian(4, 0).unwrap();
        let pos = barycentric_layout(&g).unwrap();
        let inner = (0..4).find(|v| !g.outer_face().contains(v)).unwrap();
        let [x, y] = pos[inner as usize];
        assert!((x - 0.5).abs() < 1e-9 && (y - 0.288_675_134_594_812_9).abs() < 1e-9);
    }

    #[test]
    fn deterministic_svg() {
        let g = gen_apollonian(30, 2).unwrap();
        let ft = enumerate_faces(&g).unwrap();
        let pos = barycentric_layout(&g).unwrap();
        let a = svg(&g, &ft, &pos, Some(&[0, 1, 2])).unwrap();
        let b = svg(&g, &ft, &barycentric_layout(&g).unwrap(), Some(&[0, 1, 2])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<polygon").count(), ft.len());
        assert_eq!(a.matches("class=\"sep\"").count(), 3);
    }
}
