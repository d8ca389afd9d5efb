//! Random maximal planar graphs: stacked (Apollonian) triangulations and
//! their diagonal-flip perturbations, plus deep "pillow" triangulations.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{k4_rotations, PlanarEmbedding};
use crate::error::{Error, Result};

/// Mutable half-edge mesh used while generating. Half-edges come in pairs
/// `2e, 2e + 1`; each vertex keeps a doubly linked counterclockwise ring.
struct Mesh {
    tail: Vec<u32>,
    ccw_next: Vec<u32>,
    ccw_prev: Vec<u32>,
    vertex_edge: Vec<u32>,
}

impl Mesh {
    fn k4() -> Self {
        Mesh::from_rotations(&k4_rotations())
    }

    fn from_rotations(rot: &[Vec<u32>]) -> Self {
        let mut mesh = Mesh {
            tail: Vec::new(),
            ccw_next: Vec::new(),
            ccw_prev: Vec::new(),
            vertex_edge: Vec::new(),
        };
        // Allocate one pair per undirected edge, then splice rings in rotation order.
        let mut pair_of = HashMap::new();
        for (u, nbrs) in rot.iter().enumerate() {
            for &w in nbrs {
                let u = u as u32;
                if u < w {
                    let h = mesh.new_pair(u, w);
                    pair_of.insert((u, w), h);
                    pair_of.insert((w, u), h ^ 1);
                }
            }
        }
        for (u, nbrs) in rot.iter().enumerate() {
            let hs: Vec<u32> = nbrs.iter().map(|&w| pair_of[&(u as u32, w)]).collect();
            for i in 0..hs.len() {
                let (a, b) = (hs[i], hs[(i + 1) % hs.len()]);
                mesh.ccw_next[a as usize] = b;
                mesh.ccw_prev[b as usize] = a;
            }
            mesh.vertex_edge.push(hs[0]);
        }
        mesh
    }

    fn new_pair(&mut self, u: u32, w: u32) -> u32 {
        let h = self.tail.len() as u32;
        self.tail.extend([u, w]);
        self.ccw_next.extend([h, h + 1]);
        self.ccw_prev.extend([h, h + 1]);
        h
    }

    fn head(&self, h: u32) -> u32 {
        self.tail[(h ^ 1) as usize]
    }

    fn face_next(&self, h: u32) -> u32 {
        self.ccw_prev[(h ^ 1) as usize]
    }

    /// Places `h` immediately counterclockwise after `after` around their common tail.
    fn splice_after(&mut self, after: u32, h: u32) {
        let nx = self.ccw_next[after as usize];
        self.ccw_next[after as usize] = h;
        self.ccw_prev[h as usize] = after;
        self.ccw_next[h as usize] = nx;
        self.ccw_prev[nx as usize] = h;
    }

    fn unlink(&mut self, h: u32) {
        let (p, nx) = (self.ccw_prev[h as usize], self.ccw_next[h as usize]);
        self.ccw_next[p as usize] = nx;
        self.ccw_prev[nx as usize] = p;
        let t = self.tail[h as usize] as usize;
        if self.vertex_edge[t] == h {
            self.vertex_edge[t] = nx;
        }
    }

    /// Inserts a new vertex inside the face left of `h_ab`. Returns the
    /// half-edges whose left faces are the two new faces besides the one
    /// still represented by `h_ab`.
    fn stack(&mut self, h_ab: u32) -> [u32; 2] {
        let h_bc = self.face_next(h_ab);
        let h_ca = self.face_next(h_bc);
        let (a, b, c) = (
            self.tail[h_ab as usize],
            self.tail[h_bc as usize],
            self.tail[h_ca as usize],
        );
        let x = self.vertex_edge.len() as u32;

        let ax = self.new_pair(a, x);
        let bx = self.new_pair(b, x);
        let cx = self.new_pair(c, x);
        self.splice_after(h_ab, ax);
        self.splice_after(h_bc, bx);
        self.splice_after(h_ca, cx);

        let (xa, xb, xc) = (ax ^ 1, bx ^ 1, cx ^ 1);
        for (p, q) in [(xa, xb), (xb, xc), (xc, xa)] {
            self.ccw_next[p as usize] = q;
            self.ccw_prev[q as usize] = p;
        }
        self.vertex_edge.push(xa);
        [h_bc, h_ca]
    }

    fn rotations(&self) -> Vec<Vec<u32>> {
        self.vertex_edge
            .iter()
            .map(|&start| {
                let mut rot = Vec::new();
                let mut h = start;
                loop {
                    rot.push(self.head(h));
                    h = self.ccw_next[h as usize];
                    if h == start {
                        break;
                    }
                }
                rot
            })
            .collect()
    }
}

/// Rotation system of a sphere triangulation given by consistently oriented
/// triangles: corner `(a, b, c)` makes `c` follow `b` counterclockwise at `a`.
fn rotations_from_triangles(n: usize, triangles: &[[u32; 3]]) -> Vec<Vec<u32>> {
    let mut succ: Vec<HashMap<u32, u32>> = vec![HashMap::new(); n];
    for &[a, b, c] in triangles {
        succ[a as usize].insert(b, c);
        succ[b as usize].insert(c, a);
        succ[c as usize].insert(a, b);
    }
    succ.iter()
        .map(|m| {
            let start = *m.keys().min().expect("vertex without triangles");
            let mut rot = vec![start];
            let mut x = m[&start];
            while x != start {
                rot.push(x);
                x = m[&x];
            }
            rot
        })
        .collect()
}

fn key(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

const OUTER: [u32; 3] = [0, 1, 2];

fn stacked_mesh(n: usize, rng: &mut ChaCha8Rng) -> Result<Mesh> {
    if n < 4 {
        return Err(Error::TooSmall { n });
    }
    let mut mesh = Mesh::k4();
    // Bounded faces of K4, each represented by one of its half-edges.
    let mut bounded: Vec<u32> = Vec::with_capacity(2 * n);
    let mut seen = vec![false; mesh.tail.len()];
    for h in 0..mesh.tail.len() as u32 {
        if seen[h as usize] {
            continue;
        }
        let tri = [h, mesh.face_next(h), mesh.face_next(mesh.face_next(h))];
        for e in tri {
            seen[e as usize] = true;
        }
        let verts = tri.map(|e| mesh.tail[e as usize]);
        if !verts.iter().all(|v| OUTER.contains(v)) {
            bounded.push(h);
        }
    }
    while mesh.vertex_edge.len() < n {
        let pick = rng.gen_range(0..bounded.len());
        let [f1, f2] = mesh.stack(bounded[pick]);
        bounded.extend([f1, f2]);
    }
    Ok(mesh)
}

/// Random stacked triangulation on `n` vertices: starting from K4, each new
/// vertex is inserted into a uniformly random bounded face. The outer face is
/// always (0, 1, 2).
pub fn gen_apollonian(n: usize, seed: u64) -> Result<PlanarEmbedding> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mesh = stacked_mesh(n, &mut rng)?;
    PlanarEmbedding::new(n, &mesh.rotations(), Some(OUTER))
}

/// `gen_apollonian(n, seed)` followed by `flips` attempted random diagonal
/// flips. An attempt is skipped when the edge lies on the outer face or the
/// opposite diagonal already exists.
pub fn gen_flipped(n: usize, flips: usize, seed: u64) -> Result<PlanarEmbedding> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mesh = stacked_mesh(n, &mut rng)?;
    if flips > 0 {
        let mut edges: HashSet<(u32, u32)> = (0..mesh.tail.len() as u32)
            .step_by(2)
            .map(|h| key(mesh.tail[h as usize], mesh.head(h)))
            .collect();
        let pairs = mesh.tail.len() / 2;
        for _ in 0..flips {
            let h = 2 * rng.gen_range(0..pairs) as u32;
            flip(&mut mesh, &mut edges, h);
        }
    }
    PlanarEmbedding::new(n, &mesh.rotations(), Some(OUTER))
}

/// Two `width × height` grid sheets glued along their boundary rectangle: a
/// flat "pillow" whose BFS layers from the corner vertex 0 are long.
///
/// Top vertex `(x, y)` is `y * width + x`; interior bottom vertices follow.
/// The top sheet uses anti-diagonals, so hop distance from the corner there
/// is `x + y`; the bottom sheet uses main diagonals. Then `blob` vertices are
/// stacked into random faces descending from the faces around one random top
/// vertex, followed by `flips` attempted diagonal flips.
pub fn gen_pillow(width: usize, height: usize, blob: usize, flips: usize, seed: u64) -> Result<PlanarEmbedding> {
    if width < 4 || height < 4 {
        return Err(Error::TooSmall { n: width * height });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (w, h) = (width, height);
    let top = |x: usize, y: usize| (y * w + x) as u32;
    let on_rim = |x: usize, y: usize| x == 0 || y == 0 || x == w - 1 || y == h - 1;
    let bottom = |x: usize, y: usize| {
        if on_rim(x, y) {
            top(x, y)
        } else {
            (w * h + (y - 1) * (w - 2) + (x - 1)) as u32
        }
    };
    let base = w * h + (w - 2) * (h - 2);
    let mut triangles = Vec::with_capacity(2 * base);
    for y in 0..h - 1 {
        for x in 0..w - 1 {
            let (a, b, c, d) = (top(x, y), top(x + 1, y), top(x + 1, y + 1), top(x, y + 1));
            triangles.extend([[a, b, d], [b, c, d]]);
            let (a, b, c, d) = (bottom(x, y), bottom(x + 1, y), bottom(x + 1, y + 1), bottom(x, y + 1));
            triangles.extend([[a, c, b], [a, d, c]]);
        }
    }
    let (mx, my) = (w / 2, h / 2);
    let outer = [bottom(mx, my), bottom(mx + 1, my + 1), bottom(mx + 1, my)];

    let mut mesh = Mesh::from_rotations(&rotations_from_triangles(base, &triangles));
    if blob > 0 {
        let centre = top(rng.gen_range(1..w - 1), rng.gen_range(1..h - 1));
        let mut patch: Vec<u32> = Vec::new();
        let start = mesh.vertex_edge[centre as usize];
        let mut h = start;
        loop {
            patch.push(h);
            h = mesh.ccw_next[h as usize];
            if h == start {
                break;
            }
        }
        for _ in 0..blob {
            let pick = rng.gen_range(0..patch.len());
            let [f1, f2] = mesh.stack(patch[pick]);
            patch.extend([f1, f2]);
        }
    }
    if flips > 0 {
        let mut edges: HashSet<(u32, u32)> = (0..mesh.tail.len() as u32)
            .step_by(2)
            .map(|h| key(mesh.tail[h as usize], mesh.head(h)))
            .collect();
        let pairs = mesh.tail.len() / 2;
        for _ in 0..flips {
            let h = 2 * rng.gen_range(0..pairs) as u32;
            flip_avoiding(&mut mesh, &mut edges, h, &outer);
        }
    }
    PlanarEmbedding::new(base + blob, &mesh.rotations(), Some(outer))
}

fn flip(mesh: &mut Mesh, edges: &mut HashSet<(u32, u32)>, h: u32) -> bool {
    flip_avoiding(mesh, edges, h, &OUTER)
}

fn flip_avoiding(mesh: &mut Mesh, edges: &mut HashSet<(u32, u32)>, h: u32, outer: &[u32; 3]) -> bool {
    let t = h ^ 1;
    let (a, b) = (mesh.tail[h as usize], mesh.tail[t as usize]);
    if outer.contains(&a) && outer.contains(&b) {
        return false;
    }
    // Left face (a, b, c), right face (b, a, d).
    let h_bc = mesh.face_next(h);
    let h_ca = mesh.face_next(h_bc);
    let t_ad = mesh.face_next(t);
    let t_db = mesh.face_next(t_ad);
    let c = mesh.tail[h_ca as usize];
    let d = mesh.tail[t_db as usize];
    if c == d || edges.contains(&key(c, d)) {
        return false;
    }
    mesh.unlink(h);
    mesh.unlink(t);
    mesh.tail[h as usize] = c;
    mesh.tail[t as usize] = d;
    mesh.splice_after(h_ca, h);
    mesh.splice_after(t_db, t);
    edges.remove(&key(a, b));
    edges.insert(key(c, d));
    true
}
