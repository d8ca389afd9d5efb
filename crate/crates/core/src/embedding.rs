//! Rotation-system representation of embedded maximal planar graphs.
//!
//! Every vertex stores its neighbors in counterclockwise order. The rotations
//! are flattened into one array; position `h` in that array is the directed
//! edge (half-edge) from the owning vertex to `heads[h]`.

use crate::error::{Error, Result};

/// Sentinel for "no vertex / no half-edge".
pub const NONE: u32 = u32::MAX;

/// A validated maximal planar graph together with a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    n: usize,
    offsets: Vec<u32>,
    heads: Vec<u32>,
    tails: Vec<u32>,
    twins: Vec<u32>,
    outer: [u32; 3],
}

impl PlanarEmbedding {
    /// Validates a rotation system and designates its outer face.
    ///
    /// `outer` may name the face in either orientation; it is stored in the
    /// orientation produced by face tracing. When `outer` is `None` the face
    /// left of vertex 0's first directed edge is used.
    pub fn new(n: usize, rotations: &[Vec<u32>], outer: Option<[u32; 3]>) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooSmall { n });
        }
        if rotations.len() != n {
            return Err(Error::RotationCount {
                expected: n,
                got: rotations.len(),
            });
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut heads = Vec::new();
        let mut tails = Vec::new();
        offsets.push(0u32);
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        neighbor: w as usize,
                    });
                }
                heads.push(w);
                tails.push(v as u32);
            }
            if heads.len() >= u32::MAX as usize {
                return Err(Error::Internal("too many half-edges".into()));
            }
            offsets.push(heads.len() as u32);
        }

        let twins = match_twins(n, &offsets, &heads)?;
        let mut g = PlanarEmbedding {
            n,
            offsets,
            heads,
            tails,
            twins,
            outer: [0, 0, 0],
        };
        g.check_connected()?;

        // Trace faces once to validate the triangulation and Euler counts.
        let faces = g.trace_faces()?;
        let edges = g.edge_count();
        let (expected_edges, expected_faces) = (3 * n - 6, 2 * n - 4);
        if edges != expected_edges || faces.len() != expected_faces {
            return Err(Error::EulerViolation {
                n,
                edges,
                faces: faces.len(),
                expected_edges,
                expected_faces,
            });
        }

        g.outer = match outer {
            None => faces[0],
            Some(t) => {
                let fwd = faces.iter().find(|f| same_cyclic(f, &t));
                let rev = [t[0], t[2], t[1]];
                let bwd = faces.iter().find(|f| same_cyclic(f, &rev));
                match fwd.or(bwd) {
                    Some(f) => *f,
                    None => return Err(Error::BadOuterFace(t[0] as usize, t[1] as usize, t[2] as usize)),
                }
            }
        };
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.heads.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.heads.len()
    }

    /// The outer face, as traced (interior on the left of each directed side).
    pub fn outer_face(&self) -> [u32; 3] {
        self.outer
    }

    /// Counterclockwise neighbor list of `v`.
    pub fn rotation(&self, v: u32) -> &[u32] {
        let (a, b) = self.range(v);
        &self.heads[a..b]
    }

    pub fn degree(&self, v: u32) -> usize {
        let (a, b) = self.range(v);
        b - a
    }

    /// Half-edges leaving `v`, in counterclockwise order.
    pub fn out_edges(&self, v: u32) -> std::ops::Range<u32> {
        self.offsets[v as usize]..self.offsets[v as usize + 1]
    }

    pub fn head(&self, h: u32) -> u32 {
        self.heads[h as usize]
    }

    pub fn tail(&self, h: u32) -> u32 {
        self.tails[h as usize]
    }

    pub fn twin(&self, h: u32) -> u32 {
        self.twins[h as usize]
    }

    /// Next half-edge counterclockwise around the tail of `h`.
    pub fn ccw_next(&self, h: u32) -> u32 {
        let (a, b) = self.range(self.tails[h as usize]);
        let h = h as usize + 1;
        if h == b {
            a as u32
        } else {
            h as u32
        }
    }

    /// [`ccw_next`](Self::ccw_next) when the tail `v` of `h` is already known.
    pub fn ccw_next_from(&self, v: u32, h: u32) -> u32 {
        let h = h + 1;
        if h == self.offsets[v as usize + 1] {
            self.offsets[v as usize]
        } else {
            h
        }
    }

    /// Next half-edge clockwise around the tail of `h`.
    pub fn cw_next(&self, h: u32) -> u32 {
        let (a, b) = self.range(self.tails[h as usize]);
        if h as usize == a {
            (b - 1) as u32
        } else {
            h - 1
        }
    }

    /// Successor of `h` along the face on its left.
    pub fn face_next(&self, h: u32) -> u32 {
        self.cw_next(self.twins[h as usize])
    }

    /// Half-edge `a -> b`, if the edge exists. Linear in the degree of `a`.
    pub fn find_half_edge(&self, a: u32, b: u32) -> Option<u32> {
        self.out_edges(a).find(|&h| self.heads[h as usize] == b)
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        (a as usize) < self.n && (b as usize) < self.n && self.find_half_edge(a, b).is_some()
    }

    /// Owned copy of all rotations.
    pub fn rotations(&self) -> Vec<Vec<u32>> {
        (0..self.n as u32).map(|v| self.rotation(v).to_vec()).collect()
    }

    fn range(&self, v: u32) -> (usize, usize) {
        (self.offsets[v as usize] as usize, self.offsets[v as usize + 1] as usize)
    }

    fn check_connected(&self) -> Result<()> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in self.rotation(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(u) => Err(Error::Disconnected { unreached: u }),
            None => Ok(()),
        }
    }

    /// Traces every face; each must close after exactly three half-edges.
    /// Faces are returned in order of their smallest half-edge id.
    pub(crate) fn trace_faces(&self) -> Result<Vec<[u32; 3]>> {
        let mut used = vec![false; self.heads.len()];
        let mut faces = Vec::with_capacity(self.heads.len() / 3);
        for start in 0..self.heads.len() as u32 {
            if used[start as usize] {
                continue;
            }
            let mut tri = [NONE; 3];
            let mut h = start;
            let mut len = 0usize;
            loop {
                if used[h as usize] {
                    // Walk ran into another face without closing.
                    return Err(self.not_triangulated(start, len.max(4)));
                }
                used[h as usize] = true;
                if len < 3 {
                    tri[len] = self.tails[h as usize];
                }
                len += 1;
                h = self.face_next(h);
                if h == start {
                    break;
                }
                if len > 3 {
                    return Err(self.not_triangulated(start, len + 1));
                }
            }
            if len != 3 {
                return Err(self.not_triangulated(start, len));
            }
            faces.push(tri);
        }
        Ok(faces)
    }

    fn not_triangulated(&self, h: u32, len: usize) -> Error {
        Error::NotTriangulated {
            from: self.tails[h as usize] as usize,
            to: self.heads[h as usize] as usize,
            len,
        }
    }
}

fn same_cyclic(f: &[u32; 3], t: &[u32; 3]) -> bool {
    (0..3).any(|s| f[s] == t[0] && f[(s + 1) % 3] == t[1] && f[(s + 2) % 3] == t[2])
}

/// Pairs every half-edge `u -> v` with `v -> u`. Linear: in-edges are bucketed
/// by head, then matched against a scratch map of each vertex's out-edges.
fn match_twins(n: usize, offsets: &[u32], heads: &[u32]) -> Result<Vec<u32>> {
    let m = heads.len();
    let mut in_count = vec![0u32; n + 1];
    for &w in heads {
        in_count[w as usize + 1] += 1;
    }
    for i in 0..n {
        in_count[i + 1] += in_count[i];
    }
    // in_edges[in_count[v]..in_count[v+1]] = half-edges whose head is v
    let mut fill = in_count.clone();
    let mut in_edges = vec![0u32; m];
    for (h, &w) in heads.iter().enumerate() {
        in_edges[fill[w as usize] as usize] = h as u32;
        fill[w as usize] += 1;
    }

    let mut tail_of = vec![0u32; m];
    for v in 0..n {
        for h in offsets[v]..offsets[v + 1] {
            tail_of[h as usize] = v as u32;
        }
    }

    let mut slot = vec![NONE; n];
    let mut twins = vec![NONE; m];
    for v in 0..n {
        let (a, b) = (offsets[v] as usize, offsets[v + 1] as usize);
        for (h, &w) in heads.iter().enumerate().take(b).skip(a) {
            let w = w as usize;
            if w == v || slot[w] != NONE {
                return Err(Error::NotSimple { vertex: v, neighbor: w });
            }
            slot[w] = h as u32;
        }
        for &h_in in &in_edges[in_count[v] as usize..in_count[v + 1] as usize] {
            let u = tail_of[h_in as usize] as usize;
            let back = slot[u];
            if back == NONE {
                return Err(Error::NotSymmetric { from: u, to: v });
            }
            twins[h_in as usize] = back;
        }
        for &w in &heads[a..b] {
            slot[w as usize] = NONE;
        }
    }
    // Out-edges are only assigned twins from the other side; catch leftovers.
    for v in 0..n {
        for h in offsets[v]..offsets[v + 1] {
            let w = heads[h as usize] as usize;
            let t = twins[h as usize];
            if t == NONE || tail_of[t as usize] as usize != w {
                return Err(Error::NotSymmetric { from: v, to: w });
            }
        }
    }
    Ok(twins)
}

/// K4 with vertex 0's first directed edge bounding the face (0, 1, 2).
pub fn k4_rotations() -> Vec<Vec<u32>> {
    vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]
}

/// K4 plus vertex 4 stacked into face (1, 2, 3).
pub fn stacked5_rotations() -> Vec<Vec<u32>> {
    // Face (1,3,2) is traced in K4 above; insert 4 inside it.
    vec![
        vec![1, 2, 3],
        vec![0, 3, 4, 2],
        vec![0, 1, 4, 3],
        vec![0, 2, 4, 1],
        vec![1, 3, 2],
    ]
}
