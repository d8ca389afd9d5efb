//! Face enumeration and the dual graph.

use crate::embedding::{PlanarEmbedding, NONE};
use crate::error::{Error, Result};

/// The triangular faces of an embedding and their dual adjacency.
///
/// Face `f` is bounded by the half-edges `face_edges[f]`, in tracing order,
/// and `dual_adjacency[f][k]` is the face across `face_edges[f][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTable {
    pub faces: Vec<[u32; 3]>,
    pub face_edges: Vec<[u32; 3]>,
    pub left_face: Vec<u32>,
    pub dual_adjacency: Vec<[u32; 3]>,
    pub outer_face_id: u32,
}

impl FaceTable {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face on the right of half-edge `h`.
    pub fn right_face(&self, g: &PlanarEmbedding, h: u32) -> u32 {
        self.left_face[g.twin(h) as usize]
    }
}

/// Traces all faces. Faces get dense ids in order of their first half-edge:
/// the face left of half-edge 0 is face 0, and so on.
///
/// The face left of `a -> b` is `(a, b, c)` where `a -> c` follows `a -> b`
/// counterclockwise, so each face is read off one rotation corner. Embedding
/// construction already checked that every face closes after three sides.
pub fn enumerate_faces(g: &PlanarEmbedding) -> Result<FaceTable> {
    let m = g.half_edge_count();
    let mut left_face = vec![NONE; m];
    let mut faces = Vec::with_capacity(m / 3);
    let mut face_edges = Vec::with_capacity(m / 3);
    // Twins of each face's sides, resolved to faces once all ids exist.
    let mut across = Vec::with_capacity(m / 3);

    for a in 0..g.n() as u32 {
        for h in g.out_edges(a) {
            if left_face[h as usize] != NONE {
                continue;
            }
            let id = faces.len() as u32;
            let b = g.head(h);
            let ac = g.ccw_next_from(a, h);
            let c = g.head(ac);
            let ca = g.twin(ac);
            let cb = g.ccw_next_from(c, ca);
            let bc = g.twin(cb);
            left_face[h as usize] = id;
            left_face[bc as usize] = id;
            left_face[ca as usize] = id;
            faces.push([a, b, c]);
            face_edges.push([h, bc, ca]);
            across.push([g.twin(h), cb, ac]);
        }
    }

    let dual_adjacency = across
        .into_iter()
        .map(|t: [u32; 3]| t.map(|h| left_face[h as usize]))
        .collect();

    let outer = g.outer_face();
    let outer_start = g
        .find_half_edge(outer[0], outer[1])
        .ok_or_else(|| Error::Internal("outer face edge missing".into()))?;
    let outer_face_id = left_face[outer_start as usize];

    Ok(FaceTable {
        faces,
        face_edges,
        left_face,
        dual_adjacency,
        outer_face_id,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{k4_rotations, stacked5_rotations};

    fn check_dual(ft: &FaceTable) {
        for (f, nbrs) in ft.dual_adjacency.iter().enumerate() {
            for &x in nbrs {
                assert_ne!(x as usize, f);
                assert!(ft.dual_adjacency[x as usize].contains(&(f as u32)));
            }
        }
        // connected
        let mut seen = vec![false; ft.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(f) = stack.pop() {
            for &x in &ft.dual_adjacency[f] {
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    stack.push(x as usize);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn k4_faces() {
        let g = PlanarEmbedding::new(4, &k4_rotations(), Some([0, 1, 2])).unwrap();
        let ft = enumerate_faces(&g).unwrap();
        assert_eq!(ft.len(), 4);
        assert_eq!(ft.outer_face_id, 0);
        assert_eq!(ft.faces[0], [0, 1, 2]);
        check_dual(&ft);
        // K4 is self-dual: every face touches the other three.
        for (f, nbrs) in ft.dual_adjacency.iter().enumerate() {
            let mut s = nbrs.to_vec();
            s.sort();
            let expect: Vec<u32> = (0..4).filter(|&x| x != f as u32).collect();
            assert_eq!(s, expect);
        }
    }

    #[test]
    fn stacked_faces() {
        let g = PlanarEmbedding::new(5, &stacked5_rotations(), None).unwrap();
        let ft = enumerate_faces(&g).unwrap();
        assert_eq!(ft.len(), 6);
        check_dual(&ft);
        let mut with4: Vec<[u32; 3]> = ft.faces.iter().filter(|f| f.contains(&4)).copied().collect();
        with4.sort();
        assert_eq!(with4.len(), 3);
        // face degree sum = 2E
        assert_eq!(3 * ft.len(), 2 * g.edge_count());
    }

    #[test]
    fn every_half_edge_has_one_left_face() {
        let g = PlanarEmbedding::new(5, &stacked5_rotations(), None).unwrap();
        let ft = enumerate_faces(&g).unwrap();
        let mut uses = vec![0; g.half_edge_count()];
        for es in &ft.face_edges {
            for &h in es {
                uses[h as usize] += 1;
            }
        }
        assert!(uses.iter().all(|&u| u == 1));
        for (f, es) in ft.face_edges.iter().enumerate() {
            for &h in es {
                assert_eq!(ft.left_face[h as usize] as usize, f);
            }
        }
    }
}
