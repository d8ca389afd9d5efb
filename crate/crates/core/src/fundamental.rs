//! The long fundamental-cycle separator: BFS tree, interdigitating dual
//! tree, balanced dual cut, and the re-rooted shortest-path cycle.

use crate::embedding::{PlanarEmbedding, NONE};
use crate::error::{Error, Result};
use crate::faces::FaceTable;
use crate::tree_partition::{rooted_cut, FreeTree, TreeView};

/// A closed vertex sequence; the edge from the last vertex back to the first
/// is implicit. A single vertex is the trivial cycle of length 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cycle {
    vertices: Vec<u32>,
}

impl Cycle {
    pub fn new(vertices: Vec<u32>) -> Self {
        Cycle { vertices }
    }

    pub fn trivial(v: u32) -> Self {
        Cycle { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<u32> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        if self.vertices.len() < 2 {
            0
        } else {
            self.vertices.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() <= 1
    }

    /// Consecutive vertex pairs, including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let k = if self.vertices.len() < 2 {
            0
        } else {
            self.vertices.len()
        };
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Rooted shortest-path tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    pub root: u32,
    /// `NONE` for the root.
    pub parent: Vec<u32>,
    pub rdist: Vec<u32>,
}

impl BfsTree {
    pub fn is_tree_edge(&self, a: u32, b: u32) -> bool {
        self.parent[a as usize] == b || self.parent[b as usize] == a
    }

    /// Tree path from the root to `v`, root first.
    pub fn path_from_root(&self, v: u32) -> Vec<u32> {
        let mut path = Vec::with_capacity(self.rdist[v as usize] as usize + 1);
        let mut x = v;
        while x != NONE {
            path.push(x);
            x = self.parent[x as usize];
        }
        path.reverse();
        path
    }
}

/// Breadth-first search from `root`. Each seed path must start at `root` and
/// be a shortest path; its edges are forced into the tree.
pub fn bfs_tree(g: &PlanarEmbedding, root: u32, seed_paths: &[Vec<u32>]) -> Result<BfsTree> {
    let n = g.n();
    if root as usize >= n {
        return Err(Error::BadSeedPath(format!("root {root} out of range")));
    }
    let mut parent = vec![NONE; n];
    let mut rdist = vec![NONE; n];
    rdist[root as usize] = 0;
    let mut levels: Vec<Vec<u32>> = vec![vec![root]];

    for path in seed_paths {
        if path.first() != Some(&root) {
            return Err(Error::BadSeedPath("seed path does not start at the root".into()));
        }
        for (k, w) in path.windows(2).enumerate() {
            let (x, y) = (w[0], w[1]);
            if y as usize >= n || !g.has_edge(x, y) {
                return Err(Error::BadSeedPath(format!("{x}-{y} is not an edge")));
            }
            let depth = k as u32 + 1;
            if rdist[y as usize] == NONE {
                rdist[y as usize] = depth;
                parent[y as usize] = x;
                if levels.len() <= depth as usize {
                    levels.resize(depth as usize + 1, Vec::new());
                }
                levels[depth as usize].push(y);
            } else if rdist[y as usize] != depth || parent[y as usize] != x {
                return Err(Error::BadSeedPath(format!(
                    "vertex {y} reached inconsistently by two seed paths"
                )));
            }
        }
    }

    let mut d = 0usize;
    while d < levels.len() {
        let mut i = 0;
        while i < levels[d].len() {
            let x = levels[d][i];
            i += 1;
            for &y in g.rotation(x) {
                let ry = rdist[y as usize];
                if ry == NONE {
                    rdist[y as usize] = d as u32 + 1;
                    parent[y as usize] = x;
                    if levels.len() <= d + 1 {
                        levels.push(Vec::new());
                    }
                    levels[d + 1].push(y);
                } else if ry as usize > d + 1 {
                    return Err(Error::BadSeedPath(format!(
                        "seeded depth {ry} of vertex {y} exceeds its distance {}",
                        d + 1
                    )));
                }
            }
        }
        d += 1;
    }
    Ok(BfsTree { root, parent, rdist })
}

/// The dual tree formed by the edges not in `t`, as a [`FreeTree`] on face
/// ids. `primal[e]` is a half-edge of the primal edge crossed by dual edge `e`.
#[derive(Debug, Clone)]
pub struct DualTree {
    pub tree: FreeTree,
    pub primal: Vec<u32>,
}

pub fn dual_spanning_tree(g: &PlanarEmbedding, ft: &FaceTable, t: &BfsTree) -> Result<DualTree> {
    let mut edges = Vec::with_capacity(ft.len());
    let mut primal = Vec::with_capacity(ft.len());
    for h in 0..g.half_edge_count() as u32 {
        let th = g.twin(h);
        if h > th || t.is_tree_edge(g.tail(h), g.head(h)) {
            continue;
        }
        edges.push((ft.left_face[h as usize], ft.left_face[th as usize]));
        primal.push(h);
    }
    let tree = FreeTree::from_edges(ft.len(), &edges)
        .map_err(|e| Error::Internal(format!("dual of non-tree edges is not a spanning tree: {e}")))?;
    if tree.max_degree() > 3 {
        return Err(Error::Internal("dual tree degree exceeds 3".into()));
    }
    Ok(DualTree { tree, primal })
}

/// The dual tree viewed in place on the face table: slot `k` of face `f` is a
/// tree edge (id `3f + k`) when its primal edge is not in the BFS tree.
struct Cotree<'a> {
    ft: &'a FaceTable,
    slots: Vec<u8>,
}

impl<'a> Cotree<'a> {
    fn new(ft: &'a FaceTable, t: &BfsTree) -> Result<Self> {
        let mut dual_edges = 0usize;
        let slots: Vec<u8> = ft
            .faces
            .iter()
            .map(|&[a, b, c]| {
                let p = [a, b, c].map(|x| t.parent[x as usize]);
                let mut bits = 0u8;
                for k in 0..3 {
                    let (x, y) = ([a, b, c][k], [a, b, c][(k + 1) % 3]);
                    if p[k] != y && p[(k + 1) % 3] != x {
                        bits |= 1 << k;
                        dual_edges += 1;
                    }
                }
                bits
            })
            .collect();
        // Each dual edge is seen from both of its faces.
        if dual_edges != 2 * (ft.len() - 1) {
            return Err(Error::Internal(
                "non-tree edges do not form a dual spanning tree".into(),
            ));
        }
        Ok(Cotree { ft, slots })
    }
}

impl TreeView for Cotree<'_> {
    fn node_count(&self) -> usize {
        self.ft.len()
    }

    fn max_degree(&self) -> usize {
        3
    }

    fn for_each_neighbor(&self, f: u32, mut visit: impl FnMut(u32, u32)) {
        let bits = self.slots[f as usize];
        let across = &self.ft.dual_adjacency[f as usize];
        for (k, &g) in across.iter().enumerate() {
            if bits & (1 << k) != 0 {
                visit(g, 3 * f + k as u32);
            }
        }
    }
}

/// The fundamental-cycle separator and the BFS tree rooted at its apex.
#[derive(Debug, Clone)]
pub struct FundamentalCycle {
    pub tree: BfsTree,
    pub u: u32,
    pub v: u32,
    /// Root-to-`u` and root-to-`v` tree paths, root first.
    pub p_u: Vec<u32>,
    pub p_v: Vec<u32>,
    /// `p_u`, then `v`, then `p_v` reversed down to the vertex after the root.
    pub cycle: Cycle,
    /// Per face: does it lie on the side of the cycle away from the outer face?
    pub inside: Vec<bool>,
    pub faces_inside: usize,
    pub h_t: u32,
    pub deep: u32,
}

impl FundamentalCycle {
    pub fn root(&self) -> u32 {
        self.tree.root
    }

    pub fn faces_outside(&self) -> usize {
        self.inside.len() - self.faces_inside
    }

    /// Root-to-`deep` path along the cycle.
    pub fn deep_path(&self) -> &[u32] {
        if self.deep == self.u {
            &self.p_u
        } else {
            &self.p_v
        }
    }
}

/// BFS from vertex 0, balanced cut of the dual tree, then re-rooting at the
/// lowest common ancestor of the cut edge's endpoints.
pub fn find_root_cycle(g: &PlanarEmbedding, ft: &FaceTable) -> Result<FundamentalCycle> {
    let t0 = bfs_tree(g, 0, &[])?;
    let rooted = rooted_cut(&Cotree::new(ft, &t0)?)?;
    let cut = rooted.cut;

    // Split the faces: the side holding the outer face is outside.
    let m = ft.len();
    let mut inside = vec![false; m];
    for &f in rooted.child_subtree() {
        inside[f as usize] = true;
    }
    let mut faces_inside = cut.child_side;
    if inside[ft.outer_face_id as usize] {
        inside.iter_mut().for_each(|b| *b = !*b);
        faces_inside = cut.parent_side;
    }

    // Orient uv so its left face is inside.
    let mut h = ft.face_edges[cut.edge / 3][cut.edge % 3];
    if !inside[ft.left_face[h as usize] as usize] {
        h = g.twin(h);
    }
    let (u, v) = (g.tail(h), g.head(h));

    // Lowest common ancestor by walking up from the deeper endpoint.
    let (mut a, mut b) = (u, v);
    while t0.rdist[a as usize] > t0.rdist[b as usize] {
        a = t0.parent[a as usize];
    }
    while t0.rdist[b as usize] > t0.rdist[a as usize] {
        b = t0.parent[b as usize];
    }
    while a != b {
        a = t0.parent[a as usize];
        b = t0.parent[b as usize];
    }
    let r = a;

    let upward = |mut x: u32| {
        let mut path = vec![x];
        while x != r {
            x = t0.parent[x as usize];
            path.push(x);
        }
        path.reverse();
        path
    };
    let p_u = upward(u);
    let p_v = upward(v);

    let tree = bfs_tree(g, r, &[p_u.clone(), p_v.clone()])?;

    let mut verts = p_u.clone();
    verts.extend(p_v.iter().skip(1).rev());
    let cycle = Cycle::new(verts);

    let (du, dv) = (tree.rdist[u as usize], tree.rdist[v as usize]);
    let (h_t, deep) = if dv > du { (dv, v) } else { (du, u) };

    Ok(FundamentalCycle {
        tree,
        u,
        v,
        p_u,
        p_v,
        cycle,
        inside,
        faces_inside,
        h_t,
        deep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{k4_rotations, stacked5_rotations};
    use crate::faces::enumerate_faces;
    use crate::generate::gen_apollonian;

    #[test]
    fn k4_bfs() {
        let g = PlanarEmbedding::new(4, &k4_rotations(), None).unwrap();
        let t = bfs_tree(&g, 0, &[]).unwrap();
        assert_eq!(t.rdist, vec![0, 1, 1, 1]);
        assert_eq!(t.parent, vec![NONE, 0, 0, 0]);
    }

    #[test]
    fn k4_dual_tree_of_star() {
        let g = PlanarEmbedding::new(4, &k4_rotations(), None).unwrap();
        let ft = enumerate_faces(&g).unwrap();
        let t = bfs_tree(&g, 0, &[]).unwrap();
        let dual = dual_spanning_tree(&g, &ft, &t).unwrap();
        assert_eq!(dual.tree.node_count(), 4);
        assert_eq!(dual.tree.edges().len(), 3);
        let mut crossed: Vec<(u32, u32)> = dual
            .primal
            .iter()
            .map(|&h| {
                let (a, b) = (g.tail(h), g.head(h));
                (a.min(b), a.max(b))
            })
            .collect();
        crossed.sort();
        assert_eq!(crossed, vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn cotree_cut_matches_explicit_dual_tree() {
        use crate::tree_partition::balanced_edge_cut;
        for seed in 0..10 {
            let g = gen_apollonian(500, seed).unwrap();
            let ft = enumerate_faces(&g).unwrap();
            let t = bfs_tree(&g, 0, &[]).unwrap();
            let explicit = dual_spanning_tree(&g, &ft, &t).unwrap();
            let want = balanced_edge_cut(&explicit.tree.with_degree_bound(3).unwrap()).unwrap();
            let got = rooted_cut(&Cotree::new(&ft, &t).unwrap()).unwrap().cut;
            assert_eq!(
                (got.parent, got.child, got.child_side),
                (want.parent, want.child, want.child_side)
            );
            let h = ft.face_edges[got.edge / 3][got.edge % 3];
            let p = explicit.primal[want.edge];
            assert!(h == p || h == g.twin(p));
        }
    }

    #[test]
    fn k4_root_cycle() {
        let g = PlanarEmbedding::new(4, &k4_rotations(), Some([0, 1, 2])).unwrap();
        let ft = enumerate_faces(&g).unwrap();
        let fc = find_root_cycle(&g, &ft).unwrap();
        assert_eq!(fc.cycle.len(), 3);
        let mut sides = [fc.faces_inside, fc.faces_outside()];
        sides.sort();
        assert_eq!(sides, [1, 3]);
        assert!(!fc.inside[ft.outer_face_id as usize]);
    }

    #[test]
    fn seeded_paths_become_tree_edges() {
        let g = gen_apollonian(400, 3).unwrap();
        let plain = bfs_tree(&g, 5, &[]).unwrap();
        // Use a shortest path from the plain tree as the seed.
        let far = (0..g.n() as u32).max_by_key(|&x| plain.rdist[x as usize]).unwrap();
        let path = plain.path_from_root(far);
        let seeded = bfs_tree(&g, 5, std::slice::from_ref(&path)).unwrap();
        assert_eq!(seeded.rdist, plain.rdist);
        for w in path.windows(2) {
            assert_eq!(seeded.parent[w[1] as usize], w[0]);
        }
    }

    #[test]
    fn bad_seed_paths() {
        let g = PlanarEmbedding::new(5, &stacked5_rotations(), None).unwrap();
        // wrong start
        assert!(matches!(bfs_tree(&g, 0, &[vec![1, 2]]), Err(Error::BadSeedPath(_))));
        // 0-4 is not an edge
        assert!(matches!(bfs_tree(&g, 0, &[vec![0, 4]]), Err(Error::BadSeedPath(_))));
        // 0-1-3 is not shortest: 3 is adjacent to 0
        assert!(matches!(bfs_tree(&g, 0, &[vec![0, 1, 3]]), Err(Error::BadSeedPath(_))));
    }

    #[test]
    fn root_cycle_properties_random() {
        for seed in 0..20 {
            let g = gen_apollonian(300, seed).unwrap();
            let ft = enumerate_faces(&g).unwrap();
            let fc = find_root_cycle(&g, &ft).unwrap();
            let f = ft.len();
            let bound = (2 * f).div_ceil(3);
            assert!(fc.faces_inside <= bound && fc.faces_outside() <= bound);
            let du = fc.tree.rdist[fc.u as usize] as i64;
            let dv = fc.tree.rdist[fc.v as usize] as i64;
            assert!((du - dv).abs() <= 1);
            assert_eq!(fc.cycle.len(), fc.p_u.len() + fc.p_v.len() - 1);
            for (k, &x) in fc.p_u.iter().enumerate() {
                assert_eq!(fc.tree.rdist[x as usize] as usize, k);
            }
            for (k, &x) in fc.p_v.iter().enumerate() {
                assert_eq!(fc.tree.rdist[x as usize] as usize, k);
            }
            let mut vs = fc.cycle.vertices().to_vec();
            vs.sort();
            vs.dedup();
            assert_eq!(vs.len(), fc.cycle.vertices().len());
        }
    }
}
