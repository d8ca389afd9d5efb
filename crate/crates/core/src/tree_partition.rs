//! Balanced edge separators in bounded-degree trees.

use crate::error::{Error, Result};

/// An unrooted tree on nodes `0..m` with labelled edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeTree {
    m: usize,
    offsets: Vec<u32>,
    // (neighbor, edge index) pairs
    adj: Vec<(u32, u32)>,
    edges: Vec<(u32, u32)>,
    max_degree: usize,
}

/// Result of [`balanced_edge_cut`]: removing edge `edge` (between `parent`
/// and `child`) leaves `child_side` nodes under `child`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeCut {
    pub edge: usize,
    pub parent: u32,
    pub child: u32,
    pub child_side: usize,
    pub parent_side: usize,
}

impl TreeCut {
    pub fn larger_side(&self) -> usize {
        self.child_side.max(self.parent_side)
    }
}

impl FreeTree {
    /// Builds a tree from an edge list, checking it is connected and acyclic.
    /// The degree bound is the actual maximum degree, but never below 2.
    pub fn from_edges(m: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::NotATree("no nodes".into()));
        }
        if edges.len() + 1 != m {
            return Err(Error::NotATree(format!(
                "{} nodes need {} edges, got {}",
                m,
                m - 1,
                edges.len()
            )));
        }
        let mut deg = vec![0u32; m + 1];
        for &(a, b) in edges {
            if a as usize >= m || b as usize >= m {
                return Err(Error::NotATree(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::NotATree(format!("self-loop at {a}")));
            }
            deg[a as usize + 1] += 1;
            deg[b as usize + 1] += 1;
        }
        let max_degree = deg.iter().copied().max().unwrap_or(0).max(2) as usize;
        for i in 0..m {
            deg[i + 1] += deg[i];
        }
        let offsets = deg;
        let mut fill = offsets.clone();
        let mut adj = vec![(0u32, 0u32); 2 * edges.len()];
        for (e, &(a, b)) in edges.iter().enumerate() {
            adj[fill[a as usize] as usize] = (b, e as u32);
            fill[a as usize] += 1;
            adj[fill[b as usize] as usize] = (a, e as u32);
            fill[b as usize] += 1;
        }
        let tree = FreeTree {
            m,
            offsets,
            adj,
            edges: edges.to_vec(),
            max_degree,
        };
        // m - 1 edges plus connectivity implies acyclic.
        let mut seen = vec![false; m];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in tree.neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != m {
            return Err(Error::NotATree(format!("only {count} of {m} nodes connected")));
        }
        Ok(tree)
    }

    /// Loosens the degree bound used by [`balanced_edge_cut`].
    pub fn with_degree_bound(mut self, d: usize) -> Result<Self> {
        if d < self.max_degree {
            return Err(Error::NotATree(format!(
                "degree bound {d} below actual maximum degree {}",
                self.max_degree
            )));
        }
        self.max_degree = d;
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.m
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// `(neighbor, edge index)` pairs of node `x`.
    pub fn neighbors(&self, x: u32) -> &[(u32, u32)] {
        &self.adj[self.offsets[x as usize] as usize..self.offsets[x as usize + 1] as usize]
    }

    /// `⌈(1 - 1/d)·m⌉`, the largest side a balanced cut may leave.
    pub fn balance_bound(&self) -> usize {
        balance_bound(self.m, self.max_degree)
    }
}

pub fn balance_bound(m: usize, d: usize) -> usize {
    // Wide arithmetic: a user-supplied degree bound may be huge.
    ((d as u128 - 1) * m as u128).div_ceil(d as u128) as usize
}

/// Read access to a tree, so a cut can run on trees stored in other shapes.
pub trait TreeView {
    fn node_count(&self) -> usize;
    /// Degree bound `d` used for the balance bound.
    fn max_degree(&self) -> usize;
    /// Calls `visit(neighbor, edge id)` for every edge at `x`.
    fn for_each_neighbor(&self, x: u32, visit: impl FnMut(u32, u32));
}

impl TreeView for FreeTree {
    fn node_count(&self) -> usize {
        self.m
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn for_each_neighbor(&self, x: u32, mut visit: impl FnMut(u32, u32)) {
        for &(y, e) in self.neighbors(x) {
            visit(y, e);
        }
    }
}

/// A cut together with the preorder it was found in; the child's subtree is
/// a contiguous run of that order.
#[derive(Debug, Clone)]
pub struct RootedCut {
    pub cut: TreeCut,
    order: Vec<u32>,
    child_at: usize,
}

impl RootedCut {
    /// Nodes on the child's side of the cut.
    pub fn child_subtree(&self) -> &[u32] {
        &self.order[self.child_at..self.child_at + self.cut.child_side]
    }
}

/// Finds an edge whose removal leaves two trees with at most
/// `⌈(1 - 1/d)·m⌉` nodes each.
///
/// Roots the tree at node 0 and walks from the root into the heaviest child
/// (smallest id on ties) until the child's subtree fits the bound.
pub fn balanced_edge_cut(t: &FreeTree) -> Result<TreeCut> {
    rooted_cut(t).map(|r| r.cut)
}

/// [`balanced_edge_cut`] on any [`TreeView`], keeping the traversal order.
/// The view must be a tree; this is not rechecked.
pub fn rooted_cut<T: TreeView>(t: &T) -> Result<RootedCut> {
    let m = t.node_count();
    if m < 2 {
        return Err(Error::SingleNode);
    }
    let bound = balance_bound(m, t.max_degree());

    // Iterative DFS preorder; subtree sizes accumulate in reverse preorder.
    let mut parent = vec![u32::MAX; m];
    let mut parent_edge = vec![u32::MAX; m];
    let mut order = Vec::with_capacity(m);
    let mut stack = vec![0u32];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        t.for_each_neighbor(x, |y, e| {
            if parent[y as usize] == u32::MAX && y != 0 {
                parent[y as usize] = x;
                parent_edge[y as usize] = e;
                stack.push(y);
            }
        });
    }
    if order.len() != m {
        return Err(Error::NotATree(format!("only {} of {m} nodes connected", order.len())));
    }
    let mut size = vec![1u32; m];
    for &x in order.iter().skip(1).rev() {
        size[parent[x as usize] as usize] += size[x as usize];
    }

    let mut x = 0u32;
    loop {
        let mut heaviest: Option<u32> = None;
        t.for_each_neighbor(x, |y, _| {
            if parent[y as usize] != x || y == 0 {
                return;
            }
            heaviest = match heaviest {
                None => Some(y),
                Some(h) => {
                    let (sy, sh) = (size[y as usize], size[h as usize]);
                    if sy > sh || (sy == sh && y < h) {
                        Some(y)
                    } else {
                        Some(h)
                    }
                }
            };
        });
        let y = heaviest.ok_or_else(|| Error::Internal("tree walk reached a leaf".into()))?;
        let s = size[y as usize] as usize;
        if s <= bound {
            let child_at = order.iter().position(|&z| z == y).expect("every node is in the order");
            return Ok(RootedCut {
                cut: TreeCut {
                    edge: parent_edge[y as usize] as usize,
                    parent: x,
                    child: y,
                    child_side: s,
                    parent_side: m - s,
                },
                order,
                child_at,
            });
        }
        x = y;
    }
}
