//! Union-find decoder: grows clusters around defects, freezes them on even
//! parity or boundary contact, then peels a spanning forest of the grown
//! region to read off the correction.

use std::mem;

use super::{Correction, DefectSet, InnerDecoder, WindowView};
use crate::error::{Error, Result};

/// How much support an edge gains per growth step of an incident cluster.
/// Half-edge growth lets two approaching clusters meet in the middle and
/// generally yields lighter corrections; full-edge growth is coarser but
/// still valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthMode {
    HalfEdge,
    FullEdge,
}

#[derive(Debug, Clone)]
pub struct UnionFindDecoder {
    pub growth: GrowthMode,
}

impl Default for UnionFindDecoder {
    fn default() -> Self {
        UnionFindDecoder { growth: GrowthMode::HalfEdge }
    }
}

impl UnionFindDecoder {
    pub fn new(growth: GrowthMode) -> Self {
        UnionFindDecoder { growth }
    }
}

const FULL_SUPPORT: u8 = 2;

struct Clusters {
    parent: Vec<usize>,
    size: Vec<usize>,
    parity: Vec<bool>,
    has_boundary: Vec<bool>,
    min_vertex: Vec<usize>,
    /// Per-root worklist of frontier edge indices.
    frontier: Vec<Vec<usize>>,
}

impl Clusters {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Weighted union; ties keep the smaller root id. Returns the new root.
    fn union(&mut self, a: usize, b: usize) -> usize {
        debug_assert!(a != b && self.parent[a] == a && self.parent[b] == b);
        let (big, small) = if self.size[a] > self.size[b] || (self.size[a] == self.size[b] && a < b)
        {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.parity[big] ^= self.parity[small];
        self.has_boundary[big] |= self.has_boundary[small];
        self.min_vertex[big] = self.min_vertex[big].min(self.min_vertex[small]);
        let moved = mem::take(&mut self.frontier[small]);
        self.frontier[big].extend(moved);
        big
    }

    fn is_active(&self, root: usize) -> bool {
        self.parity[root] && !self.has_boundary[root]
    }
}

impl InnerDecoder for UnionFindDecoder {
    fn decode(&self, view: &WindowView<'_>, defects: &DefectSet) -> Result<Correction> {
        let local_defects = view.local_defects(defects)?;
        if local_defects.is_empty() {
            return Ok(Correction::default());
        }

        let n_real = view.num_real_vertices();
        let boundary = view.local_boundary();
        let n = n_real + 1;
        let n_edges = view.edges().len();

        let mut clusters = Clusters {
            parent: (0..n).collect(),
            size: vec![1; n],
            parity: vec![false; n],
            has_boundary: vec![false; n],
            min_vertex: (0..n).collect(),
            frontier: vec![Vec::new(); n],
        };
        clusters.has_boundary[boundary] = true;
        let mut in_cluster = vec![false; n];
        in_cluster[boundary] = true;
        let mut is_defect = vec![false; n];
        for &v in &local_defects {
            is_defect[v] = true;
            clusters.parity[v] = true;
            in_cluster[v] = true;
            clusters.frontier[v] = view.neighbors(v).iter().map(|&(_, e)| e).collect();
        }

        let mut support = vec![0u8; n_edges];
        let mut settled = vec![false; n_edges];
        let step: u8 = match self.growth {
            GrowthMode::HalfEdge => 1,
            GrowthMode::FullEdge => 2,
        };

        // Growth: each pass grows every active (odd, boundary-free) cluster
        // once, in min-vertex order. Support is monotone and merges only
        // shrink the root set, so the pass count is bounded.
        let max_passes = 2 * n_edges + n + 2;
        let mut passes = 0usize;
        loop {
            let mut active: Vec<(usize, usize)> = (0..n)
                .filter(|&v| clusters.parent[v] == v && clusters.is_active(v))
                .map(|v| (clusters.min_vertex[v], v))
                .collect();
            if active.is_empty() {
                break;
            }
            passes += 1;
            if passes > max_passes {
                return Err(Error::Integrity(
                    "union-find growth failed to converge".into(),
                ));
            }
            active.sort_unstable();
            for (_, root) in active {
                let mut cur = clusters.find(root);
                if !clusters.is_active(cur) {
                    continue;
                }
                let worklist = mem::take(&mut clusters.frontier[cur]);
                let mut keep = Vec::with_capacity(worklist.len());
                for eidx in worklist {
                    if settled[eidx] {
                        continue;
                    }
                    let edge = view.edges()[eidx];
                    let fa = clusters.find(edge.a);
                    let fb = clusters.find(edge.b);
                    if fa == fb {
                        // Interior edge: growing it cannot connect anything new.
                        settled[eidx] = true;
                        continue;
                    }
                    support[eidx] = (support[eidx] + step).min(FULL_SUPPORT);
                    if support[eidx] < FULL_SUPPORT {
                        keep.push(eidx);
                        continue;
                    }
                    settled[eidx] = true;
                    let (other_vertex, other_root) =
                        if fa == cur { (edge.b, fb) } else { (edge.a, fa) };
                    debug_assert!(fa == cur || fb == cur);
                    if !in_cluster[other_vertex] {
                        in_cluster[other_vertex] = true;
                        keep.extend(view.neighbors(other_vertex).iter().map(|&(_, e)| e));
                    }
                    cur = clusters.union(cur, other_root);
                }
                clusters.frontier[cur].extend(keep);
            }
        }

        // Peeling: BFS spanning forest of the fully grown edges, boundary
        // component first, then remaining components by smallest vertex.
        let mut grown_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (eidx, edge) in view.edges().iter().enumerate() {
            if support[eidx] == FULL_SUPPORT {
                grown_adj[edge.a].push((edge.b, eidx));
                grown_adj[edge.b].push((edge.a, eidx));
            }
        }
        let mut visited = vec![false; n];
        let mut defect_left = is_defect;
        let mut picked: Vec<usize> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        if !grown_adj[boundary].is_empty() {
            roots.push(boundary);
        }
        roots.extend((0..n_real).filter(|&v| !grown_adj[v].is_empty()));

        let mut order: Vec<usize> = Vec::new();
        let mut parent_of: Vec<Option<(usize, usize)>> = vec![None; n];
        for root in roots {
            if visited[root] {
                continue;
            }
            order.clear();
            visited[root] = true;
            order.push(root);
            let mut head = 0;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &(u, eidx) in &grown_adj[v] {
                    if !visited[u] {
                        visited[u] = true;
                        parent_of[u] = Some((v, eidx));
                        order.push(u);
                    }
                }
            }
            for &v in order.iter().rev() {
                if v == root {
                    break;
                }
                if defect_left[v] {
                    let (p, eidx) = parent_of[v].expect("non-root has a tree parent");
                    picked.push(eidx);
                    defect_left[v] = false;
                    defect_left[p] ^= true;
                }
            }
            if root != boundary && defect_left[root] {
                return Err(Error::Integrity(
                    "peeling left an unresolved defect in an even cluster".into(),
                ));
            }
        }
        if let Some(v) = (0..n_real).find(|&v| defect_left[v]) {
            return Err(Error::Integrity(format!(
                "peeling left unresolved defect at local vertex {v}"
            )));
        }

        Ok(view.correction_from_edge_indices(picked))
    }

    fn name(&self) -> &'static str {
        "union_find"
    }
}
