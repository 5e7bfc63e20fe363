//! Exact decoder for small defect sets: shortest paths between defects (and
//! from each defect to the rough boundary), then exhaustive search over all
//! perfect pairings, allowing any subset of defects to match the boundary.
//! Intended as a ground-truth oracle; cost grows factorially in the defect
//! count, hence the hard cap.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Correction, DefectSet, InnerDecoder, WindowView};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct ExactPairingOracle {
    pub max_defects: usize,
}

impl Default for ExactPairingOracle {
    fn default() -> Self {
        ExactPairingOracle { max_defects: 14 }
    }
}

/// Total order on f64 path lengths (no NaNs are produced here).
#[derive(Debug, Clone, Copy, PartialEq)]
struct Dist(f64);

impl Eq for Dist {}
impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Dist {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Shortest paths from `source` to all real vertices and to the boundary.
/// Paths run through real vertices only; the boundary is a terminal.
struct ShortestPaths {
    dist: Vec<f64>,
    /// (predecessor vertex, view edge index) per reached vertex.
    prev: Vec<Option<(usize, usize)>>,
    boundary_dist: f64,
    /// Last hop of the best boundary path.
    boundary_prev: Option<(usize, usize)>,
}

fn dijkstra(view: &WindowView<'_>, source: usize) -> ShortestPaths {
    let n = view.num_real_vertices();
    let boundary = view.local_boundary();
    let mut dist = vec![f64::INFINITY; n];
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut done = vec![false; n];
    let mut boundary_dist = f64::INFINITY;
    let mut boundary_prev = None;
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((Dist(0.0), source)));
    while let Some(Reverse((Dist(d), v))) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for &(u, eidx) in view.neighbors(v) {
            let nd = d + view.edges()[eidx].weight;
            if u == boundary {
                let better = nd < boundary_dist
                    || (nd == boundary_dist
                        && boundary_prev.is_some_and(|(pv, pe)| (v, eidx) < (pv, pe)));
                if better {
                    boundary_dist = nd;
                    boundary_prev = Some((v, eidx));
                }
                continue;
            }
            let better = nd < dist[u]
                || (nd == dist[u] && prev[u].is_some_and(|(pv, pe)| (v, eidx) < (pv, pe)));
            if better {
                dist[u] = nd;
                prev[u] = Some((v, eidx));
                heap.push(Reverse((Dist(nd), u)));
            }
        }
    }
    ShortestPaths { dist, prev, boundary_dist, boundary_prev }
}

/// Walks the predecessor chain from `target` back to the Dijkstra source,
/// collecting view edge indices.
fn path_edges(paths: &ShortestPaths, mut target: usize, out: &mut Vec<usize>) {
    while let Some((pv, pe)) = paths.prev[target] {
        out.push(pe);
        target = pv;
    }
}

struct PairingSearch<'a> {
    pair_cost: &'a [Vec<f64>],
    boundary_cost: &'a [f64],
    k: usize,
    best_cost: f64,
    best: Vec<Option<usize>>,
    current: Vec<Option<usize>>,
    assigned: Vec<bool>,
}

impl PairingSearch<'_> {
    /// Exhaustive recursion: the lowest unassigned defect matches either the
    /// boundary or a later unassigned defect. First strict improvement wins,
    /// so ties resolve toward boundary matches of low-index defects.
    fn recurse(&mut self, cost_so_far: f64) {
        if cost_so_far >= self.best_cost {
            return;
        }
        let Some(i) = (0..self.k).find(|&i| !self.assigned[i]) else {
            self.best_cost = cost_so_far;
            self.best = self.current.clone();
            return;
        };
        self.assigned[i] = true;
        if self.boundary_cost[i].is_finite() {
            self.current[i] = None;
            self.recurse(cost_so_far + self.boundary_cost[i]);
        }
        for j in (i + 1)..self.k {
            if self.assigned[j] || !self.pair_cost[i][j].is_finite() {
                continue;
            }
            self.assigned[j] = true;
            self.current[i] = Some(j);
            self.recurse(cost_so_far + self.pair_cost[i][j]);
            self.assigned[j] = false;
        }
        self.assigned[i] = false;
    }
}

impl InnerDecoder for ExactPairingOracle {
    fn decode(&self, view: &WindowView<'_>, defects: &DefectSet) -> Result<Correction> {
        let local = view.local_defects(defects)?;
        let k = local.len();
        if k == 0 {
            return Ok(Correction::default());
        }
        if k > self.max_defects {
            return Err(Error::TooManyDefects { n: k, max: self.max_defects });
        }

        let paths: Vec<ShortestPaths> = local.iter().map(|&v| dijkstra(view, v)).collect();
        let pair_cost: Vec<Vec<f64>> = (0..k)
            .map(|i| (0..k).map(|j| paths[i].dist[local[j]]).collect())
            .collect();
        let boundary_cost: Vec<f64> = (0..k).map(|i| paths[i].boundary_dist).collect();

        let mut search = PairingSearch {
            pair_cost: &pair_cost,
            boundary_cost: &boundary_cost,
            k,
            best_cost: f64::INFINITY,
            best: Vec::new(),
            current: vec![None; k],
            assigned: vec![false; k],
        };
        search.recurse(0.0);
        if search.best.is_empty() {
            return Err(Error::Integrity(
                "defect set admits no pairing; window graph is disconnected from its rough faces"
                    .into(),
            ));
        }

        // Realize the pairing as an edge set; overlapping paths cancel.
        let mut raw_edges: Vec<usize> = Vec::new();
        let mut assigned = vec![false; k];
        for i in 0..k {
            if assigned[i] {
                continue;
            }
            assigned[i] = true;
            match search.best[i] {
                Some(j) => {
                    assigned[j] = true;
                    path_edges(&paths[i], local[j], &mut raw_edges);
                }
                None => {
                    let (pv, pe) = paths[i]
                        .boundary_prev
                        .expect("finite boundary cost implies a recorded last hop");
                    raw_edges.push(pe);
                    path_edges(&paths[i], pv, &mut raw_edges);
                }
            }
        }
        raw_edges.sort_unstable();
        let mut kept: Vec<usize> = Vec::new();
        let mut idx = 0;
        while idx < raw_edges.len() {
            let run = raw_edges[idx..].iter().take_while(|&&e| e == raw_edges[idx]).count();
            if run % 2 == 1 {
                kept.push(raw_edges[idx]);
            }
            idx += run;
        }
        Ok(view.correction_from_edge_indices(kept))
    }

    fn name(&self) -> &'static str {
        "exact_pairing"
    }
}
