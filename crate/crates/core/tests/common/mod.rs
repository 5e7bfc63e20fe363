#![allow(dead_code)]

//! Shared helpers for integration tests: syndrome replay and a brute-force
//! minimum-weight reference built by enumerating every edge subset.

use windec::decoder::{Correction, DefectSet, WindowView};
use windec::graph::DecodingGraph;

/// XOR of the edges' real endpoints, as a bitmask over local vertices.
/// The boundary endpoint contributes nothing.
pub fn local_syndrome_mask(view: &WindowView<'_>, edge_indices: &[usize]) -> u64 {
    let n = view.num_real_vertices();
    assert!(n <= 64, "mask helper supports at most 64 local vertices");
    let mut mask = 0u64;
    for &i in edge_indices {
        let e = view.edges()[i];
        if e.a < n {
            mask ^= 1 << e.a;
        }
        if e.b < n {
            mask ^= 1 << e.b;
        }
    }
    mask
}

pub fn defect_mask(view: &WindowView<'_>, defects: &DefectSet) -> u64 {
    let locals = view.local_defects(defects).expect("defects inside window");
    let mut mask = 0u64;
    for v in locals {
        mask ^= 1 << v;
    }
    mask
}

/// True when the correction's edges, replayed inside the window, flip
/// exactly the given defects.
pub fn correction_matches_defects(
    view: &WindowView<'_>,
    correction: &Correction,
    defects: &DefectSet,
) -> bool {
    let n = view.num_real_vertices();
    let mut left = vec![false; n];
    for v in view.local_defects(defects).expect("defects inside window") {
        left[v] ^= true;
    }
    let mut visible = 0usize;
    for e in view.edges() {
        if correction.edges.binary_search(&e.fault_id).is_ok() {
            visible += 1;
            if e.a < n {
                left[e.a] ^= true;
            }
            if e.b < n {
                left[e.b] ^= true;
            }
        }
    }
    // Every corrected edge must be visible inside the window.
    visible == correction.edges.len() && left.iter().all(|&d| !d)
}

/// True when the correction flips exactly the defect bits of the full graph.
pub fn correction_matches_graph_defects(
    graph: &DecodingGraph,
    correction: &Correction,
    defects: &[bool],
) -> bool {
    let mut left = defects.to_vec();
    for &id in &correction.edges {
        let fault = &graph.faults[id];
        left[fault.a] ^= true;
        if let Some(b) = fault.b {
            left[b] ^= true;
        }
    }
    left.iter().all(|&d| !d)
}

/// Precomputed syndrome and weight of every subset of a window's edges.
/// Independent of any decoder: pure enumeration.
pub struct ExhaustiveTable {
    syndromes: Vec<u64>,
    weights: Vec<f64>,
}

impl ExhaustiveTable {
    pub fn build(view: &WindowView<'_>) -> Self {
        let edges = view.edges();
        let n = view.num_real_vertices();
        assert!(edges.len() <= 20, "exhaustive table is for tiny windows, got {} edges", edges.len());
        assert!(n <= 64);
        let mut edge_masks = Vec::with_capacity(edges.len());
        for e in edges {
            let mut mask = 0u64;
            if e.a < n {
                mask ^= 1 << e.a;
            }
            if e.b < n {
                mask ^= 1 << e.b;
            }
            edge_masks.push(mask);
        }
        let total = 1usize << edges.len();
        let mut syndromes = vec![0u64; total];
        let mut weights = vec![0.0f64; total];
        for m in 1..total {
            let low = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            syndromes[m] = syndromes[rest] ^ edge_masks[low];
            weights[m] = weights[rest] + edges[low].weight;
        }
        ExhaustiveTable { syndromes, weights }
    }

    /// Minimum-weight edge subset whose syndrome equals `target`, as
    /// (weight, subset bitmask); None when no subset matches.
    pub fn min_weight_for(&self, target: u64) -> Option<(f64, usize)> {
        let mut best: Option<(f64, usize)> = None;
        for m in 0..self.syndromes.len() {
            if self.syndromes[m] == target {
                let w = self.weights[m];
                if best.map_or(true, |(bw, _)| w < bw - 1e-12) {
                    best = Some((w, m));
                }
            }
        }
        best
    }
}

pub fn mask_to_indices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&i| mask & (1 << i) != 0).collect()
}
