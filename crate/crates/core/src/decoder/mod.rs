//! Inner decoders operating on one window's defect set: the union-find
//! decoder (production path) and an exact minimum-weight pairing oracle
//! (test path), both over a [`WindowView`] that encodes the window's
//! rough/smooth boundary semantics.

mod oracle;
mod union_find;

pub use oracle::ExactPairingOracle;
pub use union_find::{GrowthMode, UnionFindDecoder};

use crate::error::{Error, Result};
use crate::graph::DecodingGraph;
use crate::window::{BoundaryKind, Window};

/// Detector vertices flagged as defects (real or artificial), global ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefectSet {
    /// Sorted ascending.
    pub vertex_ids: Vec<usize>,
}

impl DefectSet {
    pub fn new(mut vertex_ids: Vec<usize>) -> Self {
        vertex_ids.sort_unstable();
        vertex_ids.dedup();
        DefectSet { vertex_ids }
    }

    /// Defects of `stream` restricted to the window's round interval.
    pub fn from_defect_bits(defects: &[bool], graph: &DecodingGraph, window: &Window) -> Self {
        let n_stab = graph.stabilizers_per_round();
        let lo = window.rounds.0 * n_stab;
        let hi = window.rounds.1 * n_stab;
        DefectSet {
            vertex_ids: (lo..hi).filter(|&v| defects[v]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_ids.is_empty()
    }
}

/// A set of fault edges pairing up defects, plus its logical parity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Correction {
    /// Global fault ids, sorted ascending.
    pub edges: Vec<usize>,
    pub logical_flip: bool,
}

impl Correction {
    pub fn from_edges(mut edges: Vec<usize>, graph: &DecodingGraph) -> Self {
        edges.sort_unstable();
        let logical_flip = edges
            .iter()
            .fold(false, |acc, &id| acc ^ graph.faults[id].is_logical);
        Correction { edges, logical_flip }
    }

    /// Merges corrections with disjoint edge sets (commit disjointness holds
    /// across windows by construction).
    pub fn merge_disjoint(&mut self, other: &Correction) {
        debug_assert!(other.edges.iter().all(|id| self.edges.binary_search(id).is_err()));
        self.edges.extend_from_slice(&other.edges);
        self.edges.sort_unstable();
        self.logical_flip ^= other.logical_flip;
    }

    pub fn weight(&self, graph: &DecodingGraph) -> f64 {
        self.edges.iter().map(|&id| graph.faults[id].weight).sum()
    }
}

/// Sum of edge weights of a correction.
pub fn correction_weight(c: &Correction, graph: &DecodingGraph) -> f64 {
    c.weight(graph)
}

/// An edge as seen from inside a window: endpoints are local indices, with
/// `LOCAL_BOUNDARY` standing for the virtual boundary vertex.
#[derive(Debug, Clone, Copy)]
pub struct ViewEdge {
    /// Underlying global fault id.
    pub fault_id: usize,
    pub a: usize,
    pub b: usize,
    pub weight: f64,
    pub is_logical: bool,
}

/// Local index of the boundary endpoint inside a view (== n_real).
pub fn local_boundary(n_real: usize) -> usize {
    n_real
}

/// A window-restricted graph: the detector vertices of the window's rounds,
/// every fault with both endpoints inside, space-boundary faults, and - at
/// rough time faces only - the time-like faults crossing the face, re-rooted
/// on the boundary vertex. Smooth faces admit no boundary edges.
pub struct WindowView<'g> {
    pub graph: &'g DecodingGraph,
    pub window: Window,
    first_vertex: usize,
    n_real: usize,
    edges: Vec<ViewEdge>,
    /// Adjacency per local vertex (boundary last): (other endpoint, edge index).
    adj: Vec<Vec<(usize, usize)>>,
}

impl<'g> WindowView<'g> {
    pub fn new(graph: &'g DecodingGraph, window: Window) -> Self {
        let n_stab = graph.stabilizers_per_round();
        let (start, end) = window.rounds;
        debug_assert!(start < end && end <= graph.rounds());
        let first_vertex = start * n_stab;
        let n_real = (end - start) * n_stab;

        let mut edges: Vec<ViewEdge> = Vec::new();
        let boundary = local_boundary(n_real);
        let mut push = |fault: &crate::graph::FaultEdge, a: usize, b: usize| {
            edges.push(ViewEdge {
                fault_id: fault.id,
                a,
                b,
                weight: fault.weight,
                is_logical: fault.is_logical,
            });
        };

        if window.bottom == BoundaryKind::Rough && start > 0 {
            // Time faults entering from below appear as boundary edges.
            for fault in graph.time_faults_after(start - 1) {
                push(fault, fault.b.unwrap() - first_vertex, boundary);
            }
        }
        for r in start..end {
            for fault in graph.space_faults(r) {
                let a = fault.a - first_vertex;
                let b = match fault.b {
                    Some(b) => b - first_vertex,
                    None => boundary,
                };
                push(fault, a, b);
            }
            if r + 1 < end {
                for fault in graph.time_faults_after(r) {
                    push(fault, fault.a - first_vertex, fault.b.unwrap() - first_vertex);
                }
            }
        }
        if window.top == BoundaryKind::Rough && end < graph.rounds() {
            for fault in graph.time_faults_after(end - 1) {
                push(fault, fault.a - first_vertex, boundary);
            }
        }

        // Deterministic edge order, and adjacency lists sorted by fault id.
        edges.sort_unstable_by_key(|e| e.fault_id);
        let mut adj = vec![Vec::new(); n_real + 1];
        for (idx, e) in edges.iter().enumerate() {
            adj[e.a].push((e.b, idx));
            adj[e.b].push((e.a, idx));
        }
        WindowView { graph, window, first_vertex, n_real, edges, adj }
    }

    /// Number of real (non-boundary) vertices in the view.
    pub fn num_real_vertices(&self) -> usize {
        self.n_real
    }

    pub fn local_boundary(&self) -> usize {
        self.n_real
    }

    pub fn edges(&self) -> &[ViewEdge] {
        &self.edges
    }

    pub fn neighbors(&self, local: usize) -> &[(usize, usize)] {
        &self.adj[local]
    }

    pub fn to_local(&self, vertex: usize) -> usize {
        vertex - self.first_vertex
    }

    pub fn to_global(&self, local: usize) -> usize {
        local + self.first_vertex
    }

    /// Maps the defect set into local indices, rejecting ids outside the window.
    pub fn local_defects(&self, defects: &DefectSet) -> Result<Vec<usize>> {
        let mut local = Vec::with_capacity(defects.len());
        for &v in &defects.vertex_ids {
            if v < self.first_vertex || v >= self.first_vertex + self.n_real {
                return Err(Error::Contract(format!(
                    "defect vertex {v} lies outside window rounds [{}, {})",
                    self.window.rounds.0, self.window.rounds.1
                )));
            }
            local.push(v - self.first_vertex);
        }
        Ok(local)
    }

    /// Builds a Correction (global ids, logical parity) from view edge indices.
    pub fn correction_from_edge_indices(&self, indices: impl IntoIterator<Item = usize>) -> Correction {
        let mut edges: Vec<usize> = indices.into_iter().map(|i| self.edges[i].fault_id).collect();
        edges.sort_unstable();
        let logical_flip = edges
            .iter()
            .fold(false, |acc, &id| acc ^ self.graph.faults[id].is_logical);
        Correction { edges, logical_flip }
    }
}

/// A windowed decoder: pure function of (view, defects).
pub trait InnerDecoder: Sync {
    fn decode(&self, view: &WindowView<'_>, defects: &DefectSet) -> Result<Correction>;
    fn name(&self) -> &'static str;
}
