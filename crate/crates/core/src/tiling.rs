//! Commit-region tilings and their colorings.
//!
//! Windowed decoding generalizes to carving space-time into regions such
//! that same-colored regions are far apart: all regions of one color decode
//! independently in one pass, and passes run in color order. The 1D-in-time
//! case is exactly the parallel window layout (2 colors); the 2D spatial
//! case uses a hexagonal Voronoi tiling of a triangular center lattice
//! (3 colors). In general a D-dimensional tiling needs D + 1 colors.
//!
//! Distances are Euclidean in units where consecutive rounds are 1 apart;
//! space coordinates (stored on a doubled integer grid) are halved so that
//! adjacent checks are also 1 apart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DecodingGraph;
use crate::window::{BoundaryKind, Window, WindowLayer};

/// A committed region of space-time: vertex and fault-edge sets plus the
/// color deciding in which pass it decodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub id: usize,
    pub color: usize,
    /// Round interval the region covers (1D tilings).
    pub rounds: (usize, usize),
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionPartition {
    pub regions: Vec<Region>,
    pub num_colors: usize,
}

/// Position of a fault edge in scaled space-time: (x/2, y/2, t-midpoint).
pub fn edge_position(graph: &DecodingGraph, fault_id: usize) -> (f64, f64, f64) {
    let f = &graph.faults[fault_id];
    (f.space_mid.0 as f64 / 2.0, f.space_mid.1 as f64 / 2.0, f.time_mid)
}

fn dist3(a: (f64, f64, f64), b: (f64, f64, f64)) -> f64 {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    let dt = a.2 - b.2;
    (dx * dx + dy * dy + dt * dt).sqrt()
}

/// Two-colors a parallel window layout along time: regions are the commit
/// intervals, A windows color 0 and B windows color 1. Vertices are binned
/// by round, fault edges by time midpoint, so the regions partition the
/// whole graph.
pub fn color_1d_time(graph: &DecodingGraph, layout: &[Window]) -> Result<RegionPartition> {
    let n_stab = graph.stabilizers_per_round();
    let mut regions = Vec::with_capacity(layout.len());
    for (id, window) in layout.iter().enumerate() {
        let color = match window.layer {
            WindowLayer::A { .. } => 0,
            WindowLayer::B { .. } => 1,
            WindowLayer::Sliding { .. } => {
                return Err(Error::InvalidParameter(
                    "1D time coloring is defined for two-layer parallel layouts".into(),
                ))
            }
        };
        let (lo, hi) = window.commit;
        let vertices: Vec<usize> = (lo * n_stab..hi * n_stab).collect();
        let edges: Vec<usize> = graph
            .faults
            .iter()
            .filter(|f| f.time_mid >= lo as f64 && f.time_mid < hi as f64)
            .map(|f| f.id)
            .collect();
        regions.push(Region { id, color, rounds: (lo, hi), vertices, edges });
    }
    Ok(RegionPartition { regions, num_colors: 2 })
}

impl RegionPartition {
    /// Checks that vertex and edge sets are disjoint and jointly cover the
    /// graph.
    pub fn validate_partition(&self, graph: &DecodingGraph) -> Result<()> {
        let mut vertex_seen = vec![false; graph.num_vertices()];
        let mut edge_seen = vec![false; graph.num_faults()];
        for region in &self.regions {
            for &v in &region.vertices {
                if vertex_seen[v] {
                    return Err(Error::Validation(format!(
                        "vertex {v} assigned to more than one region"
                    )));
                }
                vertex_seen[v] = true;
            }
            for &e in &region.edges {
                if edge_seen[e] {
                    return Err(Error::Validation(format!(
                        "edge {e} assigned to more than one region"
                    )));
                }
                edge_seen[e] = true;
            }
        }
        if let Some(v) = vertex_seen.iter().position(|&s| !s) {
            return Err(Error::Validation(format!("vertex {v} not covered by any region")));
        }
        if let Some(e) = edge_seen.iter().position(|&s| !s) {
            return Err(Error::Validation(format!("edge {e} not covered by any region")));
        }
        Ok(())
    }

    /// Smallest distance between fault edges of two distinct same-color
    /// regions; None if no such pair exists.
    pub fn min_same_color_separation(&self, graph: &DecodingGraph) -> Option<f64> {
        let mut best: Option<f64> = None;
        for a in &self.regions {
            for b in &self.regions {
                if b.id <= a.id || a.color != b.color {
                    continue;
                }
                for &ea in &a.edges {
                    let pa = edge_position(graph, ea);
                    for &eb in &b.edges {
                        let d = dist3(pa, edge_position(graph, eb));
                        best = Some(best.map_or(d, |cur| cur.min(d)));
                    }
                }
            }
        }
        best
    }

    /// Verifies that distinct same-color regions keep at least `radius`
    /// between their edge sets.
    pub fn check_separation(&self, graph: &DecodingGraph, radius: f64) -> Result<()> {
        if let Some(gap) = self.min_same_color_separation(graph) {
            if gap < radius - 1e-9 {
                return Err(Error::Validation(format!(
                    "same-color regions come within {gap}, need {radius}"
                )));
            }
        }
        Ok(())
    }
}

/// Fault edges within time-distance `radius` of the region's commit
/// interval that are still undecided when the region's pass runs: edges of
/// earlier-colored regions are already committed, and same-colored regions
/// decode concurrently, so both are excluded along with the region's own
/// edges.
pub fn buffer_edges(
    graph: &DecodingGraph,
    partition: &RegionPartition,
    region_id: usize,
    radius: f64,
) -> Result<Vec<usize>> {
    let region = partition
        .regions
        .get(region_id)
        .ok_or_else(|| Error::InvalidParameter(format!("no region {region_id}")))?;
    let mut excluded = vec![false; graph.num_faults()];
    for other in &partition.regions {
        if other.color <= region.color {
            for &e in &other.edges {
                excluded[e] = true;
            }
        }
    }
    // Round t owns the continuous slab [t - 1/2, t + 1/2), so the commit
    // interval in continuous time is [lo - 1/2, hi - 1/2]; inflate it by
    // the buffer radius.
    let lo = region.rounds.0 as f64 - 0.5 - radius;
    let hi = region.rounds.1 as f64 - 0.5 + radius;
    Ok(graph
        .faults
        .iter()
        .filter(|f| !excluded[f.id] && f.time_mid >= lo && f.time_mid <= hi)
        .map(|f| f.id)
        .collect())
}

/// Face assignment rule shared by all tilings: faces toward later-colored
/// neighbors stay rough (their side is still undecided), faces toward
/// earlier-colored neighbors and external faces are smooth.
pub fn face_kind(own_color: usize, neighbor_color: Option<usize>) -> BoundaryKind {
    match neighbor_color {
        Some(c) if c > own_color => BoundaryKind::Rough,
        _ => BoundaryKind::Smooth,
    }
}

/// Per-region (bottom, top) faces of a 1D time partition, regions in time
/// order.
pub fn assign_boundaries_1d(partition: &RegionPartition) -> Vec<(BoundaryKind, BoundaryKind)> {
    let n = partition.regions.len();
    (0..n)
        .map(|i| {
            let own = partition.regions[i].color;
            let below = i.checked_sub(1).map(|j| partition.regions[j].color);
            let above = (i + 1 < n).then(|| partition.regions[i + 1].color);
            (face_kind(own, below), face_kind(own, above))
        })
        .collect()
}

/// One hexagonal Voronoi cell of the triangular center lattice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HexCell {
    pub id: usize,
    /// Axial lattice coordinates of the center.
    pub axial: (i64, i64),
    pub center: (f64, f64),
    /// (q - r) mod 3; axial neighbors never share a color.
    pub color: usize,
}

/// Hexagonal tiling of a rectangle [0, extent.0] x [0, extent.1].
///
/// Centers form a triangular lattice with spacing `sqrt(3) * cell_size`, so
/// each Voronoi cell is a hexagon of circumradius `cell_size`. Same-colored
/// cells keep a gap of at least `cell_size` between their boundaries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HexTiling {
    pub cells: Vec<HexCell>,
    pub cell_size: f64,
    /// Center lattice spacing: `sqrt(3) * cell_size`.
    pub spacing: f64,
    pub extent: (f64, f64),
    pub num_colors: usize,
}

pub fn color_hex_2d(extent: (f64, f64), cell_size: f64) -> Result<HexTiling> {
    if !(cell_size > 0.0) || !cell_size.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "cell size must be strictly positive, got {cell_size}"
        )));
    }
    if !(extent.0 > 0.0) || !(extent.1 > 0.0) || !extent.0.is_finite() || !extent.1.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "extent must be strictly positive, got {extent:?}"
        )));
    }
    let s = 3f64.sqrt() * cell_size;
    // Keep every cell whose center lies within one circumradius of the
    // rectangle, so the rectangle is fully covered by kept cells.
    let margin = cell_size;
    let r_min = ((-margin) / (s * 3f64.sqrt() / 2.0)).floor() as i64 - 1;
    let r_max = ((extent.1 + margin) / (s * 3f64.sqrt() / 2.0)).ceil() as i64 + 1;
    let mut cells = Vec::new();
    for r in r_min..=r_max {
        let y = s * (3f64.sqrt() / 2.0) * r as f64;
        if y < -margin || y > extent.1 + margin {
            continue;
        }
        let q_min = ((-margin) / s - r as f64 / 2.0).floor() as i64 - 1;
        let q_max = ((extent.0 + margin) / s - r as f64 / 2.0).ceil() as i64 + 1;
        for q in q_min..=q_max {
            let x = s * (q as f64 + r as f64 / 2.0);
            if x < -margin || x > extent.0 + margin {
                continue;
            }
            let color = ((q - r).rem_euclid(3)) as usize;
            cells.push(HexCell { id: 0, axial: (q, r), center: (x, y), color });
        }
    }
    if cells.is_empty() {
        return Err(Error::InvalidParameter(
            "extent too small to tile with this cell size".into(),
        ));
    }
    cells.sort_by(|a, b| (a.axial.1, a.axial.0).cmp(&(b.axial.1, b.axial.0)));
    for (id, cell) in cells.iter_mut().enumerate() {
        cell.id = id;
    }
    Ok(HexTiling { cells, cell_size, spacing: s, extent, num_colors: 3 })
}

impl HexTiling {
    /// Voronoi cell owning a point: nearest center, ties to the lowest id.
    pub fn cell_containing(&self, point: (f64, f64)) -> usize {
        let mut best = (f64::INFINITY, usize::MAX);
        for cell in &self.cells {
            let dx = point.0 - cell.center.0;
            let dy = point.1 - cell.center.1;
            let d = dx * dx + dy * dy;
            if d < best.0 - 1e-12 {
                best = (d, cell.id);
            }
        }
        best.1
    }

    /// Measured minimum center distance between distinct same-color cells.
    pub fn min_same_color_center_distance(&self) -> Option<f64> {
        let mut best: Option<f64> = None;
        for a in &self.cells {
            for b in &self.cells {
                if b.id <= a.id || a.color != b.color {
                    continue;
                }
                let dx = a.center.0 - b.center.0;
                let dy = a.center.1 - b.center.1;
                let d = (dx * dx + dy * dy).sqrt();
                best = Some(best.map_or(d, |cur| cur.min(d)));
            }
        }
        best
    }

    /// The guaranteed boundary-to-boundary gap between same-color cells:
    /// center distance `sqrt(3) s` minus two circumradii equals `cell_size`.
    pub fn same_color_cell_gap(&self) -> f64 {
        3f64.sqrt() * self.spacing - 2.0 * self.cell_size
    }

    fn index_of(&self, axial: (i64, i64)) -> Option<usize> {
        self.cells
            .binary_search_by(|c| (c.axial.1, c.axial.0).cmp(&(axial.1, axial.0)))
            .ok()
            .map(|i| self.cells[i].id)
    }
}

/// The six axial neighbor offsets of a hex cell.
pub const HEX_DIRECTIONS: [(i64, i64); 6] =
    [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub direction: (i64, i64),
    pub neighbor: Option<usize>,
    pub kind: BoundaryKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellFaces {
    pub cell: usize,
    pub faces: Vec<Face>,
}

/// Assigns rough/smooth to every face of every cell: rough toward
/// later-colored neighbors, smooth toward earlier ones and the outside.
pub fn assign_boundaries(tiling: &HexTiling) -> Vec<CellFaces> {
    tiling
        .cells
        .iter()
        .map(|cell| {
            let faces = HEX_DIRECTIONS
                .iter()
                .map(|&(dq, dr)| {
                    let axial = (cell.axial.0 + dq, cell.axial.1 + dr);
                    let neighbor = tiling.index_of(axial);
                    let kind =
                        face_kind(cell.color, neighbor.map(|id| tiling.cells[id].color));
                    Face { direction: (dq, dr), neighbor, kind }
                })
                .collect();
            CellFaces { cell: cell.id, faces }
        })
        .collect()
}

/// A hex cell extruded through a block of rounds: the 3D region a spatially
/// tiled decode would commit in one pass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prism {
    pub cell: usize,
    pub color: usize,
    pub base_center: (f64, f64),
    pub rounds: (usize, usize),
}

pub fn extrude_to_prisms(tiling: &HexTiling, rounds: usize) -> Vec<Prism> {
    tiling
        .cells
        .iter()
        .map(|c| Prism {
            cell: c.id,
            color: c.color,
            base_center: c.center,
            rounds: (0, rounds),
        })
        .collect()
}
