//! Decoding-graph construction for repetition and rotated planar codes under
//! phenomenological noise, plus error sampling and syndrome extraction.
//!
//! Only the X-error (single-basis) decoding problem is modeled; the Z problem
//! is symmetric. Detectors are the Z-type checks, one vertex per check per
//! round. A data error inside round r toggles the adjacent checks of round r
//! (a space-like edge); a measurement error at round r toggles the defects of
//! rounds r and r+1 (a time-like edge). The final round's check values come
//! from the transversal data readout, so no time-like edge leaves the last
//! round and the global top face is smooth, matching the smooth Z-basis
//! initialization at round 0.
//!
//! Rotated-planar orientation convention (fixed across all experiments):
//! data qubits sit at doubled coordinates (2qx, 2qy) for qx, qy in 0..d.
//! The plaquette with lower-left qubit (px, py) is Z-type iff px+py is even;
//! weight-2 Z checks survive only on the bottom (py = -1) and top (py = d-1)
//! edges, so X error chains terminate on the left (qx = 0) and right
//! (qx = d-1) columns. Those are the rough sides for X; the logical X
//! observable crosses from left to right, and the cut tracking it is the set
//! of left-column boundary faults.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Code family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeFamily {
    Repetition,
    RotatedPlanar,
}

impl CodeFamily {
    pub fn name(self) -> &'static str {
        match self {
            CodeFamily::Repetition => "repetition",
            CodeFamily::RotatedPlanar => "rotated_planar",
        }
    }
}

impl std::str::FromStr for CodeFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "repetition" => Ok(CodeFamily::Repetition),
            "rotated_planar" | "rotated-planar" => Ok(CodeFamily::RotatedPlanar),
            other => Err(Error::Config(format!("unknown code family `{other}`"))),
        }
    }
}

/// Code, size, and noise parameters for one experiment cell.
#[derive(Debug, Clone, Copy)]
pub struct CodeParams {
    pub family: CodeFamily,
    pub d: usize,
    pub rounds: usize,
    pub p: f64,
}

impl CodeParams {
    /// Validates d odd and >= 3, rounds >= 1, 0 <= p < 0.5.
    pub fn new(family: CodeFamily, d: usize, rounds: usize, p: f64) -> Result<Self> {
        if d < 3 || d % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "distance must be odd and >= 3, got {d}"
            )));
        }
        if rounds == 0 {
            return Err(Error::InvalidParameter("rounds must be >= 1".into()));
        }
        validate_probability(p)?;
        Ok(CodeParams { family, d, rounds, p })
    }

    /// Detector vertices per round (Z-type checks only).
    pub fn stabilizers_per_round(&self) -> usize {
        match self.family {
            CodeFamily::Repetition => self.d - 1,
            CodeFamily::RotatedPlanar => (self.d * self.d - 1) / 2,
        }
    }

    /// Syndrome bits generated per round, both bases combined.
    pub fn syndrome_bits_per_round(&self) -> usize {
        match self.family {
            CodeFamily::Repetition => self.d - 1,
            CodeFamily::RotatedPlanar => self.d * self.d - 1,
        }
    }
}

fn validate_probability(p: f64) -> Result<()> {
    if !(0.0..0.5).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "error probability must lie in [0, 0.5), got {p}"
        )));
    }
    Ok(())
}

/// One detector (potential defect) in space-time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectorVertex {
    pub id: usize,
    /// Doubled lattice coordinates; repetition codes use (2s+1, 0).
    pub space_coord: (i64, i64),
    pub round: usize,
}

/// Space-like edges are data errors within a round; time-like edges are
/// measurement errors between consecutive rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Space,
    Time,
}

/// A potential fault: an edge of the matching graph.
#[derive(Debug, Clone, Copy)]
pub struct FaultEdge {
    pub id: usize,
    /// Detector endpoint; always present.
    pub a: usize,
    /// Second detector endpoint, or `None` for the boundary vertex.
    pub b: Option<usize>,
    pub weight: f64,
    pub kind: EdgeKind,
    /// Doubled spatial coordinates of the edge midpoint (boundary edges use
    /// the real endpoint's coordinate).
    pub space_mid: (i64, i64),
    /// Time coordinate of the midpoint: r for space-like, r + 0.5 for
    /// time-like between rounds r and r+1.
    pub time_mid: f64,
    pub is_logical: bool,
}

impl FaultEdge {
    pub fn is_boundary(&self) -> bool {
        self.b.is_none()
    }
}

/// The matching arena: detector vertices (round-major ids), one virtual
/// boundary vertex, and weighted fault edges.
#[derive(Debug, Clone)]
pub struct DecodingGraph {
    pub params: CodeParams,
    pub vertices: Vec<DetectorVertex>,
    pub faults: Vec<FaultEdge>,
    /// Fault ids whose parity flips the logical observable, sorted.
    pub logical_edges: Vec<usize>,
    n_stab: usize,
    /// Fault-id range of the space-like edges of round r.
    space_ranges: Vec<(usize, usize)>,
    /// Fault-id range of the time-like edges between rounds r and r+1.
    time_ranges: Vec<(usize, usize)>,
}

impl DecodingGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_faults(&self) -> usize {
        self.faults.len()
    }

    pub fn rounds(&self) -> usize {
        self.params.rounds
    }

    pub fn stabilizers_per_round(&self) -> usize {
        self.n_stab
    }

    /// Id of the detector for stabilizer `s` at round `r`.
    pub fn vertex_id(&self, s: usize, r: usize) -> usize {
        debug_assert!(s < self.n_stab && r < self.params.rounds);
        r * self.n_stab + s
    }

    pub fn round_of(&self, vertex: usize) -> usize {
        vertex / self.n_stab
    }

    /// Space-like faults of round `r`.
    pub fn space_faults(&self, r: usize) -> &[FaultEdge] {
        let (lo, hi) = self.space_ranges[r];
        &self.faults[lo..hi]
    }

    /// Time-like faults between rounds `r` and `r+1`; empty for the last round.
    pub fn time_faults_after(&self, r: usize) -> &[FaultEdge] {
        if r + 1 >= self.params.rounds {
            return &[];
        }
        let (lo, hi) = self.time_ranges[r];
        &self.faults[lo..hi]
    }

    /// Line-oriented text export for debugging and cross-implementation diffs.
    pub fn export_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(
            out,
            "# decoding-graph family={} d={} rounds={} p={}",
            self.params.family.name(),
            self.params.d,
            self.params.rounds,
            self.params.p
        )
        .unwrap();
        for v in &self.vertices {
            writeln!(
                out,
                "vertex {} round={} space={},{}",
                v.id, v.round, v.space_coord.0, v.space_coord.1
            )
            .unwrap();
        }
        writeln!(out, "boundary").unwrap();
        for e in &self.faults {
            let b = match e.b {
                Some(b) => b.to_string(),
                None => "boundary".to_string(),
            };
            writeln!(
                out,
                "edge {} {} {} weight={:.6} kind={} mid={:.1} logical={}",
                e.id,
                e.a,
                b,
                e.weight,
                match e.kind {
                    EdgeKind::Space => "space",
                    EdgeKind::Time => "time",
                },
                e.time_mid,
                u8::from(e.is_logical)
            )
            .unwrap();
        }
        out
    }
}

/// Builds the matching graph for `params`; edge weight is the uniform
/// log((1-p)/p) (p = 0 gets weight 1 so unit-weight decoding still works).
pub fn build_graph(params: CodeParams) -> Result<DecodingGraph> {
    CodeParams::new(params.family, params.d, params.rounds, params.p)?;
    let weight = if params.p == 0.0 {
        1.0
    } else {
        ((1.0 - params.p) / params.p).ln()
    };

    let n_stab = params.stabilizers_per_round();
    let rounds = params.rounds;

    // (coordinate, incident Z-check indices, is_logical) per data qubit.
    let qubits = data_qubit_incidence(&params);
    let check_coords = check_coordinates(&params);

    let mut vertices = Vec::with_capacity(n_stab * rounds);
    for r in 0..rounds {
        for s in 0..n_stab {
            vertices.push(DetectorVertex {
                id: r * n_stab + s,
                space_coord: check_coords[s],
                round: r,
            });
        }
    }

    let mut faults = Vec::new();
    let mut logical_edges = Vec::new();
    let mut space_ranges = Vec::with_capacity(rounds);
    let mut time_ranges = Vec::with_capacity(rounds.saturating_sub(1));
    for r in 0..rounds {
        let lo = faults.len();
        for (coord, checks, is_logical) in &qubits {
            let id = faults.len();
            let (a, b) = match checks[..] {
                [only] => (r * n_stab + only, None),
                [first, second] => (r * n_stab + first, Some(r * n_stab + second)),
                _ => unreachable!("every data qubit touches 1 or 2 Z-checks"),
            };
            if *is_logical {
                logical_edges.push(id);
            }
            faults.push(FaultEdge {
                id,
                a,
                b,
                weight,
                kind: EdgeKind::Space,
                space_mid: *coord,
                time_mid: r as f64,
                is_logical: *is_logical,
            });
        }
        space_ranges.push((lo, faults.len()));
        if r + 1 < rounds {
            let lo = faults.len();
            for s in 0..n_stab {
                faults.push(FaultEdge {
                    id: faults.len(),
                    a: r * n_stab + s,
                    b: Some((r + 1) * n_stab + s),
                    weight,
                    kind: EdgeKind::Time,
                    space_mid: check_coords[s],
                    time_mid: r as f64 + 0.5,
                    is_logical: false,
                });
            }
            time_ranges.push((lo, faults.len()));
        }
    }

    Ok(DecodingGraph {
        params,
        vertices,
        faults,
        logical_edges,
        n_stab,
        space_ranges,
        time_ranges,
    })
}

/// Doubled coordinates of each Z-check, in vertex-id order.
fn check_coordinates(params: &CodeParams) -> Vec<(i64, i64)> {
    match params.family {
        CodeFamily::Repetition => (0..params.d - 1).map(|s| (2 * s as i64 + 1, 0)).collect(),
        CodeFamily::RotatedPlanar => {
            let mut coords = Vec::new();
            let d = params.d as i64;
            for py in -1..d {
                for px in -1..d {
                    if z_check_exists(px, py, d) {
                        coords.push((2 * px + 1, 2 * py + 1));
                    }
                }
            }
            coords
        }
    }
}

/// Whether the plaquette with lower-left data qubit (px, py) is a Z-check.
/// Checkerboard color: Z iff px+py even; weight-2 checks survive only on the
/// bottom and top edges, never left/right (those host the X-checks).
fn z_check_exists(px: i64, py: i64, d: i64) -> bool {
    if (px + py).rem_euclid(2) != 0 {
        return false;
    }
    let interior_x = (0..d - 1).contains(&px);
    let interior_y = (0..d - 1).contains(&py);
    interior_x && (interior_y || py == -1 || py == d - 1)
}

/// For every data qubit: its doubled coordinate, the 1-2 incident Z-check
/// indices (per-round, ascending), and whether an X fault there crosses the
/// logical cut (left column).
fn data_qubit_incidence(params: &CodeParams) -> Vec<((i64, i64), Vec<usize>, bool)> {
    match params.family {
        CodeFamily::Repetition => {
            let d = params.d;
            (0..d)
                .map(|q| {
                    let mut checks = Vec::new();
                    if q >= 1 {
                        checks.push(q - 1);
                    }
                    if q <= d - 2 {
                        checks.push(q);
                    }
                    ((2 * q as i64, 0), checks, q == 0)
                })
                .collect()
        }
        CodeFamily::RotatedPlanar => {
            let d = params.d as i64;
            let mut index = std::collections::BTreeMap::new();
            for py in -1..d {
                for px in -1..d {
                    if z_check_exists(px, py, d) {
                        index.insert((px, py), index.len());
                    }
                }
            }
            let mut out = Vec::new();
            for qy in 0..d {
                for qx in 0..d {
                    let mut checks: Vec<usize> = [(qx - 1, qy - 1), (qx, qy - 1), (qx - 1, qy), (qx, qy)]
                        .iter()
                        .filter_map(|key| index.get(key).copied())
                        .collect();
                    checks.sort_unstable();
                    debug_assert!(matches!(checks.len(), 1 | 2));
                    out.push(((2 * qx, 2 * qy), checks, qx == 0));
                }
            }
            out
        }
    }
}

/// A sampled set of triggered faults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorConfiguration {
    /// Triggered fault ids, sorted ascending.
    pub triggered_faults: Vec<usize>,
    pub seed: u64,
}

/// Per-round defect indicators derived from an error configuration, plus the
/// ground-truth logical parity used for scoring corrections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeStream {
    pub rounds: usize,
    pub stabilizers_per_round: usize,
    /// Defect bit per detector vertex, round-major (same ids as the graph).
    pub defects: Vec<bool>,
    pub logical_frame: bool,
}

impl SyndromeStream {
    pub fn all_zero(graph: &DecodingGraph) -> Self {
        SyndromeStream {
            rounds: graph.rounds(),
            stabilizers_per_round: graph.stabilizers_per_round(),
            defects: vec![false; graph.num_vertices()],
            logical_frame: false,
        }
    }

    pub fn defect_ids(&self) -> Vec<usize> {
        self.defects
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    pub fn defect_count(&self) -> usize {
        self.defects.iter().filter(|&&b| b).count()
    }
}

/// Samples each fault independently with probability `p`, deterministically in
/// (graph, p, seed). Fault draws are consumed in fault-id order from a
/// counter-based stream cipher, so shot-level parallelism cannot reorder them.
pub fn sample_error(graph: &DecodingGraph, p: f64, seed: u64) -> Result<ErrorConfiguration> {
    validate_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triggered = Vec::new();
    for id in 0..graph.num_faults() {
        if rng.random::<f64>() < p {
            triggered.push(id);
        }
    }
    Ok(ErrorConfiguration { triggered_faults: triggered, seed })
}

/// Derives the defect bits (XOR of incidences) and the true logical parity.
pub fn extract_syndrome(graph: &DecodingGraph, err: &ErrorConfiguration) -> Result<SyndromeStream> {
    let mut defects = vec![false; graph.num_vertices()];
    let mut logical_frame = false;
    for &id in &err.triggered_faults {
        let edge = graph
            .faults
            .get(id)
            .ok_or_else(|| Error::Integrity(format!("unknown fault id {id}")))?;
        defects[edge.a] ^= true;
        if let Some(b) = edge.b {
            defects[b] ^= true;
        }
        logical_frame ^= edge.is_logical;
    }
    Ok(SyndromeStream {
        rounds: graph.rounds(),
        stabilizers_per_round: graph.stabilizers_per_round(),
        defects,
        logical_frame,
    })
}

/// Derives the per-shot seed from a base seed, SplitMix64-style, so shots are
/// reproducible no matter which thread runs them.
pub fn shot_seed(base_seed: u64, shot: u64) -> u64 {
    let mut z = base_seed
        .wrapping_add(shot.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(family: CodeFamily, d: usize, rounds: usize, p: f64) -> DecodingGraph {
        build_graph(CodeParams { family, d, rounds, p }).unwrap()
    }

    // Closed forms used as an independent oracle, derived by hand:
    // repetition: V=(d-1)R, space=dR, time=(d-1)(R-1), boundary=2R, logical=R;
    // rotated:    V=(d^2-1)R/2, space=d^2 R, time=(d^2-1)(R-1)/2,
    //             boundary=2dR, logical=dR.
    fn expected_counts(family: CodeFamily, d: usize, r: usize) -> (usize, usize, usize, usize, usize) {
        match family {
            CodeFamily::Repetition => ((d - 1) * r, d * r, (d - 1) * (r - 1), 2 * r, r),
            CodeFamily::RotatedPlanar => (
                (d * d - 1) / 2 * r,
                d * d * r,
                (d * d - 1) / 2 * (r - 1),
                2 * d * r,
                d * r,
            ),
        }
    }

    #[test]
    fn counts_match_closed_forms() {
        for family in [CodeFamily::Repetition, CodeFamily::RotatedPlanar] {
            for d in [3, 5, 7, 9] {
                for rounds in 1..=4 * d {
                    let g = graph(family, d, rounds, 0.02);
                    let (v, space, time, boundary, logical) = expected_counts(family, d, rounds);
                    let n_space = g.faults.iter().filter(|e| e.kind == EdgeKind::Space).count();
                    let n_time = g.faults.iter().filter(|e| e.kind == EdgeKind::Time).count();
                    let n_boundary = g.faults.iter().filter(|e| e.is_boundary()).count();
                    assert_eq!(g.num_vertices(), v, "{family:?} d={d} rounds={rounds}");
                    assert_eq!(n_space, space);
                    assert_eq!(n_time, time);
                    assert_eq!(n_boundary, boundary);
                    assert_eq!(g.logical_edges.len(), logical);
                }
            }
        }
    }

    #[test]
    fn repetition_d3_two_rounds_example() {
        let g = graph(CodeFamily::Repetition, 3, 2, 0.02);
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.faults.iter().filter(|e| e.kind == EdgeKind::Space).count(), 6);
        assert_eq!(g.faults.iter().filter(|e| e.kind == EdgeKind::Time).count(), 2);
    }

    #[test]
    fn rotated_d3_single_round_example() {
        let g = graph(CodeFamily::RotatedPlanar, 3, 1, 0.02);
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_faults(), 9);
    }

    #[test]
    fn uniform_weight_value() {
        // Hand evaluation: log(0.98/0.02) = log(49) = 3.8918202981106265.
        let g = graph(CodeFamily::Repetition, 3, 1, 0.02);
        for e in &g.faults {
            assert!((e.weight - 3.8918202981106265).abs() < 1e-12);
            assert!((e.weight - 3.8918).abs() < 1e-4);
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(CodeParams::new(CodeFamily::Repetition, 2, 1, 0.02).is_err());
        assert!(CodeParams::new(CodeFamily::Repetition, 4, 1, 0.02).is_err());
        assert!(CodeParams::new(CodeFamily::Repetition, 3, 0, 0.02).is_err());
        assert!(CodeParams::new(CodeFamily::Repetition, 3, 1, 0.5).is_err());
        assert!(CodeParams::new(CodeFamily::Repetition, 3, 1, -0.1).is_err());
    }

    #[test]
    fn sample_p_zero_empty_and_p_one_rejected() {
        let g = graph(CodeFamily::Repetition, 3, 2, 0.02);
        assert!(sample_error(&g, 0.0, 7).unwrap().triggered_faults.is_empty());
        assert!(sample_error(&g, 1.0, 7).is_err());
    }

    #[test]
    fn sample_binomial_concentration() {
        // 8 faults per shot (d=3, rounds=2); 125_000 shots = 1e6 draws.
        let g = graph(CodeFamily::Repetition, 3, 2, 0.02);
        let draws = 1_000_000u64;
        let shots = draws / g.num_faults() as u64;
        let mut hits = 0usize;
        for shot in 0..shots {
            hits += sample_error(&g, 0.02, shot_seed(12345, shot))
                .unwrap()
                .triggered_faults
                .len();
        }
        let fraction = hits as f64 / (shots * g.num_faults() as u64) as f64;
        let sigma = (0.02f64 * 0.98 / draws as f64).sqrt();
        assert!(
            (fraction - 0.02).abs() <= 3.0 * sigma,
            "fraction {fraction} outside 3 sigma of 0.02"
        );
    }

    #[test]
    fn sampling_is_deterministic() {
        let g = graph(CodeFamily::RotatedPlanar, 5, 10, 0.02);
        let a = sample_error(&g, 0.02, 99).unwrap();
        let b = sample_error(&g, 0.02, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(extract_syndrome(&g, &a).unwrap(), extract_syndrome(&g, &b).unwrap());
    }

    #[test]
    fn single_fault_defect_counts() {
        let g = graph(CodeFamily::Repetition, 3, 2, 0.02);
        for e in &g.faults {
            let syn = extract_syndrome(
                &g,
                &ErrorConfiguration { triggered_faults: vec![e.id], seed: 0 },
            )
            .unwrap();
            let expected = if e.is_boundary() { 1 } else { 2 };
            assert_eq!(syn.defect_count(), expected, "fault {}", e.id);
            if e.kind == EdgeKind::Space && !e.is_boundary() {
                assert_eq!(g.round_of(e.a), g.round_of(e.b.unwrap()));
            }
        }
    }

    #[test]
    fn unknown_fault_id_is_integrity_error() {
        let g = graph(CodeFamily::Repetition, 3, 1, 0.02);
        let bad = ErrorConfiguration { triggered_faults: vec![g.num_faults()], seed: 0 };
        assert!(matches!(extract_syndrome(&g, &bad), Err(Error::Integrity(_))));
    }

    #[test]
    fn defect_parity_even_with_boundary() {
        let g = graph(CodeFamily::RotatedPlanar, 5, 8, 0.05);
        for shot in 0..200 {
            let err = sample_error(&g, 0.05, shot_seed(5, shot)).unwrap();
            let syn = extract_syndrome(&g, &err).unwrap();
            let boundary_hits = err
                .triggered_faults
                .iter()
                .filter(|&&id| g.faults[id].is_boundary())
                .count();
            assert_eq!((syn.defect_count() + boundary_hits) % 2, 0);
        }
    }

    #[test]
    fn syndrome_is_linear_in_symmetric_difference() {
        let g = graph(CodeFamily::RotatedPlanar, 3, 6, 0.1);
        for shot in 0..100 {
            let e1 = sample_error(&g, 0.1, shot_seed(11, 2 * shot)).unwrap();
            let e2 = sample_error(&g, 0.1, shot_seed(11, 2 * shot + 1)).unwrap();
            let mut sym: Vec<usize> = Vec::new();
            for id in 0..g.num_faults() {
                let in1 = e1.triggered_faults.binary_search(&id).is_ok();
                let in2 = e2.triggered_faults.binary_search(&id).is_ok();
                if in1 ^ in2 {
                    sym.push(id);
                }
            }
            let s1 = extract_syndrome(&g, &e1).unwrap();
            let s2 = extract_syndrome(&g, &e2).unwrap();
            let s12 = extract_syndrome(&g, &ErrorConfiguration { triggered_faults: sym, seed: 0 })
                .unwrap();
            for v in 0..g.num_vertices() {
                assert_eq!(s12.defects[v], s1.defects[v] ^ s2.defects[v]);
            }
            assert_eq!(s12.logical_frame, s1.logical_frame ^ s2.logical_frame);
        }
    }

    #[test]
    fn export_text_golden() {
        let g = graph(CodeFamily::Repetition, 3, 1, 0.02);
        let expected = "\
# decoding-graph family=repetition d=3 rounds=1 p=0.02
vertex 0 round=0 space=1,0
vertex 1 round=0 space=3,0
boundary
edge 0 0 boundary weight=3.891820 kind=space mid=0.0 logical=1
edge 1 0 1 weight=3.891820 kind=space mid=0.0 logical=0
edge 2 1 boundary weight=3.891820 kind=space mid=0.0 logical=0
";
        assert_eq!(g.export_text(), expected);
    }

    #[test]
    fn rotated_boundary_faults_sit_on_left_and_right_columns() {
        for d in [3, 5, 7] {
            let g = graph(CodeFamily::RotatedPlanar, d, 1, 0.02);
            for e in g.space_faults(0) {
                let (x, _) = e.space_mid;
                if e.is_boundary() {
                    assert!(x == 0 || x == 2 * (d as i64 - 1), "boundary fault at x={x}");
                    assert_eq!(e.is_logical, x == 0);
                } else {
                    assert!(!e.is_logical);
                }
            }
        }
    }
}
