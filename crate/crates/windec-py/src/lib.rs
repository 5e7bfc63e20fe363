//! Python bindings: decoding graphs, syndrome sampling, the window decode
//! drivers, pipeline sizing, and window layout manifests.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use windec::decoder::{GrowthMode, UnionFindDecoder};
use windec::graph::{
    build_graph, extract_syndrome, sample_error, CodeParams, DecodingGraph,
};
use windec::resources::{plan_min, TimingModel};
use windec::scheduler::{run_pipeline, PipelinePlan, StreamSource};
use windec::tiling::color_hex_2d;
use windec::window::{
    global_decode, layout_manifest_json, parallel_layout, parallel_window_decode,
    sliding_layout, sliding_window_decode, DecodeOutcome, Executor, WindowConfig,
};

fn value_err(e: windec::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn growth_from(name: Option<&str>) -> PyResult<GrowthMode> {
    match name.unwrap_or("half") {
        "half" | "half_edge" => Ok(GrowthMode::HalfEdge),
        "full" | "full_edge" => Ok(GrowthMode::FullEdge),
        other => Err(PyValueError::new_err(format!(
            "unknown growth mode {other:?}: want 'half' or 'full'"
        ))),
    }
}

/// A decoding graph for a code family at a given distance and round count.
#[pyclass(frozen, module = "windec_py")]
struct Graph {
    inner: DecodingGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(family: &str, d: usize, rounds: usize, p: f64) -> PyResult<Self> {
        let family = family.parse().map_err(value_err)?;
        let params = CodeParams::new(family, d, rounds, p).map_err(value_err)?;
        Ok(Graph { inner: build_graph(params).map_err(value_err)? })
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    #[getter]
    fn num_faults(&self) -> usize {
        self.inner.num_faults()
    }

    #[getter]
    fn rounds(&self) -> usize {
        self.inner.rounds()
    }

    #[getter]
    fn stabilizers_per_round(&self) -> usize {
        self.inner.stabilizers_per_round()
    }

    /// Plain text dump: one line per vertex and per fault edge.
    fn export_text(&self) -> String {
        self.inner.export_text()
    }

    /// Samples a noise shot and measures it: returns the triggered fault
    /// ids, the defect bits, and the true logical frame.
    fn sample_syndrome(&self, p: f64, seed: u64) -> PyResult<Syndrome> {
        let err = sample_error(&self.inner, p, seed).map_err(value_err)?;
        let stream = extract_syndrome(&self.inner, &err).map_err(value_err)?;
        Ok(Syndrome {
            triggered_faults: err.triggered_faults,
            defects: stream.defects,
            logical_frame: stream.logical_frame,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(family='{}', d={}, rounds={}, p={})",
            self.inner.params.family.name(),
            self.inner.params.d,
            self.inner.params.rounds,
            self.inner.params.p
        )
    }
}

/// One sampled shot: which faults fired and what the detectors saw.
#[pyclass(frozen, module = "windec_py")]
struct Syndrome {
    #[pyo3(get)]
    triggered_faults: Vec<usize>,
    #[pyo3(get)]
    defects: Vec<bool>,
    #[pyo3(get)]
    logical_frame: bool,
}

#[pymethods]
impl Syndrome {
    fn __repr__(&self) -> String {
        format!(
            "Syndrome(faults={}, defects={}, logical_frame={})",
            self.triggered_faults.len(),
            self.defects.iter().filter(|&&b| b).count(),
            self.logical_frame
        )
    }
}

/// A finished decode: the corrected fault edges and the logical verdict.
#[pyclass(frozen, module = "windec_py")]
struct DecodeResult {
    #[pyo3(get)]
    edges: Vec<usize>,
    #[pyo3(get)]
    logical_flip: bool,
    #[pyo3(get)]
    num_windows: usize,
}

#[pymethods]
impl DecodeResult {
    fn __repr__(&self) -> String {
        format!(
            "DecodeResult(edges={}, logical_flip={}, num_windows={})",
            self.edges.len(),
            self.logical_flip,
            self.num_windows
        )
    }
}

impl From<DecodeOutcome> for DecodeResult {
    fn from(outcome: DecodeOutcome) -> Self {
        DecodeResult {
            edges: outcome.correction.edges,
            logical_flip: outcome.correction.logical_flip,
            num_windows: outcome.num_windows,
        }
    }
}

fn check_defects(graph: &Graph, defects: &[bool]) -> PyResult<()> {
    if defects.len() != graph.inner.num_vertices() {
        return Err(PyValueError::new_err(format!(
            "defects has {} bits, graph has {} vertices",
            defects.len(),
            graph.inner.num_vertices()
        )));
    }
    Ok(())
}

/// Decodes the whole history in one window.
#[pyfunction]
#[pyo3(signature = (graph, defects, growth=None))]
fn decode_global(graph: &Graph, defects: Vec<bool>, growth: Option<&str>) -> PyResult<DecodeResult> {
    check_defects(graph, &defects)?;
    let inner = UnionFindDecoder::new(growth_from(growth)?);
    Ok(global_decode(&graph.inner, &defects, &inner).map_err(value_err)?.into())
}

/// Decodes with overlapping sequential windows committing `n_com` rounds
/// per step with `n_buf` rounds of lookahead.
#[pyfunction]
#[pyo3(signature = (graph, defects, n_com, n_buf, growth=None))]
fn decode_sliding(
    graph: &Graph,
    defects: Vec<bool>,
    n_com: usize,
    n_buf: usize,
    growth: Option<&str>,
) -> PyResult<DecodeResult> {
    check_defects(graph, &defects)?;
    let cfg = WindowConfig::new(n_com, n_buf).map_err(value_err)?;
    let inner = UnionFindDecoder::new(growth_from(growth)?);
    Ok(sliding_window_decode(&graph.inner, &defects, &cfg, &inner).map_err(value_err)?.into())
}

/// Decodes with the two-phase parallel window layout of unit `w`.
/// `threads=0` runs the windows serially.
#[pyfunction]
#[pyo3(signature = (graph, defects, w, threads=0, growth=None))]
fn decode_parallel(
    graph: &Graph,
    defects: Vec<bool>,
    w: usize,
    threads: usize,
    growth: Option<&str>,
) -> PyResult<DecodeResult> {
    check_defects(graph, &defects)?;
    let inner = UnionFindDecoder::new(growth_from(growth)?);
    let executor = if threads == 0 { Executor::Serial } else { Executor::Threads(threads) };
    Ok(parallel_window_decode(&graph.inner, &defects, w, &inner, &executor)
        .map_err(value_err)?
        .into())
}

/// Decodes through the streaming pipeline with `n_pairs` worker pairs;
/// bit-identical to `decode_parallel`.
#[pyfunction]
#[pyo3(signature = (graph, defects, w, n_pairs=1, growth=None))]
fn decode_pipeline(
    graph: &Graph,
    defects: Vec<bool>,
    w: usize,
    n_pairs: usize,
    growth: Option<&str>,
) -> PyResult<DecodeResult> {
    check_defects(graph, &defects)?;
    let inner = UnionFindDecoder::new(growth_from(growth)?);
    let plan = PipelinePlan::new(n_pairs).map_err(value_err)?;
    let run = run_pipeline(&graph.inner, &defects, w, &inner, &plan, &StreamSource::Preloaded)
        .map_err(value_err)?;
    Ok(run.outcome.into())
}

/// Pipeline sizing for a timing model and window shape.
#[pyclass(frozen, module = "windec_py")]
struct Plan {
    #[pyo3(get)]
    n_par: usize,
    #[pyo3(get)]
    n_lag: usize,
    #[pyo3(get)]
    tau: f64,
    #[pyo3(get)]
    tau_clock: f64,
    #[pyo3(get)]
    aux_qubits: usize,
}

#[pymethods]
impl Plan {
    fn __repr__(&self) -> String {
        format!(
            "Plan(n_par={}, n_lag={}, tau={}, tau_clock={}, aux_qubits={})",
            self.n_par, self.n_lag, self.tau, self.tau_clock, self.aux_qubits
        )
    }
}

/// Minimal worker pairs for the timing model, and the lag, reaction time
/// and parked patches that follow.
#[pyfunction]
fn plan_resources(
    tau_rd: f64,
    tau_w: f64,
    tau_0: f64,
    n_com: usize,
    n_buf: usize,
    d: usize,
) -> PyResult<Plan> {
    let timing = TimingModel::new(tau_rd, tau_w, tau_0).map_err(value_err)?;
    let plan = plan_min(&timing, n_com, n_com + n_buf, d).map_err(value_err)?;
    Ok(Plan {
        n_par: plan.n_par,
        n_lag: plan.n_lag,
        tau: plan.tau,
        tau_clock: plan.tau_clock,
        aux_qubits: plan.aux_qubits,
    })
}

/// JSON manifest of the two-phase parallel window layout.
#[pyfunction]
fn parallel_windows(n_tot: usize, w: usize) -> PyResult<String> {
    Ok(layout_manifest_json(&parallel_layout(n_tot, w).map_err(value_err)?))
}

/// JSON manifest of the sequential sliding window layout.
#[pyfunction]
fn sliding_windows(n_tot: usize, n_com: usize, n_buf: usize) -> PyResult<String> {
    let cfg = WindowConfig::new(n_com, n_buf).map_err(value_err)?;
    Ok(layout_manifest_json(&sliding_layout(n_tot, &cfg).map_err(value_err)?))
}

/// Three-colors a hexagonal tiling of a `width x height` patch layout and
/// returns a JSON summary of the cells and spacing guarantees.
#[pyfunction]
fn hex_tiling(width: f64, height: f64, cell_size: f64) -> PyResult<String> {
    let tiling = color_hex_2d((width, height), cell_size).map_err(value_err)?;
    let cells: Vec<serde_json::Value> = tiling
        .cells
        .iter()
        .map(|c| {
            serde_json::json!({
                "id": c.id,
                "axial": [c.axial.0, c.axial.1],
                "center": [c.center.0, c.center.1],
                "color": c.color,
            })
        })
        .collect();
    let value = serde_json::json!({
        "cell_size": tiling.cell_size,
        "spacing": tiling.spacing,
        "num_colors": tiling.num_colors,
        "min_same_color_center_distance": tiling.min_same_color_center_distance(),
        "same_color_cell_gap": tiling.same_color_cell_gap(),
        "cells": cells,
    });
    Ok(value.to_string())
}

#[pymodule]
fn windec_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Syndrome>()?;
    m.add_class::<DecodeResult>()?;
    m.add_class::<Plan>()?;
    m.add_function(wrap_pyfunction!(decode_global, m)?)?;
    m.add_function(wrap_pyfunction!(decode_sliding, m)?)?;
    m.add_function(wrap_pyfunction!(decode_parallel, m)?)?;
    m.add_function(wrap_pyfunction!(decode_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(plan_resources, m)?)?;
    m.add_function(wrap_pyfunction!(parallel_windows, m)?)?;
    m.add_function(wrap_pyfunction!(sliding_windows, m)?)?;
    m.add_function(wrap_pyfunction!(hex_tiling, m)?)?;
    Ok(())
}
