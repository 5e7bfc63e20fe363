//! Experiment configuration, runners, and result records.
//!
//! Configs are flat `key = value` text: comma-separated lists, `#` comments,
//! and a rounds rule that is either absolute (`rounds = 32`) or scaled by
//! distance (`rounds = 4d`). Runs with the same config and seed produce
//! byte-identical result records, timing fields aside.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decoder::InnerDecoder;
use crate::error::{Error, Result};
use crate::graph::{build_graph, extract_syndrome, sample_error, shot_seed, CodeFamily, CodeParams};
use crate::resources::{overhead_factor, plan_min, TimingModel};
use crate::scheduler::{
    calibrate_tau_w, measure_throughput, BenchRecord, ClockKind, PipelinePlan, StreamSource,
    ThroughputConfig,
};
use crate::window::{
    global_decode, parallel_window_decode, sliding_window_decode, Executor, WindowConfig,
};

/// History length per shot: a fixed round count, or a multiple of the code
/// distance (written `4d`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule", content = "value")]
pub enum RoundsRule {
    Absolute(usize),
    PerDistance(usize),
}

impl RoundsRule {
    pub fn rounds_for(&self, d: usize) -> usize {
        match *self {
            RoundsRule::Absolute(n) => n,
            RoundsRule::PerDistance(m) => m * d,
        }
    }
}

impl FromStr for RoundsRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, per_d) = match s.strip_suffix(['d', 'D']) {
            Some(head) => (head, true),
            None => (s, false),
        };
        let n: usize = digits
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad rounds rule {s:?}: want e.g. 32 or 4d")))?;
        if n == 0 {
            return Err(Error::Config("rounds rule must be positive".into()));
        }
        Ok(if per_d { RoundsRule::PerDistance(n) } else { RoundsRule::Absolute(n) })
    }
}

impl fmt::Display for RoundsRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RoundsRule::Absolute(n) => write!(f, "{n}"),
            RoundsRule::PerDistance(m) => write!(f, "{m}d"),
        }
    }
}

/// Which decode driver to run in a fidelity experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeMode {
    Global,
    Sliding,
    Parallel,
    Pipeline,
}

impl DecodeMode {
    pub const ALL: [DecodeMode; 4] =
        [DecodeMode::Global, DecodeMode::Sliding, DecodeMode::Parallel, DecodeMode::Pipeline];

    pub fn as_str(&self) -> &'static str {
        match self {
            DecodeMode::Global => "global",
            DecodeMode::Sliding => "sliding",
            DecodeMode::Parallel => "parallel",
            DecodeMode::Pipeline => "pipeline",
        }
    }
}

impl FromStr for DecodeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "global" => Ok(DecodeMode::Global),
            "sliding" => Ok(DecodeMode::Sliding),
            "parallel" => Ok(DecodeMode::Parallel),
            "pipeline" => Ok(DecodeMode::Pipeline),
            other => Err(Error::Config(format!(
                "unknown mode {other:?}: want global, sliding, parallel or pipeline"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub family: CodeFamily,
    pub distances: Vec<usize>,
    pub p: f64,
    pub rounds: RoundsRule,
    pub shots: usize,
    /// Worker-pair counts for throughput sweeps; fidelity pipeline runs use
    /// the first entry.
    pub workers: Vec<usize>,
    /// Committed rounds per sliding step; defaults to `d`.
    pub n_com: Option<usize>,
    /// Lookahead rounds per sliding window; defaults to `d`.
    pub n_buf: Option<usize>,
    /// Window unit for the parallel layout; defaults to `d`.
    pub w: Option<usize>,
    pub seed: u64,
    /// Syndrome readout time in seconds, for throughput rates.
    pub tau_rd: f64,
    /// JSON-lines output path.
    pub output: Option<PathBuf>,
    /// Optional CSV mirror of the same records.
    pub csv: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            family: CodeFamily::RotatedPlanar,
            distances: vec![3, 5, 7],
            p: 0.02,
            rounds: RoundsRule::PerDistance(4),
            shots: 1000,
            workers: vec![1, 2, 4, 8],
            n_com: None,
            n_buf: None,
            w: None,
            seed: 7,
            tau_rd: 1e-6,
            output: None,
            csv: None,
        }
    }
}

fn parse_list<T: FromStr>(value: &str, key: &str) -> Result<Vec<T>> {
    let items: Vec<T> = value
        .split(',')
        .map(|v| v.trim())
        .filter(|v| !v.is_empty())
        .map(|v| v.parse::<T>().map_err(|_| Error::Config(format!("bad {key} entry {v:?}"))))
        .collect::<Result<_>>()?;
    if items.is_empty() {
        return Err(Error::Config(format!("{key} list is empty")));
    }
    Ok(items)
}

fn parse_scalar<T: FromStr>(value: &str, key: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::Config(format!("bad {key} value {value:?}")))
}

impl ExperimentConfig {
    /// Parses flat `key = value` text; `#` starts a comment, unknown keys
    /// are errors. Missing keys keep their defaults.
    pub fn from_str_config(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value, got {raw:?}", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "family" => cfg.family = value.parse()?,
                "distances" | "d" => cfg.distances = parse_list(value, key)?,
                "p" => cfg.p = parse_scalar(value, key)?,
                "rounds" => cfg.rounds = value.parse()?,
                "shots" => cfg.shots = parse_scalar(value, key)?,
                "workers" => cfg.workers = parse_list(value, key)?,
                "n_com" => cfg.n_com = Some(parse_scalar(value, key)?),
                "n_buf" => cfg.n_buf = Some(parse_scalar(value, key)?),
                "w" => cfg.w = Some(parse_scalar(value, key)?),
                "seed" => cfg.seed = parse_scalar(value, key)?,
                "tau_rd" => cfg.tau_rd = parse_scalar(value, key)?,
                "output" => cfg.output = Some(PathBuf::from(value)),
                "csv" => cfg.csv = Some(PathBuf::from(value)),
                other => {
                    return Err(Error::Config(format!("line {}: unknown key {other:?}", lineno + 1)))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_str_config(&text)
    }

    /// `WINDEC_WORKERS=1,2,4` overrides the worker list.
    pub fn apply_env_overrides(&mut self) -> Result<()> {
        if let Ok(value) = std::env::var("WINDEC_WORKERS") {
            self.workers = parse_list(&value, "WINDEC_WORKERS")?;
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if self.distances.is_empty() {
            return Err(Error::Config("need at least one distance".into()));
        }
        if self.workers.is_empty() {
            return Err(Error::Config("need at least one worker count".into()));
        }
        if self.workers.iter().any(|&n| n == 0) {
            return Err(Error::Config("worker counts must be positive".into()));
        }
        if self.shots == 0 {
            return Err(Error::Config("need at least one shot".into()));
        }
        if !(self.tau_rd > 0.0) || !self.tau_rd.is_finite() {
            return Err(Error::Config("tau_rd must be positive".into()));
        }
        Ok(())
    }

    fn sliding_config(&self, d: usize) -> Result<WindowConfig> {
        WindowConfig::new(self.n_com.unwrap_or(d), self.n_buf.unwrap_or(d))
    }

    fn window_unit(&self, d: usize) -> usize {
        self.w.unwrap_or(d)
    }
}

/// One experiment data point, one JSON line in the output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub mode: DecodeMode,
    pub family: CodeFamily,
    pub d: usize,
    pub p: f64,
    pub rounds: usize,
    pub shots: usize,
    pub seed: u64,
    pub failures: usize,
    pub logical_error_rate: f64,
    pub stderr: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_dec: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_dec_stderr: Option<f64>,
}

/// Binomial standard error of an observed failure fraction.
pub fn binomial_stderr(failures: usize, shots: usize) -> f64 {
    let p_hat = failures as f64 / shots as f64;
    (p_hat * (1.0 - p_hat) / shots as f64).sqrt()
}

/// Decodes every sampled shot with every requested mode, with shot seeds
/// shared across modes so the comparisons are paired.
pub fn run_fidelity(
    cfg: &ExperimentConfig,
    modes: &[DecodeMode],
    inner: &dyn InnerDecoder,
) -> Result<Vec<ResultRecord>> {
    cfg.validate()?;
    if modes.is_empty() {
        return Err(Error::Config("need at least one decode mode".into()));
    }
    let n_pairs = cfg.workers[0];
    let plan = PipelinePlan::new(n_pairs)?;
    let mut records = Vec::with_capacity(cfg.distances.len() * modes.len());
    for &d in &cfg.distances {
        let rounds = cfg.rounds.rounds_for(d);
        let params = CodeParams::new(cfg.family, d, rounds, cfg.p)?;
        let graph = build_graph(params)?;
        let sliding = cfg.sliding_config(d)?;
        let w = cfg.window_unit(d);
        let mut failures = vec![0usize; modes.len()];
        for shot in 0..cfg.shots {
            let seed = shot_seed(shot_seed(cfg.seed, d as u64), shot as u64);
            let err = sample_error(&graph, cfg.p, seed)?;
            let stream = extract_syndrome(&graph, &err)?;
            for (m, mode) in modes.iter().enumerate() {
                let outcome = match mode {
                    DecodeMode::Global => global_decode(&graph, &stream.defects, inner)?,
                    DecodeMode::Sliding => {
                        sliding_window_decode(&graph, &stream.defects, &sliding, inner)?
                    }
                    DecodeMode::Parallel => {
                        parallel_window_decode(&graph, &stream.defects, w, inner, &Executor::Serial)?
                    }
                    DecodeMode::Pipeline => {
                        crate::scheduler::run_pipeline(
                            &graph,
                            &stream.defects,
                            w,
                            inner,
                            &plan,
                            &StreamSource::Preloaded,
                        )?
                        .outcome
                    }
                };
                if outcome.correction.logical_flip != stream.logical_frame {
                    failures[m] += 1;
                }
            }
        }
        for (m, mode) in modes.iter().enumerate() {
            records.push(ResultRecord {
                mode: *mode,
                family: cfg.family,
                d,
                p: cfg.p,
                rounds,
                shots: cfg.shots,
                seed: cfg.seed,
                failures: failures[m],
                logical_error_rate: failures[m] as f64 / cfg.shots as f64,
                stderr: binomial_stderr(failures[m], cfg.shots),
                r_dec: None,
                r_dec_stderr: None,
            });
        }
    }
    Ok(records)
}

/// Clock selection for throughput runs. A synthetic clock can either take a
/// measured per-window decode time or calibrate one from real decodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThroughputClock {
    Wall { paced: bool },
    Synthetic { tau_w: Option<f64>, tau_0: f64 },
}

pub fn run_throughput(
    cfg: &ExperimentConfig,
    clock: &ThroughputClock,
    inner: &dyn InnerDecoder,
) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let mut records = Vec::with_capacity(cfg.distances.len() * cfg.workers.len());
    for &d in &cfg.distances {
        let base = CodeParams::new(cfg.family, d, 1, cfg.p)?;
        let kind = match *clock {
            ThroughputClock::Wall { .. } => ClockKind::Wall,
            ThroughputClock::Synthetic { tau_w, tau_0 } => {
                let tau_w = match tau_w {
                    Some(v) => v,
                    None => {
                        let probe = CodeParams::new(cfg.family, d, 8 * d, cfg.p)?;
                        calibrate_tau_w(probe, d, inner, 16, cfg.seed)?.0
                    }
                };
                ClockKind::Synthetic(TimingModel::new(cfg.tau_rd, tau_w, tau_0)?)
            }
        };
        for &n_pairs in &cfg.workers {
            let tcfg = ThroughputConfig {
                params: base,
                n_pairs,
                shots: cfg.shots,
                base_seed: cfg.seed,
                tau_rd: cfg.tau_rd,
                paced: matches!(clock, ThroughputClock::Wall { paced: true }),
                clock: kind,
            };
            let report = measure_throughput(&tcfg, inner)?;
            records.push(BenchRecord::from(&report));
        }
    }
    Ok(records)
}

/// Sizes the minimal pipeline for a timing model and window shape, and
/// reports the latency and qubit overhead that follow from it.
pub fn run_plan(
    timing: &TimingModel,
    n_com: usize,
    n_buf: usize,
    d: usize,
    data_qubits: usize,
) -> Result<String> {
    let plan = plan_min(timing, n_com, n_com + n_buf, d)?;
    let value = serde_json::json!({
        "timing": timing,
        "n_com": n_com,
        "n_buf": n_buf,
        "d": d,
        "plan": plan,
        "data_qubits": data_qubits,
        "overhead_factor": overhead_factor(plan.aux_qubits, data_qubits),
    });
    Ok(serde_json::to_string_pretty(&value).expect("plan serializes"))
}

/// Writes records as one JSON object per line.
pub fn write_json_lines<T: Serialize>(path: &Path, records: &[T]) -> Result<()> {
    let mut out = fs::File::create(path)?;
    for record in records {
        let line = serde_json::to_string(record)
            .map_err(|e| Error::Config(format!("record does not serialize: {e}")))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn csv_cell(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
        other => other.to_string(),
    }
}

/// Renders flat records as CSV, columns in alphabetical key order.
pub fn records_to_csv<T: Serialize>(records: &[T]) -> Result<String> {
    let mut out = String::new();
    let mut headers: Option<Vec<String>> = None;
    for record in records {
        let value = serde_json::to_value(record)
            .map_err(|e| Error::Config(format!("record does not serialize: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Config("csv records must be flat objects".into()))?;
        let keys: Vec<String> = obj.keys().cloned().collect();
        match &headers {
            None => {
                out.push_str(&keys.join(","));
                out.push('\n');
                headers = Some(keys);
            }
            Some(h) if *h != keys => {
                return Err(Error::Config("csv records have differing fields".into()))
            }
            Some(_) => {}
        }
        let row: Vec<String> = obj.values().map(csv_cell).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

pub fn write_csv<T: Serialize>(path: &Path, records: &[T]) -> Result<()> {
    fs::write(path, records_to_csv(records)?)?;
    Ok(())
}

/// Writes the configured outputs, if any, and returns what was written.
pub fn write_outputs<T: Serialize>(cfg: &ExperimentConfig, records: &[T]) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    if let Some(path) = &cfg.output {
        write_json_lines(path, records)?;
        written.push(path.clone());
    }
    if let Some(path) = &cfg.csv {
        write_csv(path, records)?;
        written.push(path.clone());
    }
    Ok(written)
}
