//! Streaming pipeline execution and throughput measurement.
//!
//! A pipeline of `n` window pairs runs `2n` long-lived workers: DA_0..DA_{n-1}
//! decode A windows (A_j goes to DA_{j mod n}), DB_0..DB_{n-1} decode B
//! windows. A manager thread dispatches A_j as soon as its last round of
//! syndrome data exists, and B_j once A_j and A_{j+1} have committed, since
//! those commits determine the artificial defects on the B faces. A single
//! aggregator (the manager) merges commits, so the result is bit-identical
//! to the in-memory two-phase decode.
//!
//! Throughput is measured under one of two clocks: the wall clock, which
//! times the real threaded pipeline, and a synthetic clock, which replays
//! the same task graph under a fixed timing model and is exactly
//! reproducible across machines and loads.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::decoder::{Correction, DefectSet, InnerDecoder, WindowView};
use crate::error::{Error, Result};
use crate::graph::{
    build_graph, extract_syndrome, sample_error, shot_seed, CodeParams, DecodingGraph,
};
use crate::resources::TimingModel;
use crate::window::{
    parallel_layout, split_commit, CommitResult, DecodeOutcome, Window, WindowLayer,
};

/// Shape of the worker pool: `n_pairs` A-workers plus `n_pairs` B-workers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelinePlan {
    pub n_pairs: usize,
}

impl PipelinePlan {
    pub fn new(n_pairs: usize) -> Result<Self> {
        if n_pairs == 0 {
            return Err(Error::InvalidParameter("pipeline needs at least one pair".into()));
        }
        Ok(PipelinePlan { n_pairs })
    }
}

/// Where syndrome rounds come from: all in memory up front, or released at
/// the readout rate (round r becomes available at `(r + 1) * tau_rd`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StreamSource {
    Preloaded,
    Paced { tau_rd: f64 },
}

struct Task {
    pos: usize,
    window: Window,
    defects: DefectSet,
    sent_at: Instant,
}

enum Payload {
    Done(Box<CommitResult>),
    Failed(Error),
    Panicked(String),
}

struct WorkerMsg {
    pos: usize,
    block: usize,
    payload: Payload,
    dispatch_seconds: f64,
    decode_seconds: f64,
}

fn worker_loop(
    graph: &DecodingGraph,
    inner: &dyn InnerDecoder,
    block: usize,
    tasks: mpsc::Receiver<Task>,
    results: mpsc::Sender<WorkerMsg>,
) {
    while let Ok(task) = tasks.recv() {
        let picked_up = Instant::now();
        let dispatch_seconds = picked_up.saturating_duration_since(task.sent_at).as_secs_f64();
        // Decoders are pure; a panic is reported rather than torn through
        // the thread so the manager can fail the whole decode cleanly.
        let outcome = catch_unwind(AssertUnwindSafe(|| {
            let view = WindowView::new(graph, task.window);
            let tentative = inner.decode(&view, &task.defects)?;
            split_commit(graph, &task.window, &tentative)
        }));
        let decode_seconds = picked_up.elapsed().as_secs_f64();
        let payload = match outcome {
            Ok(Ok(commit)) => Payload::Done(Box::new(commit)),
            Ok(Err(e)) => Payload::Failed(e),
            Err(cause) => {
                let msg = cause
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| cause.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "worker panicked".into());
                Payload::Panicked(msg)
            }
        };
        let msg = WorkerMsg { pos: task.pos, block, payload, dispatch_seconds, decode_seconds };
        if results.send(msg).is_err() {
            return;
        }
    }
}

/// Timing observations from one pipeline run.
#[derive(Debug, Clone, Default)]
pub struct PipelineStats {
    pub wall_seconds: f64,
    /// Per-window decode durations, in window layout order.
    pub tau_w_samples: Vec<f64>,
    /// Dispatch-to-start latency of the first task each block received.
    pub tau0_samples: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub outcome: DecodeOutcome,
    pub stats: PipelineStats,
}

/// Runs the threaded pipeline over a full syndrome history. The returned
/// outcome is bit-identical to [`crate::window::parallel_window_decode`].
pub fn run_pipeline(
    graph: &DecodingGraph,
    defects: &[bool],
    w: usize,
    inner: &dyn InnerDecoder,
    plan: &PipelinePlan,
    source: &StreamSource,
) -> Result<PipelineRun> {
    if defects.len() != graph.num_vertices() {
        return Err(Error::Contract(format!(
            "defect field has {} bits, graph has {} vertices",
            defects.len(),
            graph.num_vertices()
        )));
    }
    let layout = parallel_layout(graph.rounds(), w)?;
    let n = plan.n_pairs;
    let n_stab = graph.stabilizers_per_round();

    let a_list: Vec<(usize, Window)> = layout
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, win)| matches!(win.layer, WindowLayer::A { .. }))
        .collect();
    let b_list: Vec<(usize, Window)> = layout
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, win)| matches!(win.layer, WindowLayer::B { .. }))
        .collect();
    let a_count = a_list.len();
    let b_count = b_list.len();
    let total = layout.len();
    let mut a_index_of_pos = vec![usize::MAX; total];
    for (j, (pos, _)) in a_list.iter().enumerate() {
        a_index_of_pos[*pos] = j;
    }

    let pace = match *source {
        StreamSource::Preloaded => None,
        StreamSource::Paced { tau_rd } => {
            if !(tau_rd > 0.0) || !tau_rd.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "paced source needs a positive round time, got {tau_rd}"
                )));
            }
            Some(tau_rd)
        }
    };

    let epoch = Instant::now();
    let mut commits: Vec<Option<CommitResult>> = vec![None; total];
    let mut decode_secs: Vec<f64> = vec![0.0; total];
    let mut first_dispatch: Vec<Option<f64>> = vec![None; 2 * n];
    let mut first_error: Option<Error> = None;

    std::thread::scope(|scope| {
        let (result_tx, result_rx) = mpsc::channel::<WorkerMsg>();
        let mut task_txs: Vec<mpsc::Sender<Task>> = Vec::with_capacity(2 * n);
        for block in 0..2 * n {
            let (tx, rx) = mpsc::channel::<Task>();
            task_txs.push(tx);
            let result_tx = result_tx.clone();
            scope.spawn(move || worker_loop(graph, inner, block, rx, result_tx));
        }
        drop(result_tx);

        let data_deadline = |round_end: usize| -> Duration {
            Duration::from_secs_f64(round_end as f64 * pace.unwrap_or(0.0))
        };
        let defects_in = |window: &Window| -> DefectSet {
            DefectSet::from_defect_bits(defects, graph, window)
        };
        let send = |txs: &[mpsc::Sender<Task>], block: usize, pos: usize, window: Window, ds: DefectSet| {
            // A send only fails if the worker died, which it never does
            // while its sender is alive; a failure surfaces as a missing
            // result and is caught by the dispatch accounting below.
            let _ = txs[block].send(Task { pos, window, defects: ds, sent_at: Instant::now() });
        };

        let mut next_a = 0usize;
        let mut a_done = vec![false; a_count];
        let mut b_sent = vec![false; b_count];
        let mut dispatched = 0usize;
        let mut received = 0usize;

        loop {
            let aborted = first_error.is_some();
            if !aborted {
                // Dispatch A windows whose data has fully arrived.
                while next_a < a_count {
                    let (pos, window) = a_list[next_a];
                    if pace.is_some() && epoch.elapsed() < data_deadline(window.rounds.1) {
                        break;
                    }
                    send(&task_txs, next_a % n, pos, window, defects_in(&window));
                    next_a += 1;
                    dispatched += 1;
                }
                // Dispatch B windows whose A neighbours have committed (and,
                // when paced, whose own data has arrived).
                for j in 0..b_count {
                    if b_sent[j] {
                        continue;
                    }
                    let deps_met = a_done[j] && (j + 1 >= a_count || a_done[j + 1]);
                    if !deps_met {
                        continue;
                    }
                    let (pos, window) = b_list[j];
                    if pace.is_some() && epoch.elapsed() < data_deadline(window.rounds.1) {
                        continue;
                    }
                    let lo = window.rounds.0 * n_stab;
                    let hi = window.rounds.1 * n_stab;
                    let mut bits = defects[lo..hi].to_vec();
                    let left = commits[a_list[j].0].as_ref().expect("A_j committed");
                    let right = (j + 1 < a_count)
                        .then(|| commits[a_list[j + 1].0].as_ref().expect("A_j+1 committed"));
                    for &v in left
                        .artificial_defects
                        .iter()
                        .chain(right.into_iter().flat_map(|c| c.artificial_defects.iter()))
                    {
                        if v >= lo && v < hi {
                            bits[v - lo] ^= true;
                        }
                    }
                    let ds = DefectSet::new(
                        bits.iter()
                            .enumerate()
                            .filter_map(|(i, &b)| b.then_some(lo + i))
                            .collect(),
                    );
                    send(&task_txs, n + j % n, pos, window, ds);
                    b_sent[j] = true;
                    dispatched += 1;
                }
            }

            if received == dispatched && (aborted || dispatched == total) {
                break;
            }

            // Wait for a result; when paced with pending data-gated
            // dispatches, wake up at the earliest data deadline.
            let msg = if !aborted && pace.is_some() {
                let mut wake: Option<Duration> = None;
                if next_a < a_count {
                    wake = Some(data_deadline(a_list[next_a].1.rounds.1));
                }
                for j in 0..b_count {
                    if !b_sent[j] && a_done[j] && (j + 1 >= a_count || a_done[j + 1]) {
                        let d = data_deadline(b_list[j].1.rounds.1);
                        wake = Some(wake.map_or(d, |cur| cur.min(d)));
                    }
                }
                match wake {
                    Some(deadline) => {
                        let timeout = deadline.saturating_sub(epoch.elapsed());
                        match result_rx.recv_timeout(timeout) {
                            Ok(msg) => Some(msg),
                            Err(mpsc::RecvTimeoutError::Timeout) => None,
                            Err(mpsc::RecvTimeoutError::Disconnected) => {
                                first_error = Some(Error::WorkerPanic(
                                    "all pipeline workers exited early".into(),
                                ));
                                break;
                            }
                        }
                    }
                    None => match result_rx.recv() {
                        Ok(msg) => Some(msg),
                        Err(_) => {
                            first_error = Some(Error::WorkerPanic(
                                "all pipeline workers exited early".into(),
                            ));
                            break;
                        }
                    },
                }
            } else {
                match result_rx.recv() {
                    Ok(msg) => Some(msg),
                    Err(_) => {
                        first_error = Some(Error::WorkerPanic(
                            "all pipeline workers exited early".into(),
                        ));
                        break;
                    }
                }
            };
            let Some(msg) = msg else { continue };
            received += 1;
            decode_secs[msg.pos] = msg.decode_seconds;
            if first_dispatch[msg.block].is_none() {
                first_dispatch[msg.block] = Some(msg.dispatch_seconds);
            }
            match msg.payload {
                Payload::Done(commit) => {
                    if let Some(j) = a_index_of_pos.get(msg.pos).copied() {
                        if j != usize::MAX {
                            a_done[j] = true;
                        }
                    }
                    commits[msg.pos] = Some(*commit);
                }
                Payload::Failed(e) => {
                    if first_error.is_none() {
                        first_error = Some(e);
                    }
                }
                Payload::Panicked(msg_text) => {
                    if first_error.is_none() {
                        first_error = Some(Error::WorkerPanic(msg_text));
                    }
                }
            }
        }
        drop(task_txs);
    });
    let wall_seconds = epoch.elapsed().as_secs_f64();

    if let Some(e) = first_error {
        return Err(e);
    }

    // Aggregate exactly like the two-phase in-memory decode: all A commits
    // in order, then all B commits, with the same integrity checks.
    let mut field = defects.to_vec();
    let mut total_correction = Correction::default();
    for phase in [&a_list, &b_list] {
        for (pos, window) in phase {
            let commit = commits[*pos].take().expect("all windows committed");
            for &fid in &commit.committed.edges {
                let fault = &graph.faults[fid];
                field[fault.a] ^= true;
                if let Some(b) = fault.b {
                    field[b] ^= true;
                }
            }
            let lo = window.commit.0 * n_stab;
            let hi = window.commit.1 * n_stab;
            if let Some(off) = field[lo..hi].iter().position(|&d| d) {
                return Err(Error::Integrity(format!(
                    "pipeline commit left defect at vertex {} inside rounds [{}, {})",
                    lo + off,
                    window.commit.0,
                    window.commit.1
                )));
            }
            total_correction.merge_disjoint(&commit.committed);
        }
    }
    if let Some(v) = field.iter().position(|&d| d) {
        return Err(Error::Integrity(format!(
            "pipeline finished with residual defect at vertex {v}"
        )));
    }

    Ok(PipelineRun {
        outcome: DecodeOutcome { correction: total_correction, num_windows: total },
        stats: PipelineStats {
            wall_seconds,
            tau_w_samples: decode_secs,
            tau0_samples: first_dispatch.into_iter().flatten().collect(),
        },
    })
}

/// One task of a synthetic schedule, all times in seconds from stream start.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScheduledTask {
    /// Position in the window layout.
    pub pos: usize,
    /// Executing block: A-blocks are 0..n, B-blocks n..2n.
    pub block: usize,
    /// When the task could first run: data present and dependencies done.
    pub ready: f64,
    pub start: f64,
    pub end: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SyntheticSchedule {
    pub tasks: Vec<ScheduledTask>,
    pub makespan: f64,
    /// Decoded rounds per second: `n_tot / makespan`.
    pub r_dec: f64,
}

/// Replays the pipeline's task graph under a fixed timing model: block b
/// runs its tasks FIFO; a task starts at
/// `max(block free, dependencies, data arrival) + tau_0` and takes `tau_w`.
/// Deterministic, so throughput numbers derived from it are exactly
/// reproducible.
pub fn synthetic_schedule(
    n_tot: usize,
    w: usize,
    plan: &PipelinePlan,
    timing: &TimingModel,
) -> Result<SyntheticSchedule> {
    let layout = parallel_layout(n_tot, w)?;
    let n = plan.n_pairs;
    let a_list: Vec<(usize, Window)> = layout
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, win)| matches!(win.layer, WindowLayer::A { .. }))
        .collect();
    let b_list: Vec<(usize, Window)> = layout
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, win)| matches!(win.layer, WindowLayer::B { .. }))
        .collect();

    let mut block_free = vec![0.0f64; 2 * n];
    let mut tasks = Vec::with_capacity(layout.len());
    let mut a_end = vec![0.0f64; a_list.len()];
    for (j, (pos, window)) in a_list.iter().enumerate() {
        let block = j % n;
        let ready = window.rounds.1 as f64 * timing.tau_rd;
        let start = block_free[block].max(ready) + timing.tau_0;
        let end = start + timing.tau_w;
        block_free[block] = end;
        a_end[j] = end;
        tasks.push(ScheduledTask { pos: *pos, block, ready, start, end });
    }
    for (j, (pos, window)) in b_list.iter().enumerate() {
        let block = n + j % n;
        let mut ready = window.rounds.1 as f64 * timing.tau_rd;
        ready = ready.max(a_end[j]);
        if j + 1 < a_end.len() {
            ready = ready.max(a_end[j + 1]);
        }
        let start = block_free[block].max(ready) + timing.tau_0;
        let end = start + timing.tau_w;
        block_free[block] = end;
        tasks.push(ScheduledTask { pos: *pos, block, ready, start, end });
    }
    tasks.sort_by_key(|t| t.pos);
    let makespan = tasks.iter().map(|t| t.end).fold(0.0, f64::max);
    Ok(SyntheticSchedule { tasks, makespan, r_dec: n_tot as f64 / makespan })
}

/// Measures the mean decode time of a representative window by timing real
/// decodes over sampled noise. Returns the mean and the raw samples.
pub fn calibrate_tau_w(
    params: CodeParams,
    w: usize,
    inner: &dyn InnerDecoder,
    samples: usize,
    base_seed: u64,
) -> Result<(f64, Vec<f64>)> {
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one calibration sample".into()));
    }
    let graph = build_graph(params)?;
    let layout = parallel_layout(graph.rounds(), w)?;
    // Prefer a bulk A window (both faces rough); fall back to the first.
    let window = layout
        .iter()
        .copied()
        .find(|win| {
            matches!(win.layer, WindowLayer::A { .. })
                && win.rounds.0 > 0
                && win.rounds.1 < graph.rounds()
        })
        .unwrap_or(layout[0]);
    let view = WindowView::new(&graph, window);
    let mut durations = Vec::with_capacity(samples);
    for s in 0..samples {
        let err = sample_error(&graph, params.p, shot_seed(base_seed, s as u64))?;
        let stream = extract_syndrome(&graph, &err)?;
        let defects = DefectSet::from_defect_bits(&stream.defects, &graph, &window);
        let t0 = Instant::now();
        let _ = inner.decode(&view, &defects)?;
        durations.push(t0.elapsed().as_secs_f64());
    }
    let mean = durations.iter().sum::<f64>() / samples as f64;
    Ok((mean, durations))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClockKind {
    Wall,
    Synthetic(TimingModel),
}

#[derive(Debug, Clone)]
pub struct ThroughputConfig {
    /// Code family, distance and noise rate; the rounds field is ignored
    /// because the protocol sets its own history length.
    pub params: CodeParams,
    pub n_pairs: usize,
    pub shots: usize,
    pub base_seed: u64,
    /// Syndrome readout rate used for pacing, generation rate and the
    /// synthetic clock's data arrival times.
    pub tau_rd: f64,
    /// Wall mode: pace the stream at `tau_rd` instead of preloading.
    pub paced: bool,
    pub clock: ClockKind,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThroughputReport {
    pub d: usize,
    pub p: f64,
    pub rounds: usize,
    pub n_pairs: usize,
    pub shots: usize,
    /// Decoded rounds per second.
    pub r_dec_mean: f64,
    pub r_dec_stderr: f64,
    /// Processed syndrome bits per second.
    pub r_proc: f64,
    /// Generated syndrome bits per second.
    pub r_gen: f64,
    /// Backlog ratio: generation rate over processing rate.
    pub f: f64,
    pub wall_seconds: f64,
    pub tau_w_mean: f64,
    #[serde(skip)]
    pub tau_w_samples: Vec<f64>,
    pub tau0_est: f64,
    /// True when dispatch overhead alone saturates the pairs.
    pub dispatch_limited: bool,
    pub mode: &'static str,
}

/// Rounds per shot of the throughput protocol: enough history to keep
/// `n_pairs` pairs busy with start-up and drain amortized away.
pub fn throughput_rounds(n_pairs: usize, d: usize) -> usize {
    8 * (n_pairs + 1) * d
}

/// Measures streaming throughput with `n_pairs` worker pairs and window
/// unit `w = d`. Wall mode times the real threaded pipeline per shot;
/// synthetic mode replays the task graph under the given timing model.
pub fn measure_throughput(cfg: &ThroughputConfig, inner: &dyn InnerDecoder) -> Result<ThroughputReport> {
    if cfg.shots == 0 {
        return Err(Error::InvalidParameter("need at least one shot".into()));
    }
    let plan = PipelinePlan::new(cfg.n_pairs)?;
    let d = cfg.params.d;
    let w = d;
    let rounds = throughput_rounds(cfg.n_pairs, d);
    let params = CodeParams::new(cfg.params.family, d, rounds, cfg.params.p)?;
    let bits_per_round = params.syndrome_bits_per_round() as f64;
    let r_gen = bits_per_round / cfg.tau_rd;

    let total_wall = Instant::now();
    let (r_dec_samples, tau_w_mean, tau_w_samples, tau0_est) = match cfg.clock {
        ClockKind::Synthetic(timing) => {
            let schedule = synthetic_schedule(rounds, w, &plan, &timing)?;
            (vec![schedule.r_dec], timing.tau_w, vec![timing.tau_w], timing.tau_0)
        }
        ClockKind::Wall => {
            let graph = build_graph(params)?;
            let source = if cfg.paced {
                StreamSource::Paced { tau_rd: cfg.tau_rd }
            } else {
                StreamSource::Preloaded
            };
            let mut r_dec_samples = Vec::with_capacity(cfg.shots);
            let mut tau_w_samples = Vec::new();
            let mut tau0_samples = Vec::new();
            for shot in 0..cfg.shots {
                let err = sample_error(&graph, params.p, shot_seed(cfg.base_seed, shot as u64))?;
                let stream = extract_syndrome(&graph, &err)?;
                let run = run_pipeline(&graph, &stream.defects, w, inner, &plan, &source)?;
                r_dec_samples.push(rounds as f64 / run.stats.wall_seconds);
                tau_w_samples.extend(run.stats.tau_w_samples);
                tau0_samples.extend(run.stats.tau0_samples);
            }
            let tau_w_mean = mean(&tau_w_samples);
            let tau0_est = mean(&tau0_samples);
            (r_dec_samples, tau_w_mean, tau_w_samples, tau0_est)
        }
    };
    let wall_seconds = total_wall.elapsed().as_secs_f64();

    let r_dec_mean = mean(&r_dec_samples);
    let r_dec_stderr = stderr(&r_dec_samples);
    let r_proc = r_dec_mean * bits_per_round;
    Ok(ThroughputReport {
        d,
        p: params.p,
        rounds,
        n_pairs: cfg.n_pairs,
        shots: cfg.shots,
        r_dec_mean,
        r_dec_stderr,
        r_proc,
        r_gen,
        f: r_gen / r_proc,
        wall_seconds,
        tau_w_mean,
        tau_w_samples,
        tau0_est,
        dispatch_limited: cfg.n_pairs as f64 * tau0_est > tau_w_mean,
        mode: match cfg.clock {
            ClockKind::Wall => "wall",
            ClockKind::Synthetic(_) => "synthetic",
        },
    })
}

fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Standard error of the mean (sample standard deviation over sqrt n);
/// zero for fewer than two samples.
fn stderr(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let var = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n - 1) as f64;
    (var / n as f64).sqrt()
}

/// Verdict on a sustained backlog ratio `f`: stable when processing keeps
/// up, otherwise the expected slowdown compounds per lattice-surgery
/// dependency step as `f^k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BacklogVerdict {
    pub stable: bool,
    pub slowdown_factor: f64,
}

pub fn check_backlog(f: f64, dependency_depth: u32) -> BacklogVerdict {
    if f <= 1.0 {
        BacklogVerdict { stable: true, slowdown_factor: 1.0 }
    } else {
        BacklogVerdict { stable: false, slowdown_factor: f.powi(dependency_depth as i32) }
    }
}

/// One line of the throughput benchmark output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub d: usize,
    pub p: f64,
    pub rounds: usize,
    pub workers: usize,
    pub r_dec_mean: f64,
    pub r_dec_stderr: f64,
    pub tau_w_mean: f64,
    pub tau0_est: f64,
    pub f: f64,
}

impl From<&ThroughputReport> for BenchRecord {
    fn from(r: &ThroughputReport) -> Self {
        BenchRecord {
            d: r.d,
            p: r.p,
            rounds: r.rounds,
            workers: r.n_pairs,
            r_dec_mean: r.r_dec_mean,
            r_dec_stderr: r.r_dec_stderr,
            tau_w_mean: r.tau_w_mean,
            tau0_est: r.tau0_est,
            f: r.f,
        }
    }
}
