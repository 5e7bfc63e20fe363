//! Window layout and commit machinery.
//!
//! A decode proceeds window by window: each window sees a slice of rounds,
//! decodes its defects tentatively, then commits only the edges touching its
//! commit region. Crossing edges toggle artificial defects at their
//! out-of-commit endpoints, which later windows absorb. Two layouts exist:
//!
//! * sliding: windows advance by `n_com` rounds, each committing its lowest
//!   `n_com` rounds and keeping `n_buf` rounds of lookahead;
//! * parallel: an independent first layer of A windows (span `3w`, committing
//!   the middle `w`), then a second layer of B windows (span `3w`, fully
//!   committed) that reconcile the gaps using the A commits' artificial
//!   defects. All A windows are mutually independent, as are all B windows.

use serde::{Deserialize, Serialize};

use crate::decoder::{Correction, DefectSet, InnerDecoder, WindowView};
use crate::error::{Error, Result};
use crate::graph::DecodingGraph;

/// Face behaviour of a window edge in time: a rough face admits matching to
/// the boundary through it, a smooth face does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryKind {
    Rough,
    Smooth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum WindowLayer {
    Sliding { index: usize },
    A { index: usize },
    B { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    /// Half-open round interval the window decodes.
    pub rounds: (usize, usize),
    /// Half-open round interval whose matching is final, subset of `rounds`.
    pub commit: (usize, usize),
    pub layer: WindowLayer,
    pub bottom: BoundaryKind,
    pub top: BoundaryKind,
}

impl Window {
    pub fn num_rounds(&self) -> usize {
        self.rounds.1 - self.rounds.0
    }

    pub fn commit_rounds(&self) -> usize {
        self.commit.1 - self.commit.0
    }
}

/// Sliding-window geometry: `n_com` committed rounds per step plus `n_buf`
/// rounds of lookahead (window size `n_com + n_buf`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowConfig {
    pub n_com: usize,
    pub n_buf: usize,
}

impl WindowConfig {
    pub fn new(n_com: usize, n_buf: usize) -> Result<Self> {
        if n_com == 0 {
            return Err(Error::InvalidParameter(
                "commit size must be at least one round".into(),
            ));
        }
        Ok(WindowConfig { n_com, n_buf })
    }

    pub fn window_rounds(&self) -> usize {
        self.n_com + self.n_buf
    }
}

/// Sliding layout over `n_tot` rounds. The last window commits everything
/// left, and only that window has a smooth top face.
pub fn sliding_layout(n_tot: usize, cfg: &WindowConfig) -> Result<Vec<Window>> {
    if n_tot == 0 {
        return Err(Error::InvalidParameter("cannot lay out zero rounds".into()));
    }
    let n_w = cfg.window_rounds();
    let mut windows = Vec::new();
    let mut i = 0usize;
    loop {
        let lo = i * cfg.n_com;
        let hi = lo + n_w;
        let last = hi >= n_tot;
        let (hi, commit_hi) = if last { (n_tot, n_tot) } else { (hi, lo + cfg.n_com) };
        windows.push(Window {
            rounds: (lo, hi),
            commit: (lo, commit_hi),
            layer: WindowLayer::Sliding { index: i },
            bottom: BoundaryKind::Smooth,
            top: if last { BoundaryKind::Smooth } else { BoundaryKind::Rough },
        });
        if last {
            return Ok(windows);
        }
        i += 1;
    }
}

/// Parallel layout over `n_tot` rounds with half-buffer `w`.
///
/// Nominal shapes, in units of `w` relative to `4wk`: A_k spans [0, 3),
/// commits [1, 2) (A_0 commits [0, 2)); B_k spans and commits [2, 5).
/// The tail is regularized so commits exactly tile [0, n_tot): if the final
/// stretch past the last full B is at most `w` rounds beyond that B's
/// preceding A span, the A absorbs it (extended commit, clipped span);
/// otherwise a clipped B covers it. Windows are returned in commit order
/// A_0, B_0, A_1, B_1, ...
pub fn parallel_layout(n_tot: usize, w: usize) -> Result<Vec<Window>> {
    if n_tot == 0 {
        return Err(Error::InvalidParameter("cannot lay out zero rounds".into()));
    }
    if w == 0 {
        return Err(Error::InvalidParameter("window unit w must be positive".into()));
    }
    let mut windows = Vec::new();
    let mut k = 0usize;
    loop {
        let a_lo = 4 * w * k;
        let a_hi = a_lo + 3 * w;
        let a_commit_lo = if k == 0 { 0 } else { a_lo + w };
        let a_commit_hi = a_lo + 2 * w;
        if a_commit_hi >= n_tot {
            // The commit frontier ends inside this A's nominal commit.
            windows.push(make_a(k, (a_lo, n_tot.min(a_hi)), (a_commit_lo, n_tot), n_tot));
            break;
        }
        let b_lo = a_lo + 2 * w;
        let b_hi = a_lo + 5 * w;
        if b_hi >= n_tot {
            if n_tot > a_hi {
                // Tall enough tail: keep A_k nominal, clip B_k to the end.
                windows.push(make_a(k, (a_lo, a_hi), (a_commit_lo, a_commit_hi), n_tot));
                windows.push(make_b(k, (b_lo, n_tot.min(b_hi))));
            } else {
                // Short tail folds into A_k: extend its commit to the end.
                windows.push(make_a(k, (a_lo, n_tot.min(a_hi)), (a_commit_lo, n_tot), n_tot));
            }
            break;
        }
        windows.push(make_a(k, (a_lo, a_hi), (a_commit_lo, a_commit_hi), n_tot));
        windows.push(make_b(k, (b_lo, b_hi)));
        k += 1;
    }
    Ok(windows)
}

fn make_a(index: usize, rounds: (usize, usize), commit: (usize, usize), n_tot: usize) -> Window {
    Window {
        rounds,
        commit,
        layer: WindowLayer::A { index },
        bottom: if rounds.0 == 0 { BoundaryKind::Smooth } else { BoundaryKind::Rough },
        top: if rounds.1 == n_tot { BoundaryKind::Smooth } else { BoundaryKind::Rough },
    }
}

/// B faces are always smooth: the neighbouring A commits already fixed the
/// crossing faults, leaving artificial defects inside the B span.
fn make_b(index: usize, rounds: (usize, usize)) -> Window {
    Window {
        rounds,
        commit: rounds,
        layer: WindowLayer::B { index },
        bottom: BoundaryKind::Smooth,
        top: BoundaryKind::Smooth,
    }
}

/// JSON manifest of a layout, for inspection and golden tests.
pub fn layout_manifest_json(windows: &[Window]) -> String {
    serde_json::to_string_pretty(windows).expect("window layout serializes")
}

/// Outcome of splitting a tentative correction at the commit region.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CommitResult {
    /// Edges with at least one endpoint in the commit region; final.
    pub committed: Correction,
    /// Tentative edges left to later windows.
    pub discarded: Vec<usize>,
    /// Vertices outside the commit region toggled by committed crossing
    /// edges (XOR-reduced, sorted).
    pub artificial_defects: Vec<usize>,
}

/// Splits `tentative` into committed and discarded parts at the window's
/// commit region. Every defect inside the commit region is resolved by the
/// committed part alone; crossing edges hand artificial defects to the
/// rounds outside.
pub fn split_commit(
    graph: &DecodingGraph,
    window: &Window,
    tentative: &Correction,
) -> Result<CommitResult> {
    let in_commit = |v: usize| {
        let r = graph.round_of(v);
        r >= window.commit.0 && r < window.commit.1
    };
    let mut committed_edges = Vec::new();
    let mut discarded = Vec::new();
    let mut toggles: Vec<usize> = Vec::new();
    for &fid in &tentative.edges {
        let fault = &graph.faults[fid];
        let a_in = in_commit(fault.a);
        let b_in = fault.b.is_some_and(in_commit);
        if !a_in && !b_in {
            discarded.push(fid);
            continue;
        }
        committed_edges.push(fid);
        if !a_in {
            toggles.push(fault.a);
        }
        if let Some(b) = fault.b {
            if !b_in {
                toggles.push(b);
            }
        }
    }
    toggles.sort_unstable();
    let mut artificial = Vec::new();
    let mut i = 0;
    while i < toggles.len() {
        let run = toggles[i..].iter().take_while(|&&v| v == toggles[i]).count();
        if run % 2 == 1 {
            artificial.push(toggles[i]);
        }
        i += run;
    }
    Ok(CommitResult {
        committed: Correction::from_edges(committed_edges, graph),
        discarded,
        artificial_defects: artificial,
    })
}

/// Result of a full multi-window decode.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodeOutcome {
    pub correction: Correction,
    pub num_windows: usize,
}

/// How window decode jobs within one independent layer are executed.
/// Results are aggregated in window order, so the outcome is identical
/// across executors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Executor {
    Serial,
    Threads(usize),
}

impl Executor {
    pub fn run<T, F>(&self, jobs: Vec<F>) -> Vec<T>
    where
        T: Send,
        F: FnOnce() -> T + Send,
    {
        let workers = match *self {
            Executor::Serial => 1,
            Executor::Threads(n) => n.max(1),
        };
        if workers <= 1 || jobs.len() <= 1 {
            return jobs.into_iter().map(|f| f()).collect();
        }
        let n_jobs = jobs.len();
        let queue = std::sync::Mutex::new(
            jobs.into_iter().enumerate().collect::<std::collections::VecDeque<_>>(),
        );
        let results = std::sync::Mutex::new((0..n_jobs).map(|_| None).collect::<Vec<_>>());
        std::thread::scope(|scope| {
            for _ in 0..workers.min(n_jobs) {
                scope.spawn(|| loop {
                    let job = queue.lock().unwrap().pop_front();
                    let Some((idx, f)) = job else { break };
                    let out = f();
                    results.lock().unwrap()[idx] = Some(out);
                });
            }
        });
        results
            .into_inner()
            .unwrap()
            .into_iter()
            .map(|r| r.expect("every job ran"))
            .collect()
    }
}

/// Applies a committed correction to the working defect field: every real
/// endpoint toggles. Commit-region defects clear; crossing edges realize
/// their artificial defects.
fn apply_commit(graph: &DecodingGraph, field: &mut [bool], committed: &Correction) {
    for &fid in &committed.edges {
        let fault = &graph.faults[fid];
        field[fault.a] ^= true;
        if let Some(b) = fault.b {
            field[b] ^= true;
        }
    }
}

fn check_region_clear(
    graph: &DecodingGraph,
    field: &[bool],
    commit: (usize, usize),
    what: &str,
) -> Result<()> {
    let n_stab = graph.stabilizers_per_round();
    let lo = commit.0 * n_stab;
    let hi = commit.1 * n_stab;
    if let Some(off) = field[lo..hi].iter().position(|&d| d) {
        return Err(Error::Integrity(format!(
            "{what} left defect at vertex {} inside committed rounds [{}, {})",
            lo + off,
            commit.0,
            commit.1
        )));
    }
    Ok(())
}

fn decode_one(
    graph: &DecodingGraph,
    window: Window,
    field: &[bool],
    inner: &dyn InnerDecoder,
) -> Result<CommitResult> {
    let view = WindowView::new(graph, window);
    let defects = DefectSet::from_defect_bits(field, graph, &window);
    let tentative = inner.decode(&view, &defects)?;
    split_commit(graph, &window, &tentative)
}

fn run_layout_serial(
    graph: &DecodingGraph,
    defects: &[bool],
    windows: &[Window],
    inner: &dyn InnerDecoder,
) -> Result<DecodeOutcome> {
    if defects.len() != graph.num_vertices() {
        return Err(Error::Contract(format!(
            "defect field has {} bits, graph has {} vertices",
            defects.len(),
            graph.num_vertices()
        )));
    }
    let mut field = defects.to_vec();
    let mut total = Correction::default();
    for window in windows {
        let commit = decode_one(graph, *window, &field, inner)?;
        apply_commit(graph, &mut field, &commit.committed);
        check_region_clear(graph, &field, window.commit, "window commit")?;
        total.merge_disjoint(&commit.committed);
    }
    if let Some(v) = field.iter().position(|&d| d) {
        return Err(Error::Integrity(format!(
            "decode finished with residual defect at vertex {v}"
        )));
    }
    Ok(DecodeOutcome { correction: total, num_windows: windows.len() })
}

/// Decodes the full history as one window with smooth faces.
pub fn global_decode(
    graph: &DecodingGraph,
    defects: &[bool],
    inner: &dyn InnerDecoder,
) -> Result<DecodeOutcome> {
    let n_tot = graph.rounds();
    let window = Window {
        rounds: (0, n_tot),
        commit: (0, n_tot),
        layer: WindowLayer::Sliding { index: 0 },
        bottom: BoundaryKind::Smooth,
        top: BoundaryKind::Smooth,
    };
    run_layout_serial(graph, defects, &[window], inner)
}

/// Sequential sliding-window decode.
pub fn sliding_window_decode(
    graph: &DecodingGraph,
    defects: &[bool],
    cfg: &WindowConfig,
    inner: &dyn InnerDecoder,
) -> Result<DecodeOutcome> {
    let layout = sliding_layout(graph.rounds(), cfg)?;
    run_layout_serial(graph, defects, &layout, inner)
}

/// Two-layer parallel-window decode. All A windows decode independently from
/// the raw defect field; their commits inject artificial defects into the B
/// spans; all B windows then decode independently and commit fully. The
/// executor only controls scheduling; the result is executor-independent.
pub fn parallel_window_decode(
    graph: &DecodingGraph,
    defects: &[bool],
    w: usize,
    inner: &dyn InnerDecoder,
    executor: &Executor,
) -> Result<DecodeOutcome> {
    if defects.len() != graph.num_vertices() {
        return Err(Error::Contract(format!(
            "defect field has {} bits, graph has {} vertices",
            defects.len(),
            graph.num_vertices()
        )));
    }
    let layout = parallel_layout(graph.rounds(), w)?;
    let num_windows = layout.len();
    let (a_windows, b_windows): (Vec<Window>, Vec<Window>) = (
        layout.iter().copied().filter(|w| matches!(w.layer, WindowLayer::A { .. })).collect(),
        layout.iter().copied().filter(|w| matches!(w.layer, WindowLayer::B { .. })).collect(),
    );

    let mut field = defects.to_vec();
    let mut total = Correction::default();

    let field_ro = &field;
    let a_jobs: Vec<_> = a_windows
        .iter()
        .map(|&window| move || decode_one(graph, window, field_ro, inner))
        .collect();
    let a_results = executor.run(a_jobs);
    let mut a_commits = Vec::with_capacity(a_results.len());
    for res in a_results {
        a_commits.push(res?);
    }
    for (window, commit) in a_windows.iter().zip(&a_commits) {
        apply_commit(graph, &mut field, &commit.committed);
        check_region_clear(graph, &field, window.commit, "A-layer commit")?;
        total.merge_disjoint(&commit.committed);
    }

    let field_ro = &field;
    let b_jobs: Vec<_> = b_windows
        .iter()
        .map(|&window| move || decode_one(graph, window, field_ro, inner))
        .collect();
    let b_results = executor.run(b_jobs);
    let mut b_commits = Vec::with_capacity(b_results.len());
    for res in b_results {
        b_commits.push(res?);
    }
    for (window, commit) in b_windows.iter().zip(&b_commits) {
        debug_assert!(commit.discarded.is_empty() && commit.artificial_defects.is_empty());
        apply_commit(graph, &mut field, &commit.committed);
        check_region_clear(graph, &field, window.commit, "B-layer commit")?;
        total.merge_disjoint(&commit.committed);
    }
    if let Some(v) = field.iter().position(|&d| d) {
        return Err(Error::Integrity(format!(
            "parallel decode finished with residual defect at vertex {v}"
        )));
    }
    Ok(DecodeOutcome { correction: total, num_windows })
}
