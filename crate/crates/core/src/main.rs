use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use windec::decoder::{GrowthMode, UnionFindDecoder};
use windec::graph::{build_graph, CodeFamily, CodeParams};
use windec::harness::{
    run_fidelity, run_plan, run_throughput, write_outputs, DecodeMode, ExperimentConfig,
    ThroughputClock,
};
use windec::resources::TimingModel;
use windec::tiling::{assign_boundaries, color_hex_2d, extrude_to_prisms};
use windec::{Error, Result};

#[derive(Parser)]
#[command(
    name = "windec",
    version,
    about = "Sliding-window and parallel-window decoding benchmarks for surface-type codes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compare logical error rates of decode modes on shared noise samples
    Fidelity(FidelityArgs),
    /// Sweep streaming throughput over worker-pair counts
    Throughput(ThroughputArgs),
    /// Size the minimal pipeline for a timing model
    Plan(PlanArgs),
    /// Print a decoding graph in a plain text format
    ExportGraph(ExportGraphArgs),
    /// Three-color a hexagonal tiling of a patch layout and report spacings
    TilingDemo(TilingDemoArgs),
}

/// Experiment settings; a config file provides defaults, flags override it,
/// and WINDEC_WORKERS overrides the worker list.
#[derive(Args)]
struct ConfigArgs {
    /// Config file with flat `key = value` lines
    #[arg(long)]
    config: Option<PathBuf>,
    /// Code family: repetition or rotated_planar
    #[arg(long)]
    family: Option<String>,
    /// Code distances, comma separated
    #[arg(long, value_delimiter = ',')]
    distances: Option<Vec<usize>>,
    /// Physical error probability per data qubit and per measurement
    #[arg(long)]
    p: Option<f64>,
    /// Rounds per shot: absolute (`32`) or per distance (`4d`)
    #[arg(long)]
    rounds: Option<String>,
    #[arg(long)]
    shots: Option<usize>,
    /// Worker-pair counts, comma separated
    #[arg(long, value_delimiter = ',')]
    workers: Option<Vec<usize>>,
    /// Committed rounds per sliding step (default: d)
    #[arg(long)]
    n_com: Option<usize>,
    /// Lookahead rounds per sliding window (default: d)
    #[arg(long)]
    n_buf: Option<usize>,
    /// Window unit of the parallel layout (default: d)
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Syndrome readout time in seconds
    #[arg(long)]
    tau_rd: Option<f64>,
    /// JSON-lines output file
    #[arg(long)]
    output: Option<PathBuf>,
    /// CSV output file
    #[arg(long)]
    csv: Option<PathBuf>,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::from_file(path)?,
            None => ExperimentConfig::default(),
        };
        cfg.apply_env_overrides()?;
        if let Some(family) = &self.family {
            cfg.family = family.parse()?;
        }
        if let Some(d) = &self.distances {
            cfg.distances = d.clone();
        }
        if let Some(p) = self.p {
            cfg.p = p;
        }
        if let Some(rounds) = &self.rounds {
            cfg.rounds = rounds.parse()?;
        }
        if let Some(shots) = self.shots {
            cfg.shots = shots;
        }
        if let Some(workers) = &self.workers {
            cfg.workers = workers.clone();
        }
        if self.n_com.is_some() {
            cfg.n_com = self.n_com;
        }
        if self.n_buf.is_some() {
            cfg.n_buf = self.n_buf;
        }
        if self.w.is_some() {
            cfg.w = self.w;
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(tau_rd) = self.tau_rd {
            cfg.tau_rd = tau_rd;
        }
        if self.output.is_some() {
            cfg.output = self.output.clone();
        }
        if self.csv.is_some() {
            cfg.csv = self.csv.clone();
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn parse_growth(s: &str) -> Result<GrowthMode> {
    match s {
        "half" | "half_edge" => Ok(GrowthMode::HalfEdge),
        "full" | "full_edge" => Ok(GrowthMode::FullEdge),
        other => Err(Error::Config(format!("unknown growth mode {other:?}: want half or full"))),
    }
}

#[derive(Args)]
struct FidelityArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Decode modes to run, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = ["global".to_string(), "sliding".to_string(), "parallel".to_string()])]
    modes: Vec<String>,
    /// Cluster growth step: half or full edges per pass
    #[arg(long, default_value = "half")]
    growth: String,
}

#[derive(Args)]
struct ThroughputArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Clock: wall (time the real pipeline) or synthetic (replay the task
    /// graph under a timing model)
    #[arg(long, default_value = "wall")]
    clock: String,
    /// Wall clock only: release syndrome rounds at tau_rd instead of
    /// preloading them
    #[arg(long)]
    paced: bool,
    /// Synthetic clock only: per-window decode time in seconds
    /// (calibrated from real decodes when omitted)
    #[arg(long)]
    tau_w: Option<f64>,
    /// Synthetic clock only: dispatch overhead per window in seconds
    #[arg(long, default_value_t = 2e-6)]
    tau_0: f64,
    /// Cluster growth step: half or full edges per pass
    #[arg(long, default_value = "half")]
    growth: String,
}

#[derive(Args)]
struct PlanArgs {
    /// Syndrome readout time in seconds
    #[arg(long, default_value_t = 1e-6)]
    tau_rd: f64,
    /// Per-window decode time in seconds
    #[arg(long)]
    tau_w: f64,
    /// Dispatch overhead per window in seconds
    #[arg(long, default_value_t = 1e-6)]
    tau_0: f64,
    /// Committed rounds per window
    #[arg(long)]
    n_com: usize,
    /// Lookahead rounds per window
    #[arg(long)]
    n_buf: usize,
    /// Code distance
    #[arg(long)]
    d: usize,
    /// Data qubits per logical patch (default: d squared)
    #[arg(long)]
    data_qubits: Option<usize>,
}

#[derive(Args)]
struct ExportGraphArgs {
    /// Code family: repetition or rotated_planar
    #[arg(long, default_value = "rotated_planar")]
    family: String,
    #[arg(long, default_value_t = 3)]
    d: usize,
    #[arg(long, default_value_t = 4)]
    rounds: usize,
    #[arg(long, default_value_t = 0.02)]
    p: f64,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TilingDemoArgs {
    /// Patch layout extent, width x height
    #[arg(long, default_value_t = 10.0)]
    width: f64,
    #[arg(long, default_value_t = 8.0)]
    height: f64,
    /// Hex cell circumradius
    #[arg(long, default_value_t = 1.0)]
    cell_size: f64,
    /// Extrude cells through this many rounds and list the prisms
    #[arg(long)]
    rounds: Option<usize>,
    /// Also list every cell with its axial coordinates and color
    #[arg(long)]
    list_cells: bool,
}

fn cmd_fidelity(args: &FidelityArgs) -> Result<()> {
    let cfg = args.config.resolve()?;
    let modes: Vec<DecodeMode> =
        args.modes.iter().map(|m| m.parse()).collect::<Result<_>>()?;
    let inner = UnionFindDecoder::new(parse_growth(&args.growth)?);
    let records = run_fidelity(&cfg, &modes, &inner)?;
    for record in &records {
        println!("{}", serde_json::to_string(record).expect("record serializes"));
    }
    for path in write_outputs(&cfg, &records)? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_throughput(args: &ThroughputArgs) -> Result<()> {
    let cfg = args.config.resolve()?;
    let clock = match args.clock.as_str() {
        "wall" => ThroughputClock::Wall { paced: args.paced },
        "synthetic" => ThroughputClock::Synthetic { tau_w: args.tau_w, tau_0: args.tau_0 },
        other => {
            return Err(Error::Config(format!(
                "unknown clock {other:?}: want wall or synthetic"
            )))
        }
    };
    let inner = UnionFindDecoder::new(parse_growth(&args.growth)?);
    let records = run_throughput(&cfg, &clock, &inner)?;
    for record in &records {
        println!("{}", serde_json::to_string(record).expect("record serializes"));
    }
    for path in write_outputs(&cfg, &records)? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_plan(args: &PlanArgs) -> Result<()> {
    let timing = TimingModel::new(args.tau_rd, args.tau_w, args.tau_0)?;
    let data_qubits = args.data_qubits.unwrap_or(args.d * args.d);
    println!("{}", run_plan(&timing, args.n_com, args.n_buf, args.d, data_qubits)?);
    Ok(())
}

fn cmd_export_graph(args: &ExportGraphArgs) -> Result<()> {
    let family: CodeFamily = args.family.parse()?;
    let params = CodeParams::new(family, args.d, args.rounds, args.p)?;
    let graph = build_graph(params)?;
    let text = graph.export_text();
    match &args.output {
        Some(path) => {
            std::fs::write(path, text)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_tiling_demo(args: &TilingDemoArgs) -> Result<()> {
    let tiling = color_hex_2d((args.width, args.height), args.cell_size)?;
    let faces = assign_boundaries(&tiling);
    let mut per_color = [0usize; 3];
    for cell in &tiling.cells {
        per_color[cell.color] += 1;
    }
    let last_color_rough = faces
        .iter()
        .zip(&tiling.cells)
        .filter(|(_, c)| c.color == 2)
        .flat_map(|(f, _)| &f.faces)
        .filter(|face| face.kind == windec::window::BoundaryKind::Rough)
        .count();
    println!("cells: {} (color 0: {}, 1: {}, 2: {})", tiling.cells.len(), per_color[0], per_color[1], per_color[2]);
    println!("cell circumradius: {}", tiling.cell_size);
    println!("center spacing: {:.6}", tiling.spacing);
    if let Some(dist) = tiling.min_same_color_center_distance() {
        println!("min same-color center distance: {dist:.6}");
    }
    println!("same-color cell gap: {:.6}", tiling.same_color_cell_gap());
    println!("rough faces on the last color: {last_color_rough}");
    if args.list_cells {
        for cell in &tiling.cells {
            println!(
                "cell {:>3}  q {:>3}  r {:>3}  color {}  center ({:.3}, {:.3})",
                cell.id, cell.axial.0, cell.axial.1, cell.color, cell.center.0, cell.center.1
            );
        }
    }
    if let Some(rounds) = args.rounds {
        let prisms = extrude_to_prisms(&tiling, rounds);
        println!("prisms over {rounds} rounds: {}", prisms.len());
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Fidelity(args) => cmd_fidelity(args),
        Cmd::Throughput(args) => cmd_throughput(args),
        Cmd::Plan(args) => cmd_plan(args),
        Cmd::ExportGraph(args) => cmd_export_graph(args),
        Cmd::TilingDemo(args) => cmd_tiling_demo(args),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
