//! Command-line front end. Every subcommand is a thin wrapper over the
//! library call of the same name.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::complexity::{covering_estimate, default_grid, estimate_dimension, sweep_dimension_curve, CoverMode};
use crate::error::{invalid, GraphonError, Result};
use crate::estimate::estimate_distances;
use crate::experiments::{parse_plan, run_plan, simulate};
use crate::io::{read_graph, read_spec, write_distances_csv, write_graph, write_sweep_csv};
use crate::packing_test::{run_packing_test, Decision, TestConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_REJECT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "graphon", version, about = "Complexity estimation for W-random graphs")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print timings to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a graph from a graphon specification.
    Sample {
        /// TOML file with a [graphon] section.
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Output path; `.txt`/`.edges` write an edge list, anything else binary.
        #[arg(long)]
        out: PathBuf,
        /// Keep each edge with this probability.
        #[arg(long, default_value_t = 1.0)]
        rho: f64,
    },
    /// Estimate squared neighborhood distances.
    Distances {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the conservative estimate.
        #[arg(long)]
        conservative: bool,
    },
    /// Covering number of the estimated distances.
    Covering {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        eps: f64,
        /// exact, greedy or auto.
        #[arg(long, default_value = "auto")]
        mode: String,
    },
    /// Minkowski dimension estimate.
    Dimension {
        #[arg(long)]
        graph: PathBuf,
        /// Upper bound D on the dimension.
        #[arg(long)]
        dcap: f64,
        /// Constant in front of the radius.
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
    /// Covering curve over a grid of radii.
    Sweep {
        #[arg(long)]
        graph: PathBuf,
        /// `start:step:count`; 0.005:0.005:101 by default.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Test N(eps) <= K; exit code 0 accepts, 3 rejects.
    Test {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        eps: f64,
        /// Write the rejection certificate here as CSV.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Run an experiment plan.
    Experiment {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

/// Parses `start:step:count` into `start + k step`, `k < count`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, step, count] = parts[..] else {
        return invalid(format!("grid {s:?} is not start:step:count"));
    };
    let bad = |e: String| GraphonError::InvalidArgument(format!("grid {s:?}: {e}"));
    let start: f64 = start.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?;
    let step: f64 = step.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?;
    let count: usize = count.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?;
    if count == 0 || !(step > 0.0) {
        return invalid(format!("grid {s:?} needs count >= 1 and step > 0"));
    }
    Ok((0..count).map(|k| start + k as f64 * step).collect())
}

fn execute(cmd: &Command, out: &mut (dyn Write + Send)) -> Result<i32> {
    match cmd {
        Command::Sample { spec, n, seed, out: path, rho } => {
            let spec = read_spec(spec)?;
            let (_, a) = simulate(&spec, *n, *rho, *seed)?;
            write_graph(path, &a)?;
            writeln!(out, "wrote n={} edges={} rho={} to {}", a.n(), a.num_edges(), a.rho(), path.display())?;
        }
        Command::Distances { graph, out: path, conservative } => {
            let est = estimate_distances(&read_graph(graph)?)?;
            let mut w = BufWriter::new(File::create(path)?);
            write_distances_csv(&mut w, &est, *conservative)?;
            w.flush()?;
            if est.below_theorem_scale() {
                writeln!(out, "warning: n={} is below theorem scale", est.n)?;
            }
        }
        Command::Covering { graph, eps, mode } => {
            let mode: CoverMode = mode.parse()?;
            let r = covering_estimate(&estimate_distances(&read_graph(graph)?)?, *eps, mode)?;
            let centers: Vec<String> = r.centers.iter().map(|c| c.to_string()).collect();
            writeln!(out, "size={} eps={} method={} centers={}", r.size, r.radius, r.method.as_str(), centers.join(";"))?;
        }
        Command::Dimension { graph, dcap, c } => {
            let d = estimate_dimension(&estimate_distances(&read_graph(graph)?)?, *dcap, *c)?;
            let sparse = d.sparse_rho.map_or_else(|| "none".to_string(), |r| r.to_string());
            writeln!(
                out,
                "dim_hat={} eps_d={} cov_estimate={} method={} sparse_rho={sparse}",
                d.value,
                d.radius_used,
                d.cov_estimate,
                d.cover.method.as_str()
            )?;
        }
        Command::Sweep { graph, grid, out: path } => {
            let grid = match grid {
                Some(g) => parse_grid(g)?,
                None => default_grid(),
            };
            let sweep = sweep_dimension_curve(&estimate_distances(&read_graph(graph)?)?, &grid)?;
            let mut w = BufWriter::new(File::create(path)?);
            write_sweep_csv(&mut w, &sweep)?;
            w.flush()?;
            match sweep.plateau {
                Some(p) => writeln!(out, "plateau eps=[{}, {}] mean={}", p.eps_lo, p.eps_hi, p.mean)?,
                None => writeln!(out, "plateau none")?,
            }
        }
        Command::Test { graph, k, eps, certificate } => {
            let cfg = TestConfig::new(*k, *eps);
            cfg.validate()?;
            let r = run_packing_test(&read_graph(graph)?, &cfg)?;
            let cert = r.certificate.clone().unwrap_or_default();
            writeln!(
                out,
                "{} statistic={} eps_hat={} t_n={} method={}{} certificate={}",
                r.decision.as_str(),
                r.statistic,
                r.eps_hat,
                r.t_n,
                r.method.as_str(),
                if r.below_theorem_scale { " below_theorem_scale" } else { "" },
                cert.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
            )?;
            if let (Some(path), Decision::Reject) = (certificate, r.decision) {
                let mut w = BufWriter::new(File::create(path)?);
                writeln!(w, "node")?;
                for c in &cert {
                    writeln!(w, "{c}")?;
                }
                w.flush()?;
            }
            return Ok(match r.decision {
                Decision::Accept => EXIT_OK,
                Decision::Reject => EXIT_REJECT,
            });
        }
        Command::Experiment { plan, out_dir } => {
            let plan = parse_plan(&std::fs::read_to_string(plan)?)?;
            for p in run_plan(&plan, out_dir)? {
                writeln!(out, "wrote {}", p.display())?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let start = std::time::Instant::now();
    let result = match cli.threads {
        Some(0) => invalid("--threads must be at least 1"),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| GraphonError::InvalidArgument(e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli.command, out))),
        None => execute(&cli.command, out),
    };
    if cli.verbose {
        let _ = writeln!(err, "elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &GraphonError) -> i32 {
    match e {
        GraphonError::UnsupportedOracle(_) => EXIT_UNSUPPORTED,
        _ => EXIT_ERROR,
    }
}
