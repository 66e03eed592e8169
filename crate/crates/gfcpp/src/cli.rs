//! Command-line front end: config-driven simulation and report generation.
//!
//! Exit codes: 0 when every selected check passes, 1 for a statistical
//! failure, 2 for a configuration error, 3 for an internal error.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analytics;
use crate::config::{self, ExperimentConfig};
use crate::error::{GfcppError, Result};
use crate::fde::{self, PmfSource, RowStatus};
use crate::jumps::JumpLaw;
use crate::processes::{self, Arrival, Representation};
use crate::rng::RngStream;
use crate::subordinators;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_STAT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser)]
#[command(name = "gfcpp", about = "Simulation and verification toolkit for compound Poisson processes on inverse-subordinator clocks", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simulate sample paths and write one CSV per path plus a manifest.
    Simulate {
        /// Config file path (or use --preset).
        config: Option<PathBuf>,
        /// Use a bundled preset instead of a config file.
        #[arg(long)]
        preset: Option<String>,
        /// Override the seed from the config.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; output is identical for any count.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run an analysis report and write its JSON.
    Report {
        config: Option<PathBuf>,
        #[arg(long)]
        preset: Option<String>,
        #[arg(long, value_enum)]
        kind: ReportKind,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// List the bundled parameter presets.
    Presets {
        /// Print the full config text of one preset.
        #[arg(long)]
        show: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    Moments,
    Lrd,
    Martingale,
    Dde,
    Representation,
}

impl ReportKind {
    fn name(self) -> &'static str {
        match self {
            Self::Moments => "moments",
            Self::Lrd => "lrd",
            Self::Martingale => "martingale",
            Self::Dde => "dde",
            Self::Representation => "representation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    StatFail,
    ConfigError,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Pass => EXIT_PASS,
            Self::StatFail => EXIT_STAT_FAIL,
            Self::ConfigError => EXIT_CONFIG,
        }
    }
}

fn exit_code_for(err: &GfcppError) -> i32 {
    match err {
        GfcppError::Config(_) | GfcppError::InvalidParameter(_) => EXIT_CONFIG,
        _ => EXIT_INTERNAL,
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(outcome) => outcome.exit_code(),
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Simulate {
            config,
            preset,
            seed,
            workers,
        } => {
            let cfg = resolve_config(config, preset, seed)?;
            cmd_simulate(&cfg, workers)?;
            Ok(Outcome::Pass)
        }
        Cmd::Report {
            config,
            preset,
            kind,
            seed,
            workers,
        } => {
            let cfg = resolve_config(config, preset, seed)?;
            cmd_report(&cfg, kind, workers)
        }
        Cmd::Presets { show } => {
            match show {
                Some(name) => {
                    let text = config::preset(&name).ok_or_else(|| {
                        GfcppError::Config(format!("unknown preset `{name}`"))
                    })?;
                    print!("{text}");
                }
                None => {
                    for name in config::PRESET_NAMES {
                        println!("{name}");
                    }
                }
            }
            Ok(Outcome::Pass)
        }
    }
}

fn resolve_config(
    path: Option<PathBuf>,
    preset: Option<String>,
    seed: Option<u64>,
) -> Result<ExperimentConfig> {
    let cfg = match (path, preset) {
        (Some(p), None) => config::load_config(&p)?,
        (None, Some(name)) => config::parse_config(&config::preset(&name).ok_or_else(
            || GfcppError::Config(format!("unknown preset `{name}`")),
        )?)?,
        _ => {
            return Err(GfcppError::Config(
                "pass exactly one of a config path or --preset".into(),
            ))
        }
    };
    Ok(match seed {
        Some(s) => cfg.with_seed(s),
        None => cfg,
    })
}

/// Runs `f(0..n)` on a dedicated pool with `workers` threads. Each job owns
/// its stream id, so the collected output is identical for any worker count.
fn run_parallel<T: Send>(
    workers: usize,
    n: usize,
    f: impl Fn(usize) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| GfcppError::Config(format!("worker pool: {e}")))?;
    let done = AtomicUsize::new(0);
    let decile = (n / 10).max(1);
    pool.install(|| {
        (0..n)
            .into_par_iter()
            .map(|i| {
                let out = f(i);
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                if n >= 10 && k % decile == 0 {
                    eprintln!("progress: {k}/{n}");
                }
                out
            })
            .collect()
    })
}

#[derive(Serialize)]
struct Manifest {
    config_hash: String,
    seed: u64,
    paths: usize,
    files: Vec<String>,
}

fn write_json(path: &std::path::Path, value: &impl Serialize) -> Result<()> {
    let mut f = fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut f, value).map_err(|e| GfcppError::Io(e.into()))?;
    f.write_all(b"\n")?;
    Ok(())
}

/// Writes one `t,value` CSV per path and a manifest recording the config
/// hash and seed. A zero-path request writes the manifest only.
pub fn cmd_simulate(cfg: &ExperimentConfig, workers: usize) -> Result<PathBuf> {
    fs::create_dir_all(&cfg.output)?;
    let files = run_parallel(workers, cfg.paths, |p| {
        let mut rng = RngStream::new(cfg.seed, p as u64);
        let path = match &cfg.spec.arrival {
            Arrival::Poisson { .. } => processes::simulate_cpp(
                cfg.spec.effective_rate(),
                &cfg.spec.jump,
                cfg.horizon,
                &mut rng,
            )?,
            Arrival::TimeChanged { .. } => {
                processes::simulate_gfcpp(&cfg.spec, cfg.horizon, cfg.grid, &mut rng)?
            }
        };
        let name = format!("path-{p:04}.csv");
        let mut buf = Vec::new();
        path.write_csv(&mut buf)?;
        fs::write(cfg.output.join(&name), buf)?;
        Ok(name)
    })?;
    let manifest = Manifest {
        config_hash: cfg.hash(),
        seed: cfg.seed,
        paths: cfg.paths,
        files,
    };
    let manifest_path = cfg.output.join("manifest.json");
    write_json(&manifest_path, &manifest)?;
    Ok(manifest_path)
}

/// Terminal (and optional intermediate) process values for one path index.
fn sample_values_at(
    cfg: &ExperimentConfig,
    times: &[f64],
    p: usize,
) -> Result<Vec<f64>> {
    let mut rng = RngStream::new(cfg.seed, p as u64);
    let spec = &cfg.spec;
    match spec.descriptor() {
        None => {
            let horizon = times.iter().fold(0.0f64, |a, &b| a.max(b));
            let path =
                processes::simulate_cpp(spec.effective_rate(), &spec.jump, horizon * (1.0 + 1e-12), &mut rng)?;
            Ok(times.iter().map(|&t| path.value_at(t)).collect())
        }
        Some(desc) => {
            let mut grid = vec![0.0];
            grid.extend_from_slice(times);
            grid.sort_by(f64::total_cmp);
            grid.dedup();
            let clock = subordinators::sample_inverse_at(desc, &grid, 2_000, &mut rng)?;
            let op_horizon = *clock.last().unwrap();
            let cpp = if op_horizon > 0.0 {
                Some(processes::simulate_cpp(
                    spec.effective_rate(),
                    &spec.jump,
                    op_horizon * (1.0 + 1e-12),
                    &mut rng,
                )?)
            } else {
                None
            };
            Ok(times
                .iter()
                .map(|&t| {
                    let i = grid.iter().position(|&g| g == t).unwrap();
                    cpp.as_ref().map_or(0.0, |c| c.value_at(clock[i]))
                })
                .collect())
        }
    }
}

/// Runs one report kind, writes `report-<kind>.json` into the output
/// directory, and maps its verdict to an exit outcome.
pub fn cmd_report(cfg: &ExperimentConfig, kind: ReportKind, workers: usize) -> Result<Outcome> {
    fs::create_dir_all(&cfg.output)?;
    let (value, outcome) = match kind {
        ReportKind::Moments => report_moments(cfg, workers)?,
        ReportKind::Lrd => report_lrd(cfg)?,
        ReportKind::Martingale => report_martingale(cfg)?,
        ReportKind::Dde => report_dde(cfg)?,
        ReportKind::Representation => report_representation(cfg, workers)?,
    };
    let path = cfg.output.join(format!("report-{}.json", kind.name()));
    write_json(&path, &value)?;
    println!(
        "{}: {} -> {}",
        kind.name(),
        match outcome {
            Outcome::Pass => "pass",
            Outcome::StatFail => "fail",
            Outcome::ConfigError => "config-error",
        },
        path.display()
    );
    Ok(outcome)
}

fn report_moments(cfg: &ExperimentConfig, workers: usize) -> Result<(serde_json::Value, Outcome)> {
    let t = cfg.report.t;
    let s = cfg.report.s;
    let analytic = match analytics::analytic_moments(&cfg.spec, t, s, 2_000, cfg.seed ^ 0xa5a5) {
        Ok(a) => a,
        Err(GfcppError::MomentUndefined(msg)) => {
            // structured report, distinct exit code from a crash
            return Ok((
                json!({ "kind": "moments", "error": msg }),
                Outcome::ConfigError,
            ));
        }
        Err(e) => return Err(e),
    };
    let times: Vec<f64> = match s {
        Some(sv) => vec![sv, t],
        None => vec![t],
    };
    let rows = run_parallel(workers, cfg.paths, |p| sample_values_at(cfg, &times, p))?;
    let values_t: Vec<f64> = rows.iter().map(|r| *r.last().unwrap()).collect();
    let values_s: Option<Vec<f64>> = s.map(|_| rows.iter().map(|r| r[0]).collect());
    let report = analytics::empirical_moments(&values_t, values_s.as_deref(), &analytic, t, s)?;
    let mut pass = report.mean.z.abs() < 3.0 && report.variance.z.abs() < 3.0;
    if let Some(c) = &report.covariance {
        pass &= c.z.abs() < 3.0;
    }
    Ok((
        serde_json::to_value(&report).map_err(|e| GfcppError::Io(e.into()))?,
        if pass { Outcome::Pass } else { Outcome::StatFail },
    ))
}

fn report_lrd(cfg: &ExperimentConfig) -> Result<(serde_json::Value, Outcome)> {
    let r = &cfg.report;
    let lo = 4.0 * r.s_fixed;
    let hi = r.t_max.max(lo * 4.0);
    let grid: Vec<f64> = (0..r.points)
        .map(|i| lo * (hi / lo).powf(i as f64 / (r.points - 1).max(1) as f64))
        .collect();
    let fit = analytics::lrd_slope(&cfg.spec, r.s_fixed, &grid, r.lrd_paths, cfg.seed, 4_000)?;
    let pass = fit.slope > -1.0 && fit.slope < 0.0;
    Ok((
        serde_json::to_value(&fit).map_err(|e| GfcppError::Io(e.into()))?,
        if pass { Outcome::Pass } else { Outcome::StatFail },
    ))
}

fn report_martingale(cfg: &ExperimentConfig) -> Result<(serde_json::Value, Outcome)> {
    let rows =
        analytics::martingale_test(&cfg.spec, &cfg.report.pairs, cfg.paths, cfg.seed, None)?;
    let pass = rows.iter().all(|r| r.z.abs() < 3.0);
    Ok((
        serde_json::to_value(&rows).map_err(|e| GfcppError::Io(e.into()))?,
        if pass { Outcome::Pass } else { Outcome::StatFail },
    ))
}

fn report_dde(cfg: &ExperimentConfig) -> Result<(serde_json::Value, Outcome)> {
    let r = &cfg.report;
    let source = if r.semi_analytic {
        PmfSource::SemiAnalytic
    } else {
        PmfSource::MonteCarlo {
            paths: r.mc_paths,
            seed: cfg.seed,
        }
    };
    let report = fde::dde_residual(&cfg.spec, r.n_max, r.h, r.t_max, source)?;
    let outcome = if report.status == RowStatus::Pass {
        Outcome::Pass
    } else {
        Outcome::StatFail
    };
    Ok((
        serde_json::to_value(&report).map_err(|e| GfcppError::Io(e.into()))?,
        outcome,
    ))
}

fn report_representation(
    cfg: &ExperimentConfig,
    workers: usize,
) -> Result<(serde_json::Value, Outcome)> {
    let (rep, eta) = match &cfg.spec.jump {
        JumpLaw::MittagLeffler { beta, eta } => (Representation::StableAtExpCpp { beta: *beta }, *eta),
        JumpLaw::TemperedMittagLeffler { beta, eta, nu } => (
            Representation::TemperedStableAtExpCpp {
                beta: *beta,
                nu: *nu,
            },
            *eta,
        ),
        JumpLaw::BernsteinType { g, eta } => (
            Representation::SubordinatorAtExpCpp { g: g.clone() },
            *eta,
        ),
        other => {
            return Err(GfcppError::InvalidParameter(format!(
                "no composed representation for jump law {other:?}"
            )))
        }
    };
    let base = processes::ProcessSpec::new(
        cfg.spec.arrival.clone(),
        JumpLaw::Exponential { eta },
        cfg.spec.rate_multiplier,
    )?;
    let t = cfg.report.t;
    let n = cfg.report.samples;
    let direct = run_parallel(workers, n, |p| {
        sample_values_at(cfg, &[t], p).map(|v| v[0])
    })?;
    let composed = run_parallel(workers, n, |p| {
        let mut rng = RngStream::new(cfg.seed ^ 0x5eed, p as u64);
        processes::simulate_representation(&rep, &base, t, &mut rng)
    })?;
    let (stat, p_value) = analytics::ks_two_sample(&direct, &composed)?;
    let pass = p_value >= 0.01;
    Ok((
        json!({ "kind": "representation", "t": t, "samples": n, "ks_stat": stat, "p_value": p_value }),
        if pass { Outcome::Pass } else { Outcome::StatFail },
    ))
}
