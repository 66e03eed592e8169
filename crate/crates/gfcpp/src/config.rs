//! Experiment configuration: a flat `key = value` text format with dotted
//! section names, bundled presets, and a content hash for manifests.
//!
//! Schema (unknown keys are rejected with the offending line number):
//!
//! ```text
//! arrival.kind    = poisson | stable | tempered-stable | inverse-gaussian
//! arrival.lambda  = 4            # base Poisson rate
//! arrival.alpha   = 0.9          # stable / tempered-stable index
//! arrival.mu      = 2            # tempering rate
//! arrival.delta   = 0.3          # inverse-Gaussian scale
//! arrival.gamma   = 1            # inverse-Gaussian drift
//! jump.kind       = exponential | mittag-leffler | tempered-mittag-leffler |
//!                   bernstein | discrete-uniform | truncated-geometric |
//!                   logarithmic | centered-two-point
//! jump.eta        = 2            # rate / scale of the jump law
//! jump.beta       = 0.9          # Mittag-Leffler index
//! jump.nu         = 1            # tempering of the jump law
//! jump.k          = 5            # order (discrete laws)
//! jump.rho        = 0.5          # truncated-geometric parameter
//! jump.q          = 0.5          # logarithmic parameter
//! jump.g.kind     = stable | tempered-stable | inverse-gaussian
//! jump.g.alpha, jump.g.mu, jump.g.delta, jump.g.gamma
//! rate.multiplier = 1            # effective rate = multiplier * lambda
//! run.horizon     = 1
//! run.grid        = 200
//! run.paths       = 10
//! run.seed        = 42           # mandatory, no wall-clock default
//! run.output      = out
//! report.t, report.s             # moment report times
//! report.pairs    = 0.5:1,1:2    # martingale increment pairs
//! report.n-max, report.h, report.t-max, report.source, report.mc-paths
//! report.samples                 # representation identity sample count
//! report.s-fixed, report.t-max, report.points, report.lrd-paths
//! ```

use std::collections::BTreeMap;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::error::{GfcppError, Result};
use crate::jumps::JumpLaw;
use crate::processes::{Arrival, ProcessSpec};
use crate::specfun::BernsteinDescriptor;

/// Kind-specific report parameters, all optional with conventional defaults.
#[derive(Debug, Clone)]
pub struct ReportParams {
    pub t: f64,
    pub s: Option<f64>,
    pub pairs: Vec<(f64, f64)>,
    pub n_max: usize,
    pub h: f64,
    pub t_max: f64,
    pub semi_analytic: bool,
    pub mc_paths: usize,
    pub samples: usize,
    pub s_fixed: f64,
    pub points: usize,
    pub lrd_paths: usize,
}

impl Default for ReportParams {
    fn default() -> Self {
        Self {
            t: 1.0,
            s: None,
            pairs: vec![(0.5, 1.0)],
            n_max: 2,
            h: 1.0 / 128.0,
            t_max: 2.0,
            semi_analytic: true,
            mc_paths: 1_000,
            samples: 10_000,
            s_fixed: 1.0,
            points: 8,
            lrd_paths: 20_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub spec: ProcessSpec,
    pub horizon: f64,
    pub grid: usize,
    pub paths: usize,
    pub seed: u64,
    pub output: PathBuf,
    pub report: ReportParams,
    /// Resolved key/value pairs, the input of the manifest hash.
    canonical: BTreeMap<String, String>,
}

impl ExperimentConfig {
    /// SHA-256 over the sorted resolved key/value pairs; changes iff any
    /// config field changes.
    pub fn hash(&self) -> String {
        let mut hasher = Sha256::new();
        for (k, v) in &self.canonical {
            hasher.update(k.as_bytes());
            hasher.update(b"=");
            hasher.update(v.as_bytes());
            hasher.update(b"\n");
        }
        format!("{:x}", hasher.finalize())
    }

    /// Replaces the seed (the `--seed` override).
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self.canonical.insert("run.seed".into(), seed.to_string());
        self
    }
}

fn cfg_err(line: usize, msg: impl std::fmt::Display) -> GfcppError {
    GfcppError::Config(format!("line {line}: {msg}"))
}

struct Raw {
    map: BTreeMap<String, (usize, String)>,
}

impl Raw {
    fn take(&mut self, key: &str) -> Option<String> {
        self.map.remove(key).map(|(_, v)| v)
    }

    fn f64(&mut self, key: &str) -> Result<Option<f64>> {
        match self.map.remove(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse::<f64>()
                .map(Some)
                .map_err(|_| cfg_err(line, format!("`{key}` expects a number, got `{v}`"))),
        }
    }

    fn require_f64(&mut self, key: &str, context: &str) -> Result<f64> {
        self.f64(key)?
            .ok_or_else(|| GfcppError::Config(format!("missing `{key}` ({context})")))
    }

    fn usize(&mut self, key: &str) -> Result<Option<usize>> {
        match self.map.remove(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse::<usize>()
                .map(Some)
                .map_err(|_| cfg_err(line, format!("`{key}` expects a nonnegative integer"))),
        }
    }
}

fn parse_raw(text: &str) -> Result<Raw> {
    let mut map = BTreeMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| cfg_err(line_no, "expected `key = value`"))?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if key.is_empty() || value.is_empty() {
            return Err(cfg_err(line_no, "empty key or value"));
        }
        if map.insert(key.clone(), (line_no, value)).is_some() {
            return Err(cfg_err(line_no, format!("duplicate key `{key}`")));
        }
    }
    Ok(Raw { map })
}

fn parse_descriptor(raw: &mut Raw, prefix: &str, kind: &str, line: usize) -> Result<BernsteinDescriptor> {
    let key = |suffix: &str| format!("{prefix}.{suffix}");
    match kind {
        "stable" => BernsteinDescriptor::stable(raw.require_f64(&key("alpha"), "stable index")?),
        "tempered-stable" => BernsteinDescriptor::tempered_stable(
            raw.require_f64(&key("alpha"), "tempered-stable index")?,
            raw.require_f64(&key("mu"), "tempering rate")?,
        ),
        "inverse-gaussian" => BernsteinDescriptor::inverse_gaussian(
            raw.require_f64(&key("delta"), "inverse-Gaussian scale")?,
            raw.require_f64(&key("gamma"), "inverse-Gaussian drift")?,
        ),
        other => Err(cfg_err(line, format!("unknown subordinator kind `{other}`"))),
    }
}

fn parse_pairs(s: &str) -> Result<Vec<(f64, f64)>> {
    s.split(',')
        .map(|chunk| {
            let (a, b) = chunk
                .split_once(':')
                .ok_or_else(|| GfcppError::Config(format!("bad pair `{chunk}`, want `s:t`")))?;
            let a: f64 = a
                .trim()
                .parse()
                .map_err(|_| GfcppError::Config(format!("bad pair `{chunk}`")))?;
            let b: f64 = b
                .trim()
                .parse()
                .map_err(|_| GfcppError::Config(format!("bad pair `{chunk}`")))?;
            Ok((a, b))
        })
        .collect()
}

/// Parses a config document; errors carry the offending line number.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let mut raw = parse_raw(text)?;
    let canonical: BTreeMap<String, String> = raw
        .map
        .iter()
        .map(|(k, (_, v))| (k.clone(), v.clone()))
        .collect();

    let (arrival_line, arrival_kind) = raw
        .map
        .get("arrival.kind")
        .map(|(l, v)| (*l, v.clone()))
        .ok_or_else(|| GfcppError::Config("missing `arrival.kind`".into()))?;
    raw.take("arrival.kind");
    let lambda = raw.require_f64("arrival.lambda", "base Poisson rate")?;
    let arrival = if arrival_kind == "poisson" {
        Arrival::Poisson { lambda }
    } else {
        Arrival::TimeChanged {
            lambda,
            desc: parse_descriptor(&mut raw, "arrival", &arrival_kind, arrival_line)?,
        }
    };

    let (jump_line, jump_kind) = raw
        .map
        .get("jump.kind")
        .map(|(l, v)| (*l, v.clone()))
        .ok_or_else(|| GfcppError::Config("missing `jump.kind`".into()))?;
    raw.take("jump.kind");
    let jump = match jump_kind.as_str() {
        "exponential" => JumpLaw::Exponential {
            eta: raw.require_f64("jump.eta", "exponential rate")?,
        },
        "mittag-leffler" => JumpLaw::MittagLeffler {
            beta: raw.require_f64("jump.beta", "Mittag-Leffler index")?,
            eta: raw.require_f64("jump.eta", "Mittag-Leffler scale")?,
        },
        "tempered-mittag-leffler" => JumpLaw::TemperedMittagLeffler {
            beta: raw.require_f64("jump.beta", "Mittag-Leffler index")?,
            eta: raw.require_f64("jump.eta", "Mittag-Leffler scale")?,
            nu: raw.require_f64("jump.nu", "tempering rate")?,
        },
        "bernstein" => {
            let g_kind = raw
                .take("jump.g.kind")
                .ok_or_else(|| GfcppError::Config("missing `jump.g.kind`".into()))?;
            JumpLaw::BernsteinType {
                g: parse_descriptor(&mut raw, "jump.g", &g_kind, jump_line)?,
                eta: raw.require_f64("jump.eta", "exponential time rate")?,
            }
        }
        "discrete-uniform" => JumpLaw::DiscreteUniform {
            k: raw.require_f64("jump.k", "order")? as u32,
        },
        "truncated-geometric" => JumpLaw::TruncatedGeometric {
            rho: raw.require_f64("jump.rho", "geometric parameter")?,
            k: raw.require_f64("jump.k", "order")? as u32,
        },
        "logarithmic" => JumpLaw::Logarithmic {
            q: raw.require_f64("jump.q", "logarithmic parameter")?,
        },
        "centered-two-point" => JumpLaw::CenteredTwoPoint,
        other => return Err(cfg_err(jump_line, format!("unknown jump kind `{other}`"))),
    };

    let multiplier = raw.f64("rate.multiplier")?.unwrap_or(1.0);
    let spec = ProcessSpec::new(arrival, jump, multiplier)?;

    let horizon = raw.f64("run.horizon")?.unwrap_or(1.0);
    let grid = raw.usize("run.grid")?.unwrap_or(200);
    let paths = raw.usize("run.paths")?.unwrap_or(10);
    let seed = match raw.map.remove("run.seed") {
        Some((line, v)) => v
            .parse::<u64>()
            .map_err(|_| cfg_err(line, "`run.seed` expects a nonnegative integer"))?,
        None => {
            return Err(GfcppError::Config(
                "missing `run.seed` (a seed is mandatory; there is no wall-clock default)".into(),
            ))
        }
    };
    let output = PathBuf::from(raw.take("run.output").unwrap_or_else(|| "out".into()));

    let mut report = ReportParams::default();
    if let Some(t) = raw.f64("report.t")? {
        report.t = t;
    }
    report.s = raw.f64("report.s")?;
    if let Some(p) = raw.take("report.pairs") {
        report.pairs = parse_pairs(&p)?;
    }
    if let Some(n) = raw.usize("report.n-max")? {
        report.n_max = n;
    }
    if let Some(h) = raw.f64("report.h")? {
        report.h = h;
    }
    if let Some(tm) = raw.f64("report.t-max")? {
        report.t_max = tm;
    }
    if let Some((line, v)) = raw.map.remove("report.source") {
        report.semi_analytic = match v.as_str() {
            "semi-analytic" => true,
            "monte-carlo" => false,
            other => {
                return Err(cfg_err(
                    line,
                    format!("`report.source` must be semi-analytic or monte-carlo, got `{other}`"),
                ))
            }
        };
    }
    if let Some(p) = raw.usize("report.mc-paths")? {
        report.mc_paths = p;
    }
    if let Some(p) = raw.usize("report.samples")? {
        report.samples = p;
    }
    if let Some(s) = raw.f64("report.s-fixed")? {
        report.s_fixed = s;
    }
    if let Some(p) = raw.usize("report.points")? {
        report.points = p;
    }
    if let Some(p) = raw.usize("report.lrd-paths")? {
        report.lrd_paths = p;
    }

    if let Some((key, (line, _))) = raw.map.iter().next() {
        return Err(cfg_err(*line, format!("unknown key `{key}`")));
    }
    if !(horizon > 0.0) {
        return Err(GfcppError::Config("`run.horizon` must be positive".into()));
    }
    if grid == 0 {
        return Err(GfcppError::Config("`run.grid` must be at least 1".into()));
    }

    Ok(ExperimentConfig {
        spec,
        horizon,
        grid,
        paths,
        seed,
        output,
        report,
        canonical,
    })
}

pub fn load_config(path: &std::path::Path) -> Result<ExperimentConfig> {
    parse_config(&std::fs::read_to_string(path)?)
}

/// The twelve bundled presets: three arrival families (plain Poisson,
/// inverse-Gaussian clock, tempered-stable clock) crossed with four jump
/// laws (exponential, Mittag-Leffler, discrete uniform, logarithmic).
pub const PRESET_NAMES: [&str; 12] = [
    "cpp-exponential",
    "cpp-mittag-leffler",
    "cpp-discrete-uniform",
    "cpp-logarithmic",
    "iign-exponential",
    "iign-mittag-leffler",
    "iign-discrete-uniform",
    "iign-logarithmic",
    "itss-exponential",
    "itss-mittag-leffler",
    "itss-discrete-uniform",
    "itss-logarithmic",
];

pub fn preset(name: &str) -> Option<String> {
    let (arrival, jump) = name.split_once('-')?;
    let arrival_block = match arrival {
        "cpp" => "arrival.kind = poisson\narrival.lambda = 4\n",
        "iign" => {
            "arrival.kind = inverse-gaussian\narrival.lambda = 4\narrival.delta = 0.3\narrival.gamma = 1\n"
        }
        "itss" => {
            "arrival.kind = tempered-stable\narrival.lambda = 4\narrival.alpha = 0.7\narrival.mu = 2\n"
        }
        _ => return None,
    };
    let jump_block = match jump {
        "exponential" => "jump.kind = exponential\njump.eta = 2\n",
        "mittag-leffler" => "jump.kind = mittag-leffler\njump.beta = 0.9\njump.eta = 2\n",
        "discrete-uniform" => "jump.kind = discrete-uniform\njump.k = 5\n",
        "logarithmic" => "jump.kind = logarithmic\njump.q = 0.5\n",
        _ => return None,
    };
    Some(format!(
        "# preset: {name}\n{arrival_block}{jump_block}run.horizon = 1\nrun.grid = 200\nrun.paths = 10\nrun.seed = 42\nrun.output = out\n"
    ))
}
