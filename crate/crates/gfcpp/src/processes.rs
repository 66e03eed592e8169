//! Sample-path construction: compound Poisson paths, their time-changed
//! variants, named representation samplers and pmf machinery.

use std::io::Write;

use crate::error::{GfcppError, Result};
use crate::jumps::JumpLaw;
use crate::rng::RngStream;
use crate::specfun::BernsteinDescriptor;
use crate::subordinators::{self, DEFAULT_OPERATIONAL_STEPS};

/// A sample path: ordered times in `[0, horizon]` with cumulative values.
///
/// Event mode stores the jump epochs; grid mode stores one row per calendar
/// grid point. The value before the first stored time is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct EventPath {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub horizon: f64,
}

impl EventPath {
    pub fn new(times: Vec<f64>, values: Vec<f64>, horizon: f64) -> Result<Self> {
        if times.len() != values.len() {
            return Err(GfcppError::InvalidParameter(
                "times and values must have equal length".into(),
            ));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(GfcppError::InvalidParameter(
                "event times must be strictly increasing".into(),
            ));
        }
        if times.iter().any(|&t| t < 0.0 || t > horizon) {
            return Err(GfcppError::InvalidParameter(
                "event times must lie in [0, horizon]".into(),
            ));
        }
        Ok(Self {
            times,
            values,
            horizon,
        })
    }

    /// Path value at calendar time `t` (right-continuous step evaluation).
    pub fn value_at(&self, t: f64) -> f64 {
        match self
            .times
            .partition_point(|&x| x <= t)
        {
            0 => 0.0,
            i => self.values[i - 1],
        }
    }

    /// Value at the horizon.
    pub fn terminal_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Serialize as CSV with header `t,value`, LF line endings and
    /// 17-significant-digit floats.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(b"t,value\n")?;
        for (t, v) in self.times.iter().zip(&self.values) {
            writeln!(w, "{:.16e},{:.16e}", t, v)?;
        }
        Ok(())
    }
}

/// Arrival structure of a process: plain Poisson or time-changed with an
/// inverse subordinator.
#[derive(Debug, Clone, PartialEq)]
pub enum Arrival {
    Poisson { lambda: f64 },
    TimeChanged {
        lambda: f64,
        desc: BernsteinDescriptor,
    },
}

/// A process specification: arrival kind, jump law and the rate-convention
/// multiplier (order-k uniform-jump processes use rate `k lambda`).
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessSpec {
    pub arrival: Arrival,
    pub jump: JumpLaw,
    pub rate_multiplier: f64,
}

impl ProcessSpec {
    pub fn new(arrival: Arrival, jump: JumpLaw, rate_multiplier: f64) -> Result<Self> {
        let lambda = match arrival {
            Arrival::Poisson { lambda } | Arrival::TimeChanged { lambda, .. } => lambda,
        };
        if !(lambda > 0.0) {
            return Err(GfcppError::InvalidParameter(format!(
                "lambda must be > 0, got {lambda}"
            )));
        }
        if !(rate_multiplier >= 1.0) {
            return Err(GfcppError::InvalidParameter(format!(
                "rate multiplier must be >= 1, got {rate_multiplier}"
            )));
        }
        jump.validate()?;
        Ok(Self {
            arrival,
            jump,
            rate_multiplier,
        })
    }

    /// Effective Poisson intensity, `lambda` times the rate multiplier.
    pub fn effective_rate(&self) -> f64 {
        let lambda = match self.arrival {
            Arrival::Poisson { lambda } | Arrival::TimeChanged { lambda, .. } => lambda,
        };
        lambda * self.rate_multiplier
    }

    pub fn descriptor(&self) -> Option<&BernsteinDescriptor> {
        match &self.arrival {
            Arrival::Poisson { .. } => None,
            Arrival::TimeChanged { desc, .. } => Some(desc),
        }
    }
}

/// Compound Poisson path on `[0, horizon]`: exponential inter-arrival loop,
/// one row per jump epoch.
pub fn simulate_cpp(
    lambda: f64,
    law: &JumpLaw,
    horizon: f64,
    rng: &mut RngStream,
) -> Result<EventPath> {
    if !(lambda > 0.0 && horizon > 0.0) {
        return Err(GfcppError::InvalidParameter(
            "simulate_cpp needs lambda > 0 and horizon > 0".into(),
        ));
    }
    law.validate()?;
    let mut t = rng.exponential(lambda);
    let mut level = 0.0;
    let mut times = Vec::new();
    let mut values = Vec::new();
    while t < horizon {
        level += law.sample(rng)?;
        times.push(t);
        values.push(level);
        t += rng.exponential(lambda);
    }
    EventPath::new(times, values, horizon)
}

/// Time-changed CPP on a uniform calendar grid of `n_grid` steps:
/// computes the inverse subordinator on the grid and evaluates an independent
/// CPP at those operational times. Also returns the clock values, which the
/// martingale diagnostics need alongside the path.
pub fn simulate_gfcpp_with_clock(
    spec: &ProcessSpec,
    horizon: f64,
    n_grid: usize,
    op_steps: usize,
    rng: &mut RngStream,
) -> Result<(EventPath, Vec<f64>)> {
    let desc = spec.descriptor().ok_or_else(|| {
        GfcppError::InvalidParameter("simulate_gfcpp requires a time-changed arrival".into())
    })?;
    if n_grid == 0 || !(horizon > 0.0) {
        return Err(GfcppError::InvalidParameter(
            "simulate_gfcpp needs n_grid >= 1 and horizon > 0".into(),
        ));
    }
    let grid: Vec<f64> = (0..=n_grid)
        .map(|i| i as f64 * horizon / n_grid as f64)
        .collect();
    let clock = subordinators::sample_inverse_at(desc, &grid, op_steps, rng)?;
    let op_horizon = clock.last().copied().unwrap();
    let rate = spec.effective_rate();
    let values = if op_horizon > 0.0 {
        let cpp = simulate_cpp(rate, &spec.jump, op_horizon * (1.0 + 1e-12), rng)?;
        clock.iter().map(|&e| cpp.value_at(e)).collect()
    } else {
        vec![0.0; grid.len()]
    };
    Ok((EventPath::new(grid, values, horizon)?, clock))
}

/// Time-changed CPP sampled on the calendar grid (default operational
/// resolution).
pub fn simulate_gfcpp(
    spec: &ProcessSpec,
    horizon: f64,
    n_grid: usize,
    rng: &mut RngStream,
) -> Result<EventPath> {
    simulate_gfcpp_with_clock(spec, horizon, n_grid, DEFAULT_OPERATIONAL_STEPS, rng)
        .map(|(path, _)| path)
}

/// Terminal value of the GFCPP with exponential jumps, drawn without building
/// the full grid path: one inverse-clock draw, one Poisson count, one gamma
/// sum.
pub fn sample_gfcpp_exponential_terminal(
    desc: &BernsteinDescriptor,
    lambda: f64,
    eta: f64,
    t: f64,
    op_steps: usize,
    rng: &mut RngStream,
) -> Result<f64> {
    let e = subordinators::sample_inverse_at(desc, &[0.0, t], op_steps, rng)?[1];
    let n = sample_poisson(lambda * e, rng);
    let mut sum = 0.0;
    for _ in 0..n {
        sum += rng.exponential(eta);
    }
    Ok(sum)
}

/// Poisson draw by inversion for small means, normal tail otherwise.
pub fn sample_poisson(mean: f64, rng: &mut RngStream) -> u64 {
    debug_assert!(mean >= 0.0);
    if mean == 0.0 {
        return 0;
    }
    if mean < 30.0 {
        let limit = (-mean).exp();
        let mut n = 0u64;
        let mut prod = rng.uniform_open();
        while prod > limit {
            n += 1;
            prod *= rng.uniform_open();
        }
        n
    } else {
        // exponential inter-arrival count; exact, still cheap at desk scale
        let mut n = 0u64;
        let mut acc = rng.exponential(1.0);
        while acc < mean {
            n += 1;
            acc += rng.exponential(1.0);
        }
        n
    }
}

/// Outer subordinator of a time-change representation.
#[derive(Debug, Clone, PartialEq)]
pub enum Representation {
    /// `D_beta(Y_f^eta(t))`, a stable subordinator at the exponential-jump
    /// process value. `beta = 1` is the identity drift.
    StableAtExpCpp { beta: f64 },
    /// `D_{beta,nu}(Y_f^eta(t))`.
    TemperedStableAtExpCpp { beta: f64, nu: f64 },
    /// `D_g(Y_f^eta(t))` for a general Bernstein descriptor `g`.
    SubordinatorAtExpCpp { g: BernsteinDescriptor },
}

/// Sample the value at `t` of the composed representation: the outer
/// subordinator evaluated at an inner exponential-jump GFCPP value.
pub fn simulate_representation(
    rep: &Representation,
    base: &ProcessSpec,
    t: f64,
    rng: &mut RngStream,
) -> Result<f64> {
    let eta = match base.jump {
        JumpLaw::Exponential { eta } => eta,
        _ => {
            return Err(GfcppError::InvalidParameter(
                "representation base must use exponential jumps".into(),
            ))
        }
    };
    let desc = base.descriptor().ok_or_else(|| {
        GfcppError::InvalidParameter("representation base must be time-changed".into())
    })?;
    let inner = sample_gfcpp_exponential_terminal(
        desc,
        base.effective_rate(),
        eta,
        t,
        DEFAULT_OPERATIONAL_STEPS,
        rng,
    )?;
    if inner == 0.0 {
        return Ok(0.0);
    }
    match rep {
        Representation::StableAtExpCpp { beta } => {
            if *beta == 1.0 {
                Ok(inner)
            } else {
                Ok(subordinators::sample_stable_increment(*beta, inner, rng))
            }
        }
        Representation::TemperedStableAtExpCpp { beta, nu } => {
            if *beta == 1.0 {
                Ok(inner)
            } else {
                subordinators::sample_tempered_stable_increment(*beta, *nu, inner, rng)
            }
        }
        Representation::SubordinatorAtExpCpp { g } => {
            subordinators::sample_increment(g, inner, rng)
        }
    }
}

/// Exact pmf of the CPP with a discrete jump law:
/// `P(Y(t) = n) = sum_{m=0}^{n} pmf^{*m}(n) e^{-lt} (lt)^m / m!`,
/// with the `m = 0` term contributing the `n = 0` atom.
pub fn cpp_pmf(lambda: f64, law: &JumpLaw, n: usize, t: f64) -> Result<f64> {
    if !law.is_discrete() {
        return Err(GfcppError::InvalidParameter(
            "cpp_pmf requires a discrete jump law".into(),
        ));
    }
    if !(lambda > 0.0 && t >= 0.0) {
        return Err(GfcppError::InvalidParameter(
            "cpp_pmf needs lambda > 0 and t >= 0".into(),
        ));
    }
    Ok(cpp_pmf_row(lambda, &law.pmf(), n, t)[n])
}

/// The pmf vector `P(Y(t) = i)` for `i = 0..=n`, shared by the Monte Carlo
/// mixture estimator.
pub fn cpp_pmf_row(lambda: f64, base_pmf: &[f64], n: usize, t: f64) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    let lt = lambda * t;
    // m = 0: empty sum, the atom at 0
    let mut pois = (-lt).exp();
    out[0] = pois;
    // conv holds pmf^{*m}, truncated to 0..=n
    let mut conv = vec![0.0; n + 1];
    conv[0] = 1.0;
    for m in 1..=n {
        let mut next = vec![0.0; n + 1];
        for i in 0..=n {
            if conv[i] == 0.0 {
                continue;
            }
            for (j, &pj) in base_pmf.iter().enumerate().skip(1) {
                if i + j > n {
                    break;
                }
                next[i + j] += conv[i] * pj;
            }
        }
        conv = next;
        pois *= lt / m as f64;
        for i in 0..=n {
            out[i] += conv[i] * pois;
        }
    }
    out
}

/// Monte Carlo pmf of the time-changed CPP: averages the exact conditional
/// pmf over draws of the inverse clock at `t`. Returns `(estimate, se)`.
pub fn gfcpp_pmf_mc(
    spec: &ProcessSpec,
    n: usize,
    t: f64,
    paths: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if !spec.jump.is_discrete() {
        return Err(GfcppError::InvalidParameter(
            "gfcpp_pmf_mc requires a discrete jump law".into(),
        ));
    }
    let desc = spec.descriptor().ok_or_else(|| {
        GfcppError::InvalidParameter("gfcpp_pmf_mc requires a time-changed arrival".into())
    })?;
    let rate = spec.effective_rate();
    let base = spec.jump.pmf();
    let mut sum = 0.0;
    let mut sq = 0.0;
    for p in 0..paths {
        let mut rng = RngStream::new(seed, p as u64);
        let e = subordinators::sample_inverse_at(desc, &[0.0, t], 2_000, &mut rng)?[1];
        let v = cpp_pmf_row(rate, &base, n, e)[n];
        sum += v;
        sq += v * v;
    }
    let mean = sum / paths as f64;
    let se = ((sq / paths as f64 - mean * mean).max(0.0) / paths as f64).sqrt();
    Ok((mean, se))
}
