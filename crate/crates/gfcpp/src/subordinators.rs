//! Samplers for subordinator increments, grid paths, and the right-continuous
//! inverse (first-passage) process.

use crate::error::{GfcppError, Result};
use crate::rng::RngStream;
use crate::specfun::BernsteinDescriptor;

/// A grid-indexed nondecreasing path: uniform times starting at 0, values
/// nondecreasing with `values[0] = 0`.
#[derive(Debug, Clone)]
pub struct MonotonePath {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

impl MonotonePath {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() || times.is_empty() {
            return Err(GfcppError::InvalidParameter(
                "path times and values must be nonempty and equal length".into(),
            ));
        }
        if times[0] != 0.0 || values[0] != 0.0 {
            return Err(GfcppError::InvalidParameter(
                "path must start at (0, 0)".into(),
            ));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(GfcppError::InvalidParameter(
                "path times must be strictly increasing".into(),
            ));
        }
        if values.windows(2).any(|w| w[1] < w[0]) {
            return Err(GfcppError::InvalidParameter(
                "path values must be nondecreasing".into(),
            ));
        }
        Ok(Self { times, values })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn supremum(&self) -> f64 {
        *self.values.last().unwrap()
    }
}

/// One-sided stable draw with Laplace transform `e^{-s^alpha}` (unit scale),
/// by the Chambers-Mallows-Stuck construction.
fn standard_stable(alpha: f64, rng: &mut RngStream) -> f64 {
    let u = rng.uniform_open() * std::f64::consts::PI;
    let w = rng.exponential(1.0);
    let s1 = (alpha * u).sin() / u.sin().powf(1.0 / alpha);
    let s2 = (((1.0 - alpha) * u).sin() / w).powf((1.0 - alpha) / alpha);
    s1 * s2
}

/// Stable subordinator increment over `dt`: Laplace transform `e^{-dt s^alpha}`.
///
/// Self-similar scaling `X = dt^{1/alpha} S` with `S` standard.
pub fn sample_stable_increment(alpha: f64, dt: f64, rng: &mut RngStream) -> f64 {
    debug_assert!(alpha > 0.0 && alpha < 1.0 && dt > 0.0);
    dt.powf(1.0 / alpha) * standard_stable(alpha, rng)
}

const REJECTION_CAP: usize = 1_000_000;

/// Tempered stable increment: Laplace transform `e^{-dt ((s+mu)^alpha - mu^alpha)}`.
///
/// Exponential-tilting rejection: a stable draw `X` is accepted with
/// probability `e^{-mu X}`. Acceptance rate is `e^{-dt mu^alpha}`, so large
/// `dt` is split into chunks with `dt mu^alpha <= 1` each (the law is
/// infinitely divisible) to keep the expected tries per chunk below `e`.
pub fn sample_tempered_stable_increment(
    alpha: f64,
    mu: f64,
    dt: f64,
    rng: &mut RngStream,
) -> Result<f64> {
    debug_assert!(alpha > 0.0 && alpha < 1.0 && mu >= 0.0 && dt > 0.0);
    if mu == 0.0 {
        return Ok(sample_stable_increment(alpha, dt, rng));
    }
    let chunks = (dt * mu.powf(alpha)).ceil().max(1.0);
    let step = dt / chunks;
    let mut total = 0.0;
    for _ in 0..chunks as usize {
        let mut accepted = None;
        for _ in 0..REJECTION_CAP {
            let x = sample_stable_increment(alpha, step, rng);
            if rng.uniform() <= (-mu * x).exp() {
                accepted = Some(x);
                break;
            }
        }
        total += accepted.ok_or(GfcppError::SamplerStall(REJECTION_CAP))?;
    }
    Ok(total)
}

/// Inverse Gaussian increment with Laplace transform
/// `e^{-dt delta (sqrt(2s + gamma^2) - gamma)}`, via the
/// Michael-Schucany-Haas transformation with roots.
pub fn sample_ig_increment(delta: f64, gamma: f64, dt: f64, rng: &mut RngStream) -> f64 {
    debug_assert!(delta > 0.0 && gamma > 0.0 && dt > 0.0);
    // IG(m, l) with m = dt delta / gamma, l = (dt delta)^2 has the stated LT.
    let m = dt * delta / gamma;
    let l = (dt * delta) * (dt * delta);
    let nu = rng.standard_normal();
    let y = nu * nu;
    let x = m + m * m * y / (2.0 * l) - m / (2.0 * l) * (4.0 * m * l * y + m * m * y * y).sqrt();
    if rng.uniform() <= m / (m + x) {
        x.max(f64::MIN_POSITIVE)
    } else {
        m * m / x.max(f64::MIN_POSITIVE)
    }
}

/// One increment of the subordinator described by `desc` over `dt`.
pub fn sample_increment(desc: &BernsteinDescriptor, dt: f64, rng: &mut RngStream) -> Result<f64> {
    match *desc {
        BernsteinDescriptor::Stable { alpha } => Ok(sample_stable_increment(alpha, dt, rng)),
        BernsteinDescriptor::TemperedStable { alpha, mu } => {
            sample_tempered_stable_increment(alpha, mu, dt, rng)
        }
        BernsteinDescriptor::InverseGaussian { delta, gamma } => {
            Ok(sample_ig_increment(delta, gamma, dt, rng))
        }
    }
}

/// Subordinator path on a uniform grid: cumulative sums of `n` iid increments
/// with `dt = horizon / n`.
pub fn subordinator_path(
    desc: &BernsteinDescriptor,
    horizon: f64,
    n: usize,
    rng: &mut RngStream,
) -> Result<MonotonePath> {
    if n == 0 || !(horizon > 0.0) {
        return Err(GfcppError::InvalidParameter(
            "subordinator path needs n >= 1 and horizon > 0".into(),
        ));
    }
    let dt = horizon / n as f64;
    let mut times = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    times.push(0.0);
    values.push(0.0);
    let mut level = 0.0;
    for i in 1..=n {
        level += sample_increment(desc, dt, rng)?;
        times.push(i as f64 * dt);
        values.push(level);
    }
    MonotonePath::new(times, values)
}

/// Default number of operational-time steps used by the auto-extending
/// path constructions.
pub const DEFAULT_OPERATIONAL_STEPS: usize = 10_000;

/// Simulate a subordinator path that is guaranteed to exceed calendar level
/// `target`: start from `n` steps over an initial horizon and keep appending
/// blocks of increments (doubling the operational horizon) until covered.
pub fn subordinator_path_covering(
    desc: &BernsteinDescriptor,
    target: f64,
    n: usize,
    rng: &mut RngStream,
) -> Result<MonotonePath> {
    if n == 0 || !(target >= 0.0) {
        return Err(GfcppError::InvalidParameter(
            "covering path needs n >= 1 and target >= 0".into(),
        ));
    }
    // Initial operational horizon from the small-s slope of f: for large r,
    // E[D_f(r)] ~ r f'(0+) when finite; fall back to f^{-1} scaling otherwise.
    let guess = initial_operational_horizon(desc, target.max(1e-6));
    let dt = guess / n as f64;
    let mut times = vec![0.0];
    let mut values = vec![0.0];
    let mut level = 0.0;
    let mut i = 0usize;
    let mut blocks = 0usize;
    while level <= target {
        for _ in 0..n {
            i += 1;
            level += sample_increment(desc, dt, rng)?;
            times.push(i as f64 * dt);
            values.push(level);
            if level > target {
                break;
            }
        }
        blocks += 1;
        if blocks > 60 {
            return Err(GfcppError::Coverage {
                t: target,
                sup: level,
            });
        }
    }
    MonotonePath::new(times, values)
}

fn initial_operational_horizon(desc: &BernsteinDescriptor, target: f64) -> f64 {
    match *desc {
        // E[D(r)] is infinite; use the self-similar median scale instead.
        BernsteinDescriptor::Stable { alpha } => target.powf(alpha),
        BernsteinDescriptor::TemperedStable { alpha, mu } => {
            if mu == 0.0 {
                target.powf(alpha)
            } else {
                // mean slope f'(0) = alpha mu^{alpha-1}
                target / (alpha * mu.powf(alpha - 1.0))
            }
        }
        BernsteinDescriptor::InverseGaussian { delta, gamma } => target * gamma / delta,
    }
}

/// Right-continuous inverse of a subordinator path, evaluated on `t_grid`.
///
/// For each calendar time `t`, the returned value is the left grid point of
/// the step at which the path first exceeds `t`. Times beyond the simulated
/// supremum raise the coverage error.
pub fn inverse_path(d_path: &MonotonePath, t_grid: &[f64]) -> Result<MonotonePath> {
    if t_grid.is_empty() {
        return Err(GfcppError::InvalidParameter("empty calendar grid".into()));
    }
    if t_grid.windows(2).any(|w| w[1] <= w[0]) || t_grid[0] != 0.0 {
        return Err(GfcppError::InvalidParameter(
            "calendar grid must be strictly increasing and start at 0".into(),
        ));
    }
    let sup = d_path.supremum();
    let mut values = Vec::with_capacity(t_grid.len());
    // d_path.values is nondecreasing, t_grid increasing: single sweep.
    let mut j = 0usize;
    for &t in t_grid {
        if t >= sup {
            return Err(GfcppError::Coverage { t, sup });
        }
        while d_path.values[j] <= t {
            j += 1;
        }
        // first index with D > t; inverse takes the left grid point
        values.push(d_path.times[j - 1]);
    }
    MonotonePath::new(t_grid.to_vec(), values)
}

/// Draw the inverse subordinator at the calendar times of `t_grid`
/// (strictly increasing, starting at 0), auto-extending the operational
/// horizon so every query is covered.
pub fn sample_inverse_at(
    desc: &BernsteinDescriptor,
    t_grid: &[f64],
    n_steps: usize,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    let target = *t_grid.last().unwrap();
    let d = subordinator_path_covering(desc, target, n_steps, rng)?;
    Ok(inverse_path(&d, t_grid)?.values)
}
