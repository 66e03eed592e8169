//! Analytic moments, empirical estimators and statistical comparison
//! utilities.

use serde::Serialize;

use crate::error::{GfcppError, Result};
use crate::jumps::JumpLaw;
use crate::processes::{Arrival, ProcessSpec};
use crate::rng::RngStream;
use crate::specfun;
use crate::subordinators;

/// One analytic-vs-empirical comparison row.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub analytic: f64,
    pub empirical: f64,
    pub se: f64,
    pub z: f64,
}

impl Comparison {
    pub fn new(analytic: f64, empirical: f64, se: f64) -> Self {
        let z = if se > 0.0 {
            (empirical - analytic) / se
        } else if empirical == analytic {
            0.0
        } else {
            f64::INFINITY
        };
        Self {
            analytic,
            empirical,
            se,
            z,
        }
    }
}

/// Structured moment comparison for a process at time `t` (and optionally the
/// covariance with a second time `s`).
#[derive(Debug, Clone, Serialize)]
pub struct MomentReport {
    pub t: f64,
    pub s: Option<f64>,
    pub mean: Comparison,
    pub variance: Comparison,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covariance: Option<Comparison>,
    /// Set when the sample was degenerate (all values equal).
    pub zero_variance_warning: bool,
}

/// Analytic half of the moment report.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticMoments {
    pub mean: f64,
    pub variance: f64,
    pub covariance: Option<f64>,
    /// Monte Carlo standard error carried by the clock variance/covariance
    /// terms (zero when the clock moments are exact).
    pub mean_se: f64,
    pub variance_se: f64,
    pub covariance_se: f64,
}

/// Moments of the inverse clock at `(s, t)` by Monte Carlo first passage.
struct ClockMoments {
    var_t: f64,
    cov_st: f64,
    var_se: f64,
    cov_se: f64,
}

fn clock_moments_mc(
    desc: &crate::BernsteinDescriptor,
    s: f64,
    t: f64,
    draws: usize,
    seed: u64,
) -> Result<ClockMoments> {
    debug_assert!(s <= t);
    let grid: Vec<f64> = if s > 0.0 && s < t {
        vec![0.0, s, t]
    } else {
        vec![0.0, t]
    };
    let mut es = Vec::with_capacity(draws);
    let mut et = Vec::with_capacity(draws);
    for p in 0..draws {
        let mut rng = RngStream::new(seed, p as u64);
        let e = subordinators::sample_inverse_at(desc, &grid, 2_000, &mut rng)?;
        et.push(*e.last().unwrap());
        es.push(if grid.len() == 3 { e[1] } else { *e.last().unwrap() });
    }
    let (var_t, var_se) = jackknife_variance(&et);
    let (cov_st, cov_se) = jackknife_covariance(&es, &et);
    Ok(ClockMoments {
        var_t,
        cov_st,
        var_se,
        cov_se,
    })
}

/// Analytic moments of the process value at `t` (Wald-type identities):
/// mean `r E[E(t)] E[X]`, variance `r E[E(t)] E[X^2] + r^2 E[X]^2 Var[E(t)]`,
/// covariance `r E[X^2] E[E(s)] + r^2 E[X]^2 Cov[E(t), E(s)]` for `s <= t`,
/// where `r` is the effective arrival rate.
///
/// `E[E(t)]` comes from the closed series where one exists; the clock
/// variance and covariance come from `mc_draws` Monte Carlo first-passage
/// draws whose standard error is reported alongside.
pub fn analytic_moments(
    spec: &ProcessSpec,
    t: f64,
    s: Option<f64>,
    mc_draws: usize,
    seed: u64,
) -> Result<AnalyticMoments> {
    let jm = spec.jump.moments();
    let (ex, ex2) = match (jm.mean, jm.second_moment) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(GfcppError::MomentUndefined(format!(
                "jump law {:?} lacks finite first two moments",
                spec.jump
            )))
        }
    };
    let rate = spec.effective_rate();
    let s_val = s.unwrap_or(t).min(t);
    match &spec.arrival {
        Arrival::Poisson { .. } => Ok(AnalyticMoments {
            mean: rate * t * ex,
            variance: rate * t * ex2,
            covariance: s.map(|_| rate * s_val * ex2),
            mean_se: 0.0,
            variance_se: 0.0,
            covariance_se: 0.0,
        }),
        Arrival::TimeChanged { desc, .. } => {
            let mean_e_t = specfun::mean_inverse_subordinator(desc, t)?;
            let mean_e_s = specfun::mean_inverse_subordinator(desc, s_val)?;
            let clock = clock_moments_mc(desc, s_val, t, mc_draws, seed)?;
            let variance = rate * mean_e_t * ex2 + rate * rate * ex * ex * clock.var_t;
            let covariance =
                s.map(|_| rate * ex2 * mean_e_s + rate * rate * ex * ex * clock.cov_st);
            Ok(AnalyticMoments {
                mean: rate * mean_e_t * ex,
                variance,
                covariance,
                mean_se: 0.0,
                variance_se: rate * rate * ex * ex * clock.var_se,
                covariance_se: rate * rate * ex * ex * clock.cov_se,
            })
        }
    }
}

pub fn mean_with_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Jackknife standard error of the sample variance, O(n) via running sums.
pub fn jackknife_variance(xs: &[f64]) -> (f64, f64) {
    let n = xs.len();
    let nf = n as f64;
    let s1: f64 = xs.iter().sum();
    let s2: f64 = xs.iter().map(|x| x * x).sum();
    let mean = s1 / nf;
    let theta = (s2 - nf * mean * mean) / (nf - 1.0);
    let mut acc = 0.0;
    let mut thetas = Vec::with_capacity(n);
    for &x in xs {
        let m = (s1 - x) / (nf - 1.0);
        let ti = (s2 - x * x - (nf - 1.0) * m * m) / (nf - 2.0);
        thetas.push(ti);
        acc += ti;
    }
    let tbar = acc / nf;
    let se = ((nf - 1.0) / nf * thetas.iter().map(|t| (t - tbar) * (t - tbar)).sum::<f64>())
        .sqrt();
    (theta, se)
}

/// Jackknife standard error of the sample covariance (paired inputs).
pub fn jackknife_covariance(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let nf = n as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let theta = (sxy - sx * sy / nf) / (nf - 1.0);
    let mut thetas = Vec::with_capacity(n);
    let mut acc = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let mx = (sx - x) / (nf - 1.0);
        let my = (sy - y) / (nf - 1.0);
        let ti = (sxy - x * y - (nf - 1.0) * mx * my) / (nf - 2.0);
        thetas.push(ti);
        acc += ti;
    }
    let tbar = acc / nf;
    let se = ((nf - 1.0) / nf * thetas.iter().map(|t| (t - tbar) * (t - tbar)).sum::<f64>())
        .sqrt();
    (theta, se)
}

/// Empirical half of the moment report from per-path terminal values
/// (`values_t`) and, when covariance is requested, paired values at an
/// earlier time (`values_s`).
pub fn empirical_moments(
    values_t: &[f64],
    values_s: Option<&[f64]>,
    analytic: &AnalyticMoments,
    t: f64,
    s: Option<f64>,
) -> Result<MomentReport> {
    if values_t.len() < 100 {
        return Err(GfcppError::InsufficientData(format!(
            "need at least 100 paths, got {}",
            values_t.len()
        )));
    }
    let (mean, mean_se) = mean_with_se(values_t);
    let (var, var_se) = jackknife_variance(values_t);
    let degenerate = var == 0.0;
    let covariance = match (values_s, analytic.covariance) {
        (Some(vs), Some(cov_a)) => {
            let (cov, cov_se) = jackknife_covariance(vs, values_t);
            let combined = (cov_se * cov_se + analytic.covariance_se * analytic.covariance_se)
                .sqrt();
            Some(Comparison::new(cov_a, cov, combined))
        }
        _ => None,
    };
    Ok(MomentReport {
        t,
        s,
        mean: Comparison::new(
            analytic.mean,
            mean,
            (mean_se * mean_se + analytic.mean_se * analytic.mean_se).sqrt(),
        ),
        variance: Comparison::new(
            analytic.variance,
            var,
            (var_se * var_se + analytic.variance_se * analytic.variance_se).sqrt(),
        ),
        covariance,
        zero_variance_warning: degenerate,
    })
}

/// Two-sample Kolmogorov-Smirnov test: the sup-distance between empirical
/// cdfs and its asymptotic p-value.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<(f64, f64)> {
    if a.is_empty() || b.is_empty() {
        return Err(GfcppError::InsufficientData(
            "KS test requires nonempty samples".into(),
        ));
    }
    let mut xs: Vec<f64> = a.to_vec();
    let mut ys: Vec<f64> = b.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let (n, m) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let v = xs[i].min(ys[j]);
        while i < n && xs[i] <= v {
            i += 1;
        }
        while j < m && ys[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let en = ((n * m) as f64 / (n + m) as f64).sqrt();
    let lambda = en * d;
    let p = if lambda < 1e-3 {
        1.0
    } else {
        let mut sum = 0.0;
        for k in 1..=100 {
            let term = (-2.0 * (k as f64) * (k as f64) * lambda * lambda).exp();
            sum += if k % 2 == 1 { term } else { -term };
        }
        (2.0 * sum).clamp(0.0, 1.0)
    };
    Ok((d, p))
}

/// Empirical Laplace transform of a sample at each `s` in `s_grid`:
/// mean of `e^{-s x}` with its standard error.
pub fn empirical_laplace(samples: &[f64], s_grid: &[f64]) -> Vec<(f64, f64)> {
    s_grid
        .iter()
        .map(|&s| {
            let vals: Vec<f64> = samples.iter().map(|&x| (-s * x).exp()).collect();
            if s == 0.0 {
                (1.0, 0.0)
            } else {
                mean_with_se(&vals)
            }
        })
        .collect()
}

/// Result of the compensated-increment martingale diagnostic for one pair.
#[derive(Debug, Clone, Serialize)]
pub struct MartingaleRow {
    pub s: f64,
    pub t: f64,
    pub increment_mean: f64,
    pub se: f64,
    pub z: f64,
}

/// Mean compensated increment `M(t) - M(s)` with
/// `M(t) = Y(t) - r E(t) jump_mean` over `paths` independent paths.
/// `jump_mean_override` replaces `E[X_1]` in the compensator; the power check
/// passes a deliberately wrong value.
pub fn martingale_test(
    spec: &ProcessSpec,
    t_pairs: &[(f64, f64)],
    paths: usize,
    seed: u64,
    jump_mean_override: Option<f64>,
) -> Result<Vec<MartingaleRow>> {
    let desc = spec.descriptor().ok_or_else(|| {
        GfcppError::InvalidParameter("martingale test requires a time-changed arrival".into())
    })?;
    let jump_mean = match jump_mean_override {
        Some(v) => v,
        None => spec.jump.moments().mean.ok_or_else(|| {
            GfcppError::MomentUndefined("martingale compensator needs a finite jump mean".into())
        })?,
    };
    let rate = spec.effective_rate();
    // shared calendar grid covering every pair endpoint
    let mut points: Vec<f64> = t_pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
    points.push(0.0);
    points.sort_by(f64::total_cmp);
    points.dedup();
    let grid = points;
    let index_of = |x: f64| grid.iter().position(|&g| g == x).unwrap();

    let mut increments = vec![Vec::with_capacity(paths); t_pairs.len()];
    for p in 0..paths {
        let mut rng = RngStream::new(seed, p as u64);
        let e = subordinators::sample_inverse_at(desc, &grid, 2_000, &mut rng)?;
        let op_horizon = *e.last().unwrap();
        let cpp = if op_horizon > 0.0 {
            Some(crate::processes::simulate_cpp(
                rate,
                &spec.jump,
                op_horizon * (1.0 + 1e-12),
                &mut rng,
            )?)
        } else {
            None
        };
        let y_at = |k: usize| cpp.as_ref().map_or(0.0, |c| c.value_at(e[k]));
        for (row, &(s, t)) in t_pairs.iter().enumerate() {
            let (is, it) = (index_of(s), index_of(t));
            let m_s = y_at(is) - rate * e[is] * jump_mean;
            let m_t = y_at(it) - rate * e[it] * jump_mean;
            increments[row].push(m_t - m_s);
        }
    }
    Ok(t_pairs
        .iter()
        .zip(increments)
        .map(|(&(s, t), inc)| {
            let (mean, se) = mean_with_se(&inc);
            let z = if se > 0.0 { mean / se } else { 0.0 };
            MartingaleRow {
                s,
                t,
                increment_mean: mean,
                se,
                z,
            }
        })
        .collect())
}

/// Least-squares fit of `log Corr(Y(s), Y(t))` against `log t`.
#[derive(Debug, Clone, Serialize)]
pub struct LrdFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_se: f64,
    pub points_used: usize,
}

/// Long-range-dependence slope estimate: simulates `paths` zero-mean-jump
/// paths, estimates the correlation of the value at `s_fixed` with the value
/// at each element of the geometric `t_grid`, and fits the log-log decay.
/// Nonpositive correlation estimates are excluded; fewer than 4 usable points
/// is an error.
pub fn lrd_slope(
    spec: &ProcessSpec,
    s_fixed: f64,
    t_grid: &[f64],
    paths: usize,
    seed: u64,
    op_steps: usize,
) -> Result<LrdFit> {
    let desc = spec.descriptor().ok_or_else(|| {
        GfcppError::InvalidParameter("LRD estimation requires a time-changed arrival".into())
    })?;
    let rate = spec.effective_rate();
    let mut grid = vec![0.0, s_fixed];
    grid.extend_from_slice(t_grid);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let s_idx = grid.iter().position(|&g| g == s_fixed).unwrap();
    let t_idx: Vec<usize> = t_grid
        .iter()
        .map(|&t| grid.iter().position(|&g| g == t).unwrap())
        .collect();

    let cols = grid.len();
    let mut sum = vec![0.0f64; cols];
    let mut sq = vec![0.0f64; cols];
    let mut cross = vec![0.0f64; t_grid.len()];
    for p in 0..paths {
        let mut rng = RngStream::new(seed, p as u64);
        let e = subordinators::sample_inverse_at(desc, &grid, op_steps, &mut rng)?;
        let op_horizon = *e.last().unwrap();
        let cpp = crate::processes::simulate_cpp(
            rate,
            &spec.jump,
            op_horizon.max(1e-12) * (1.0 + 1e-12),
            &mut rng,
        )?;
        let vals: Vec<f64> = e.iter().map(|&x| cpp.value_at(x)).collect();
        for (k, &v) in vals.iter().enumerate() {
            sum[k] += v;
            sq[k] += v * v;
        }
        for (r, &ti) in t_idx.iter().enumerate() {
            cross[r] += vals[s_idx] * vals[ti];
        }
    }
    let nf = paths as f64;
    let var = |k: usize| sq[k] / nf - (sum[k] / nf) * (sum[k] / nf);
    let vs = var(s_idx);
    if vs <= 0.0 {
        return Err(GfcppError::InsufficientData(
            "degenerate sample at the anchor time".into(),
        ));
    }
    let mut log_t = Vec::new();
    let mut log_c = Vec::new();
    for (r, &ti) in t_idx.iter().enumerate() {
        let vt = var(ti);
        if vt <= 0.0 {
            continue;
        }
        let cov = cross[r] / nf - (sum[s_idx] / nf) * (sum[ti] / nf);
        let corr = cov / (vs * vt).sqrt();
        if corr > 0.0 {
            log_t.push(grid[ti].ln());
            log_c.push(corr.ln());
        }
    }
    if log_t.len() < 4 {
        return Err(GfcppError::InsufficientData(format!(
            "only {} usable correlation points for the log-log fit",
            log_t.len()
        )));
    }
    let k = log_t.len() as f64;
    let mx = log_t.iter().sum::<f64>() / k;
    let my = log_c.iter().sum::<f64>() / k;
    let sxx: f64 = log_t.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = log_t
        .iter()
        .zip(&log_c)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let resid_ss: f64 = log_t
        .iter()
        .zip(&log_c)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let slope_se = (resid_ss / (k - 2.0) / sxx).sqrt();
    Ok(LrdFit {
        slope,
        intercept,
        slope_se,
        points_used: log_t.len(),
    })
}

/// The test-only zero-mean jump law used by the LRD corollary check.
pub fn centered_test_law() -> JumpLaw {
    JumpLaw::CenteredTwoPoint
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BernsteinDescriptor;

    #[test]
    fn ks_identical_and_disjoint() {
        let a: Vec<f64> = (0..500).map(|i| i as f64).collect();
        let (d, p) = ks_two_sample(&a, &a).unwrap();
        assert_eq!(d, 0.0);
        assert_eq!(p, 1.0);

        let b: Vec<f64> = (0..500).map(|i| 1000.0 + i as f64).collect();
        let (d, p) = ks_two_sample(&a, &b).unwrap();
        assert_eq!(d, 1.0);
        assert!(p < 1e-10);
    }

    #[test]
    fn ks_is_symmetric() {
        let mut rng = RngStream::new(5, 0);
        let a: Vec<f64> = (0..400).map(|_| rng.uniform()).collect();
        let b: Vec<f64> = (0..700).map(|_| rng.exponential(1.0)).collect();
        let (d1, p1) = ks_two_sample(&a, &b).unwrap();
        let (d2, p2) = ks_two_sample(&b, &a).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn ks_empty_rejected() {
        assert!(ks_two_sample(&[], &[1.0]).is_err());
    }

    #[test]
    fn ks_null_calibration() {
        // uniform vs uniform, rejection rate at 5% over 200 repetitions
        let reps = 200;
        let n = 10_000;
        let mut rejections = 0;
        for r in 0..reps {
            let mut ra = RngStream::new(0x4b5, 2 * r);
            let mut rb = RngStream::new(0x4b5, 2 * r + 1);
            let a: Vec<f64> = (0..n).map(|_| ra.uniform()).collect();
            let b: Vec<f64> = (0..n).map(|_| rb.uniform()).collect();
            let (_, p) = ks_two_sample(&a, &b).unwrap();
            if p < 0.05 {
                rejections += 1;
            }
        }
        let rate = rejections as f64 / reps as f64;
        assert!((rate - 0.05).abs() < 0.04, "null rejection rate {rate}");
    }

    #[test]
    fn empirical_laplace_properties() {
        let samples = vec![3.0; 100];
        let grid = [0.0, 0.5, 1.0, 2.0];
        let out = empirical_laplace(&samples, &grid);
        assert_eq!(out[0], (1.0, 0.0));
        // degenerate sample {c}: e^{-s c}
        for (k, &(v, _)) in out.iter().enumerate() {
            assert!((v - (-grid[k] * 3.0).exp()).abs() < 1e-12);
        }
        // nonincreasing in s, values in (0, 1]
        for w in out.windows(2) {
            assert!(w[1].0 <= w[0].0);
        }
        assert!(out.iter().all(|&(v, _)| v > 0.0 && v <= 1.0));
    }

    #[test]
    fn jackknife_matches_closed_forms() {
        let mut rng = RngStream::new(11, 0);
        let xs: Vec<f64> = (0..2_000).map(|_| rng.exponential(1.0)).collect();
        let (var, var_se) = jackknife_variance(&xs);
        let direct = {
            let m = xs.iter().sum::<f64>() / xs.len() as f64;
            xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() as f64 - 1.0)
        };
        assert!((var - direct).abs() < 1e-10);
        assert!(var_se > 0.0 && var_se < 0.2);

        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x + 1.0).collect();
        let (cov, _) = jackknife_covariance(&xs, &ys);
        assert!((cov - 2.0 * direct).abs() < 1e-9, "cov {cov}");
        // symmetry
        let (cov_rev, _) = jackknife_covariance(&ys, &xs);
        assert!((cov - cov_rev).abs() < 1e-12);
    }

    #[test]
    fn empirical_moments_constant_input() {
        let analytic = AnalyticMoments {
            mean: 5.0,
            variance: 0.0,
            covariance: None,
            mean_se: 0.0,
            variance_se: 0.0,
            covariance_se: 0.0,
        };
        let xs = vec![5.0; 200];
        let rep = empirical_moments(&xs, None, &analytic, 1.0, None).unwrap();
        assert_eq!(rep.variance.empirical, 0.0);
        assert!(rep.zero_variance_warning);
        assert_eq!(rep.mean.z, 0.0);
    }

    #[test]
    fn poisson_arrival_moment_sanity() {
        // lambda = 4, unit jumps, t = 1: mean 4
        let spec = ProcessSpec::new(
            Arrival::Poisson { lambda: 4.0 },
            JumpLaw::DiscreteUniform { k: 1 },
            1.0,
        )
        .unwrap();
        let analytic = analytic_moments(&spec, 1.0, None, 100, 0).unwrap();
        assert_eq!(analytic.mean, 4.0);
        let values: Vec<f64> = (0..5_000)
            .map(|p| {
                let mut rng = RngStream::new(0x90, p as u64);
                crate::processes::simulate_cpp(4.0, &spec.jump, 1.0, &mut rng)
                    .unwrap()
                    .terminal_value()
            })
            .collect();
        let rep = empirical_moments(&values, None, &analytic, 1.0, None).unwrap();
        assert!(rep.mean.z.abs() < 3.0, "z = {}", rep.mean.z);
        assert!(rep.variance.z.abs() < 3.0, "var z = {}", rep.variance.z);
    }

    #[test]
    fn moment_undefined_for_heavy_tail() {
        let spec = ProcessSpec::new(
            Arrival::TimeChanged {
                lambda: 4.0,
                desc: BernsteinDescriptor::stable(0.9).unwrap(),
            },
            JumpLaw::MittagLeffler { beta: 0.9, eta: 2.0 },
            1.0,
        )
        .unwrap();
        assert!(matches!(
            analytic_moments(&spec, 1.0, None, 100, 0),
            Err(GfcppError::MomentUndefined(_))
        ));
    }

    #[test]
    fn martingale_same_time_pair_is_zero() {
        let spec = ProcessSpec::new(
            Arrival::TimeChanged {
                lambda: 4.0,
                desc: BernsteinDescriptor::stable(0.9).unwrap(),
            },
            JumpLaw::Exponential { eta: 2.0 },
            1.0,
        )
        .unwrap();
        let rows = martingale_test(&spec, &[(1.0, 1.0)], 200, 0x31, None).unwrap();
        assert_eq!(rows[0].increment_mean, 0.0);
        assert_eq!(rows[0].z, 0.0);
    }

    #[test]
    fn lrd_constant_paths_error() {
        // zero-variance anchor: lambda tiny over a tiny horizon gives all-zero
        // values, which must surface as insufficient data
        let spec = ProcessSpec::new(
            Arrival::TimeChanged {
                lambda: 1e-9,
                desc: BernsteinDescriptor::tempered_stable(0.7, 2.0).unwrap(),
            },
            centered_test_law(),
            1.0,
        )
        .unwrap();
        let grid = [1.0, 2.0, 4.0, 8.0, 16.0];
        let err = lrd_slope(&spec, 1.0, &grid, 200, 0x55, 500);
        assert!(err.is_err());
    }
}
