//! The jump-size laws: samplers, Laplace transforms and moments.
//!
//! The heavy-tailed laws (Mittag-Leffler, tempered Mittag-Leffler, general
//! Bernstein-type) are sampled through their time-change identities: a draw is
//! a subordinator increment evaluated over an independent exponential time.

use crate::error::{GfcppError, Result};
use crate::rng::RngStream;
use crate::specfun::BernsteinDescriptor;
use crate::subordinators;

/// Moment pair with infinite-tail flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpMoments {
    pub mean: Option<f64>,
    pub second_moment: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum JumpLaw {
    /// Exponential with rate `eta > 0`.
    Exponential { eta: f64 },
    /// Mittag-Leffler with tail index `beta` in (0,1] and scale `eta > 0`;
    /// density `eta x^{beta-1} E_{beta,beta}(-eta x^beta)`.
    MittagLeffler { beta: f64, eta: f64 },
    /// Tempered Mittag-Leffler: Laplace transform
    /// `eta / (eta + (s+nu)^beta - nu^beta)`.
    TemperedMittagLeffler { beta: f64, eta: f64, nu: f64 },
    /// Bernstein-type inter-arrival law with survival `E[e^{-eta E_g(t)}]`;
    /// Laplace transform `eta / (g(s) + eta)`.
    BernsteinType { g: BernsteinDescriptor, eta: f64 },
    /// Uniform on `{1, ..., k}`.
    DiscreteUniform { k: u32 },
    /// Truncated geometric on `{1, ..., k}`:
    /// `P(X=j) = (1-rho) rho^{j-1} / (1 - rho^k)`.
    TruncatedGeometric { rho: f64, k: u32 },
    /// Logarithmic: `P(X=n) = -q^n / (n ln(1-q))`, `n >= 1`.
    Logarithmic { q: f64 },
    /// Centered two-point law on `{-1, +1}` with probability 1/2 each.
    /// Zero-mean by construction; exists only for the long-range-dependence
    /// correlation test, which requires `E[X] = 0`.
    CenteredTwoPoint,
}

impl JumpLaw {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(GfcppError::InvalidParameter(msg));
        match *self {
            Self::Exponential { eta } if !(eta > 0.0) => bad(format!("eta must be > 0, got {eta}")),
            Self::MittagLeffler { beta, eta } if !(beta > 0.0 && beta <= 1.0 && eta > 0.0) => {
                bad(format!("need beta in (0,1], eta > 0; got beta={beta}, eta={eta}"))
            }
            Self::TemperedMittagLeffler { beta, eta, nu }
                if !(beta > 0.0 && beta <= 1.0 && eta > 0.0 && nu >= 0.0) =>
            {
                bad(format!(
                    "need beta in (0,1], eta > 0, nu >= 0; got beta={beta}, eta={eta}, nu={nu}"
                ))
            }
            Self::BernsteinType { eta, .. } if !(eta > 0.0) => {
                bad(format!("eta must be > 0, got {eta}"))
            }
            Self::DiscreteUniform { k } if k == 0 => bad("k must be >= 1".into()),
            Self::TruncatedGeometric { rho, k } if !(rho >= 0.0 && rho < 1.0) || k == 0 => {
                bad(format!("need rho in [0,1) and k >= 1; got rho={rho}, k={k}"))
            }
            Self::Logarithmic { q } if !(q > 0.0 && q < 1.0) => {
                bad(format!("q must lie in (0,1), got {q}"))
            }
            _ => Ok(()),
        }
    }

    /// Whether the law is supported on the nonnegative integers.
    pub fn is_discrete(&self) -> bool {
        matches!(
            self,
            Self::DiscreteUniform { .. } | Self::TruncatedGeometric { .. } | Self::Logarithmic { .. }
        )
    }

    /// One draw from the law.
    pub fn sample(&self, rng: &mut RngStream) -> Result<f64> {
        match *self {
            Self::Exponential { eta } => Ok(rng.exponential(eta)),
            Self::MittagLeffler { beta, eta } => {
                let y = rng.exponential(eta);
                if beta == 1.0 {
                    // D_1 is the unit drift
                    return Ok(y);
                }
                Ok(subordinators::sample_stable_increment(beta, y, rng))
            }
            Self::TemperedMittagLeffler { beta, eta, nu } => {
                let y = rng.exponential(eta);
                if beta == 1.0 {
                    return Ok(y);
                }
                subordinators::sample_tempered_stable_increment(beta, nu, y, rng)
            }
            Self::BernsteinType { ref g, eta } => {
                let y = rng.exponential(eta);
                subordinators::sample_increment(g, y, rng)
            }
            Self::DiscreteUniform { k } => Ok((rng.uniform() * k as f64).floor() as f64 + 1.0),
            Self::TruncatedGeometric { rho, k } => {
                if k == 1 || rho == 0.0 {
                    return Ok(if k == 1 { 1.0 } else { inverse_geometric(rho, rng) });
                }
                // inverse cdf over the finite support
                let u = rng.uniform() * (1.0 - rho.powi(k as i32));
                // F(j) = 1 - rho^j, so j = ceil(log(1-u)/log(rho))
                let j = ((1.0 - u).ln() / rho.ln()).ceil().max(1.0);
                Ok(j.min(k as f64))
            }
            Self::Logarithmic { q } => Ok(sample_logarithmic(q, rng)),
            Self::CenteredTwoPoint => Ok(if rng.uniform() < 0.5 { -1.0 } else { 1.0 }),
        }
    }

    /// Laplace transform `E[e^{-s X}]` at real `s >= 0`.
    pub fn laplace(&self, s: f64) -> f64 {
        debug_assert!(s >= 0.0);
        match *self {
            Self::Exponential { eta } => eta / (eta + s),
            Self::MittagLeffler { beta, eta } => eta / (eta + s.powf(beta)),
            Self::TemperedMittagLeffler { beta, eta, nu } => {
                eta / (eta + (s + nu).powf(beta) - nu.powf(beta))
            }
            Self::BernsteinType { ref g, eta } => eta / (g.eval(s) + eta),
            Self::DiscreteUniform { k } => {
                (1..=k).map(|j| (-s * j as f64).exp()).sum::<f64>() / k as f64
            }
            Self::TruncatedGeometric { rho, k } => {
                // direct finite sum of the pmf
                let norm = (1.0 - rho) / (1.0 - rho.powi(k as i32));
                (1..=k)
                    .map(|j| norm * rho.powi(j as i32 - 1) * (-s * j as f64).exp())
                    .sum()
            }
            Self::Logarithmic { q } => (1.0 - q * (-s).exp()).ln() / (1.0 - q).ln(),
            Self::CenteredTwoPoint => 0.5 * (s.exp() + (-s).exp()),
        }
    }

    /// Closed-form first two moments, with `None` marking an infinite moment.
    pub fn moments(&self) -> JumpMoments {
        match *self {
            Self::Exponential { eta } => JumpMoments {
                mean: Some(1.0 / eta),
                second_moment: Some(2.0 / (eta * eta)),
            },
            Self::MittagLeffler { beta, eta } => {
                if beta < 1.0 {
                    // heavy tail: E[X] diverges for beta < 1
                    JumpMoments {
                        mean: None,
                        second_moment: None,
                    }
                } else {
                    JumpMoments {
                        mean: Some(1.0 / eta),
                        second_moment: Some(2.0 / (eta * eta)),
                    }
                }
            }
            Self::TemperedMittagLeffler { beta, eta, nu } => {
                if beta < 1.0 && nu == 0.0 {
                    JumpMoments {
                        mean: None,
                        second_moment: None,
                    }
                } else {
                    // differentiate eta/(eta + (s+nu)^b - nu^b) at s = 0
                    let fp = beta * nu.powf(beta - 1.0);
                    let fpp = beta * (beta - 1.0) * nu.powf(beta - 2.0);
                    let mean = fp / eta;
                    let second = (2.0 * fp * fp / (eta * eta)) - fpp / eta;
                    JumpMoments {
                        mean: Some(mean),
                        second_moment: Some(second),
                    }
                }
            }
            Self::BernsteinType { ref g, eta } => {
                // moments exist only when f'(0+) is finite
                match *g {
                    BernsteinDescriptor::Stable { .. } => JumpMoments {
                        mean: None,
                        second_moment: None,
                    },
                    BernsteinDescriptor::TemperedStable { alpha, mu } => {
                        if mu == 0.0 {
                            JumpMoments {
                                mean: None,
                                second_moment: None,
                            }
                        } else {
                            let fp = alpha * mu.powf(alpha - 1.0);
                            let fpp = alpha * (alpha - 1.0) * mu.powf(alpha - 2.0);
                            JumpMoments {
                                mean: Some(fp / eta),
                                second_moment: Some(2.0 * fp * fp / (eta * eta) - fpp / eta),
                            }
                        }
                    }
                    BernsteinDescriptor::InverseGaussian { delta, gamma } => {
                        let fp = delta / gamma;
                        let fpp = -delta / (gamma * gamma * gamma);
                        JumpMoments {
                            mean: Some(fp / eta),
                            second_moment: Some(2.0 * fp * fp / (eta * eta) - fpp / eta),
                        }
                    }
                }
            }
            Self::DiscreteUniform { k } => {
                let kf = k as f64;
                JumpMoments {
                    mean: Some((kf + 1.0) / 2.0),
                    second_moment: Some((kf + 1.0) * (2.0 * kf + 1.0) / 6.0),
                }
            }
            Self::TruncatedGeometric { .. } => {
                let pmf = self.pmf();
                let mean = pmf.iter().enumerate().map(|(j, p)| j as f64 * p).sum();
                let second = pmf
                    .iter()
                    .enumerate()
                    .map(|(j, p)| (j * j) as f64 * p)
                    .sum();
                JumpMoments {
                    mean: Some(mean),
                    second_moment: Some(second),
                }
            }
            Self::Logarithmic { q } => {
                let ln1q = (1.0 - q).ln();
                JumpMoments {
                    mean: Some(-q / ((1.0 - q) * ln1q)),
                    second_moment: Some(-q / ((1.0 - q) * (1.0 - q) * ln1q)),
                }
            }
            Self::CenteredTwoPoint => JumpMoments {
                mean: Some(0.0),
                second_moment: Some(1.0),
            },
        }
    }

    /// Probability mass function for discrete laws, indexed from 0.
    ///
    /// The logarithmic law has unbounded support; it is truncated where the
    /// remaining tail mass falls below 1e-12.
    pub fn pmf(&self) -> Vec<f64> {
        match *self {
            Self::DiscreteUniform { k } => {
                let mut p = vec![0.0; k as usize + 1];
                for j in 1..=k as usize {
                    p[j] = 1.0 / k as f64;
                }
                p
            }
            Self::TruncatedGeometric { rho, k } => {
                let mut p = vec![0.0; k as usize + 1];
                let norm = if rho == 0.0 {
                    1.0
                } else {
                    (1.0 - rho) / (1.0 - rho.powi(k as i32))
                };
                for j in 1..=k as usize {
                    p[j] = if rho == 0.0 && j > 1 {
                        0.0
                    } else if rho == 0.0 {
                        1.0
                    } else {
                        norm * rho.powi(j as i32 - 1)
                    };
                }
                p
            }
            Self::Logarithmic { q } => {
                let c = -1.0 / (1.0 - q).ln();
                let mut p = vec![0.0];
                let mut mass = 0.0;
                let mut n = 1usize;
                loop {
                    let pj = c * q.powi(n as i32) / n as f64;
                    p.push(pj);
                    mass += pj;
                    // geometric bound on the remaining tail
                    let tail = c * q.powi(n as i32 + 1) / ((n + 1) as f64 * (1.0 - q));
                    if tail < 1e-12 && mass > 0.5 {
                        break;
                    }
                    n += 1;
                    if n > 10_000 {
                        break;
                    }
                }
                p
            }
            _ => panic!("pmf is defined for the discrete laws only"),
        }
    }
}

fn inverse_geometric(rho: f64, rng: &mut RngStream) -> f64 {
    if rho == 0.0 {
        return 1.0;
    }
    (rng.uniform_open().ln() / rho.ln()).ceil().max(1.0)
}

/// Logarithmic-series sampler (Kemp's inversion on the chop-down cdf).
fn sample_logarithmic(q: f64, rng: &mut RngStream) -> f64 {
    let c = -1.0 / (1.0 - q).ln();
    let mut u = rng.uniform_open();
    let mut n = 1.0f64;
    let mut pj = c * q;
    loop {
        if u <= pj {
            return n;
        }
        u -= pj;
        pj = pj * q * n / (n + 1.0);
        n += 1.0;
        if n > 1e7 {
            return n;
        }
    }
}
