//! Compare Monte Carlo moments of a time-fractional compound Poisson process
//! against their analytic values at two calendar times.

use gfcpp::analytics::{analytic_moments, empirical_moments};
use gfcpp::jumps::JumpLaw;
use gfcpp::processes::{Arrival, ProcessSpec};
use gfcpp::subordinators::sample_inverse_at;
use gfcpp::{BernsteinDescriptor, RngStream};

fn main() -> gfcpp::Result<()> {
    let spec = ProcessSpec::new(
        Arrival::TimeChanged {
            lambda: 4.0,
            desc: BernsteinDescriptor::stable(0.9)?,
        },
        JumpLaw::Exponential { eta: 2.0 },
        1.0,
    )?;
    let (s, t) = (0.5, 1.0);
    let paths = 3_000;

    let mut at_s = Vec::with_capacity(paths);
    let mut at_t = Vec::with_capacity(paths);
    for p in 0..paths {
        let mut rng = RngStream::new(7, p as u64);
        let desc = spec.descriptor().unwrap();
        let clock = sample_inverse_at(desc, &[0.0, s, t], 2_000, &mut rng)?;
        let cpp = gfcpp::processes::simulate_cpp(
            spec.effective_rate(),
            &spec.jump,
            clock[2] * (1.0 + 1e-12),
            &mut rng,
        )?;
        at_s.push(cpp.value_at(clock[1]));
        at_t.push(cpp.value_at(clock[2]));
    }

    let analytic = analytic_moments(&spec, t, Some(s), 20_000, 99)?;
    let report = empirical_moments(&at_t, Some(&at_s), &analytic, t, Some(s))?;

    println!("mean      analytic {:.4}  empirical {:.4}  z {:+.2}",
        report.mean.analytic, report.mean.empirical, report.mean.z);
    println!("variance  analytic {:.4}  empirical {:.4}  z {:+.2}",
        report.variance.analytic, report.variance.empirical, report.variance.z);
    if let Some(cov) = &report.covariance {
        println!("cov(s,t)  analytic {:.4}  empirical {:.4}  z {:+.2}",
            cov.analytic, cov.empirical, cov.z);
    }
    Ok(())
}
