//! Distributional identity check: a time-changed CPP with Mittag-Leffler
//! jumps equals a stable subordinator evaluated at an independent
//! exponential-jump CPP on the same clock. A two-sample Kolmogorov-Smirnov
//! test compares the two constructions at t = 1.

use gfcpp::analytics::ks_two_sample;
use gfcpp::jumps::JumpLaw;
use gfcpp::processes::{
    simulate_representation, Arrival, ProcessSpec, Representation,
};
use gfcpp::subordinators::sample_inverse_at;
use gfcpp::{BernsteinDescriptor, RngStream};

fn main() -> gfcpp::Result<()> {
    let desc = BernsteinDescriptor::tempered_stable(0.7, 2.0)?;
    let direct_spec = ProcessSpec::new(
        Arrival::TimeChanged { lambda: 4.0, desc: desc.clone() },
        JumpLaw::MittagLeffler { beta: 0.9, eta: 2.0 },
        1.0,
    )?;
    let base = ProcessSpec::new(
        Arrival::TimeChanged { lambda: 4.0, desc: desc.clone() },
        JumpLaw::Exponential { eta: 2.0 },
        1.0,
    )?;
    let rep = Representation::StableAtExpCpp { beta: 0.9 };

    let n = 4_000;
    let mut direct = Vec::with_capacity(n);
    let mut composed = Vec::with_capacity(n);
    for p in 0..n {
        let mut rng = RngStream::new(21, p as u64);
        let e = sample_inverse_at(&desc, &[0.0, 1.0], 2_000, &mut rng)?[1];
        let y = if e > 0.0 {
            gfcpp::processes::simulate_cpp(4.0, &direct_spec.jump, e * (1.0 + 1e-12), &mut rng)?
                .terminal_value()
        } else {
            0.0
        };
        direct.push(y);

        let mut rng = RngStream::new(22, p as u64);
        composed.push(simulate_representation(&rep, &base, 1.0, &mut rng)?);
    }

    let (d, p) = ks_two_sample(&direct, &composed)?;
    println!("KS statistic D = {d:.4}, p-value = {p:.4}");
    println!("identity {}", if p >= 0.01 { "supported" } else { "rejected" });
    Ok(())
}
