//! Sample every jump law, and compare empirical means and Laplace transforms
//! with the closed forms.

use gfcpp::jumps::JumpLaw;
use gfcpp::{BernsteinDescriptor, RngStream};

fn main() -> gfcpp::Result<()> {
    let laws: Vec<(&str, JumpLaw)> = vec![
        ("exponential", JumpLaw::Exponential { eta: 2.0 }),
        ("Mittag-Leffler", JumpLaw::MittagLeffler { beta: 0.9, eta: 2.0 }),
        (
            "tempered Mittag-Leffler",
            JumpLaw::TemperedMittagLeffler { beta: 0.9, eta: 2.0, nu: 1.0 },
        ),
        (
            "Bernstein-type",
            JumpLaw::BernsteinType {
                g: BernsteinDescriptor::inverse_gaussian(0.3, 1.0)?,
                eta: 2.0,
            },
        ),
        ("discrete uniform", JumpLaw::DiscreteUniform { k: 5 }),
        ("truncated geometric", JumpLaw::TruncatedGeometric { rho: 0.5, k: 5 }),
        ("logarithmic", JumpLaw::Logarithmic { q: 0.5 }),
    ];

    let n = 20_000;
    let s = 1.5;
    for (i, (name, law)) in laws.iter().enumerate() {
        let mut rng = RngStream::new(11, i as u64);
        let mut sum = 0.0;
        let mut lap = 0.0;
        for _ in 0..n {
            let x = law.sample(&mut rng)?;
            sum += x;
            lap += (-s * x).exp();
        }
        let mean = law
            .moments()
            .mean
            .map_or("undefined".into(), |m| format!("{m:.4}"));
        println!(
            "{name:<24} mean {mean:>9} (mc {:>7.4})   LT({s}) {:.4} (mc {:.4})",
            sum / n as f64,
            law.laplace(s),
            lap / n as f64,
        );
    }
    Ok(())
}
