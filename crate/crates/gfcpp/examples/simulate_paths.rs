//! Simulate a compound Poisson process on a tempered-stable inverse
//! subordinator clock and print the path values on a calendar grid.

use gfcpp::jumps::JumpLaw;
use gfcpp::processes::{simulate_gfcpp_with_clock, Arrival, ProcessSpec};
use gfcpp::{BernsteinDescriptor, RngStream};

fn main() -> gfcpp::Result<()> {
    let spec = ProcessSpec::new(
        Arrival::TimeChanged {
            lambda: 4.0,
            desc: BernsteinDescriptor::tempered_stable(0.7, 2.0)?,
        },
        JumpLaw::DiscreteUniform { k: 5 },
        1.0,
    )?;

    let mut rng = RngStream::new(2024, 0);
    let (path, clock) = simulate_gfcpp_with_clock(&spec, 2.0, 8, 4_000, &mut rng)?;

    println!("{:>6} {:>10} {:>8}", "t", "clock", "Y(t)");
    for ((t, v), e) in path.times.iter().zip(&path.values).zip(&clock) {
        println!("{t:>6.2} {e:>10.4} {v:>8.1}");
    }
    Ok(())
}
