//! Monte Carlo state probabilities of a fractional Poisson process (unit
//! jumps on a stable inverse-subordinator clock) against the closed-form
//! survival probability P(N(t) = 0) = E_alpha(-lambda t^alpha).

use gfcpp::jumps::JumpLaw;
use gfcpp::processes::{gfcpp_pmf_mc, Arrival, ProcessSpec};
use gfcpp::specfun::mittag_leffler;
use gfcpp::BernsteinDescriptor;

fn main() -> gfcpp::Result<()> {
    let (alpha, lambda) = (0.9, 4.0);
    let spec = ProcessSpec::new(
        Arrival::TimeChanged {
            lambda,
            desc: BernsteinDescriptor::stable(alpha)?,
        },
        JumpLaw::DiscreteUniform { k: 1 },
        1.0,
    )?;

    let t = 1.0f64;
    let exact0 = mittag_leffler(alpha, 1.0, -lambda * t.powf(alpha))?;
    println!("{:>3} {:>10} {:>10} {:>10}", "n", "mc", "se", "exact");
    for n in 0..5 {
        let (p, se) = gfcpp_pmf_mc(&spec, n, t, 2_000, 13)?;
        if n == 0 {
            println!("{n:>3} {p:>10.5} {se:>10.5} {exact0:>10.5}");
        } else {
            println!("{n:>3} {p:>10.5} {se:>10.5} {:>10}", "-");
        }
    }
    Ok(())
}
