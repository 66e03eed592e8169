//! Evaluate the special functions that drive the analytic formulas: the
//! two-parameter Mittag-Leffler function, incomplete gamma functions and the
//! mean of an inverse subordinator.

use gfcpp::specfun::{
    incomplete_gamma_lower, incomplete_gamma_upper, mean_inverse_subordinator, mittag_leffler,
};
use gfcpp::BernsteinDescriptor;
use statrs::function::gamma::gamma;

fn main() -> gfcpp::Result<()> {
    println!("E_{{1,1}}(1)      = {:.12}  (e = {:.12})", mittag_leffler(1.0, 1.0, 1.0)?, 1f64.exp());
    println!("E_{{1/2,1}}(-1)   = {:.12}", mittag_leffler(0.5, 1.0, -1.0)?);
    println!("E_{{0.9,1}}(-2)   = {:.12}", mittag_leffler(0.9, 1.0, -2.0)?);

    let (a, x) = (0.7, 1.3);
    let sum = incomplete_gamma_lower(a, x) + incomplete_gamma_upper(a, x);
    println!("gamma({a},{x}) + Gamma({a},{x}) = {sum:.15} vs Gamma({a}) = {:.15}", gamma(a));

    let stable = BernsteinDescriptor::stable(0.9)?;
    let tempered = BernsteinDescriptor::tempered_stable(0.7, 2.0)?;
    let ig = BernsteinDescriptor::inverse_gaussian(0.3, 1.0)?;
    for t in [0.5, 1.0, 2.0] {
        println!(
            "E[E(t)] at t={t}: stable {:.5}  tempered {:.5}  inverse-Gaussian {:.5}",
            mean_inverse_subordinator(&stable, t)?,
            mean_inverse_subordinator(&tempered, t)?,
            mean_inverse_subordinator(&ig, t)?,
        );
    }
    Ok(())
}
