//! Apply the generalized Caputo-Djrbashian and Riemann-Liouville derivatives
//! to functions with known transforms. For the stable kernel the derivative
//! of t is t^{1-alpha} / Gamma(2 - alpha), and the Mittag-Leffler function
//! E_alpha(-t^alpha) is an eigenfunction with eigenvalue -1.

use gfcpp::fde::{cd_derivative, rl_derivative, KernelQuadrature};
use gfcpp::specfun::mittag_leffler;
use gfcpp::BernsteinDescriptor;
use statrs::function::gamma::gamma;

fn main() -> gfcpp::Result<()> {
    let alpha = 0.9;
    let h = 1.0 / 128.0;
    let n = 128;
    let kq = KernelQuadrature::new(BernsteinDescriptor::stable(alpha)?, h, n)?;

    let linear: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
    let d_lin = cd_derivative(&linear, &kq)?;
    let t = 0.5;
    let i = (t / h).round() as usize;
    println!(
        "D^{alpha} t at t={t}: {:.12} (exact {:.12})",
        d_lin[i],
        t.powf(1.0 - alpha) / gamma(2.0 - alpha)
    );

    let eigen: Vec<f64> = (0..=n)
        .map(|i| mittag_leffler(alpha, 1.0, -(i as f64 * h).powf(alpha)))
        .collect::<gfcpp::Result<_>>()?;
    let d_eig = cd_derivative(&eigen, &kq)?;
    println!(
        "eigenfunction residual |D^{alpha} u + u| at t={t}: {:.3e}",
        (d_eig[i] + eigen[i]).abs()
    );

    let rl = rl_derivative(&eigen, &kq)?;
    let tail = kq.descriptor.levy_tail(t)?;
    println!(
        "Riemann-Liouville vs Caputo-Djrbashian gap at t={t}: {:.3e} (u(0) kernel term {:.4})",
        (rl[i] - d_eig[i] - tail * eigen[0]).abs(),
        tail * eigen[0]
    );
    Ok(())
}
