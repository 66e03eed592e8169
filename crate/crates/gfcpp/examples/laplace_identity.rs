//! Compare the empirical Laplace transform of the inverse subordinator at a
//! fixed calendar time against the Talbot-inverted analytic expression
//! E[e^{-y E(t)}].

use gfcpp::analytics::empirical_laplace;
use gfcpp::specfun::exp_functional_inverse_subordinator;
use gfcpp::subordinators::sample_inverse_at;
use gfcpp::{BernsteinDescriptor, RngStream};

fn main() -> gfcpp::Result<()> {
    let desc = BernsteinDescriptor::inverse_gaussian(0.3, 1.0)?;
    let t = 1.0;
    let paths = 5_000;

    let samples: Vec<f64> = (0..paths)
        .map(|p| {
            let mut rng = RngStream::new(17, p as u64);
            Ok(sample_inverse_at(&desc, &[0.0, t], 4_000, &mut rng)?[1])
        })
        .collect::<gfcpp::Result<_>>()?;

    let y_grid = [0.25, 0.5, 1.0, 2.0];
    println!("{:>6} {:>12} {:>12} {:>8}", "y", "empirical", "analytic", "z");
    for (y, (emp, se)) in y_grid.iter().zip(empirical_laplace(&samples, &y_grid)) {
        let exact = exp_functional_inverse_subordinator(&desc, *y, t)?;
        println!("{y:>6.2} {emp:>12.5} {exact:>12.5} {:>+8.2}", (emp - exact) / se);
    }
    Ok(())
}
