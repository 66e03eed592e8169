//! End-to-end acceptance checks. Each test prints one pass/fail line; run
//! with `--nocapture` to see them on success.

use rayon::prelude::*;
use statrs::function::gamma::gamma;

use gfcpp::analytics::{self, mean_with_se};
use gfcpp::fde::{self, KernelQuadrature, PmfSource, RowStatus};
use gfcpp::jumps::JumpLaw;
use gfcpp::processes::{self, Arrival, ProcessSpec, Representation};
use gfcpp::specfun::{self, incomplete_gamma_lower, incomplete_gamma_upper, mittag_leffler};
use gfcpp::subordinators;
use gfcpp::{BernsteinDescriptor, RngStream};

fn check(name: &str, pass: bool, detail: &str) {
    println!(
        "acceptance: {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{name}: {detail}");
}

fn time_changed(desc: BernsteinDescriptor, lambda: f64, jump: JumpLaw, mult: f64) -> ProcessSpec {
    ProcessSpec::new(Arrival::TimeChanged { lambda, desc }, jump, mult).unwrap()
}

/// Terminal values over independent paths, one rng stream per path index.
fn terminal_values(
    spec: &ProcessSpec,
    t: f64,
    paths: usize,
    seed: u64,
    op_steps: usize,
) -> Vec<f64> {
    (0..paths)
        .into_par_iter()
        .map(|p| {
            let mut rng = RngStream::new(seed, p as u64);
            match spec.descriptor() {
                None => processes::simulate_cpp(spec.effective_rate(), &spec.jump, t, &mut rng)
                    .unwrap()
                    .terminal_value(),
                Some(desc) => {
                    let e =
                        subordinators::sample_inverse_at(desc, &[0.0, t], op_steps, &mut rng)
                            .unwrap()[1];
                    if e > 0.0 {
                        processes::simulate_cpp(
                            spec.effective_rate(),
                            &spec.jump,
                            e * (1.0 + 1e-12),
                            &mut rng,
                        )
                        .unwrap()
                        .terminal_value()
                    } else {
                        0.0
                    }
                }
            }
        })
        .collect()
}

#[test]
fn criterion_01_moment_reproduction() {
    // time-fractional CPP, exponential jumps: E[Y(1)] = lambda t^a / (eta Gamma(1+a))
    let (alpha, lambda, eta) = (0.9, 4.0, 2.0);
    let spec = time_changed(
        BernsteinDescriptor::stable(alpha).unwrap(),
        lambda,
        JumpLaw::Exponential { eta },
        1.0,
    );
    let analytic = lambda / (eta * gamma(1.0 + alpha));
    let values = terminal_values(&spec, 1.0, 10_000, 0xac01, 2_000);
    let (mean, se) = mean_with_se(&values);
    let z = (mean - analytic) / se;
    check(
        "01 moment reproduction",
        z.abs() < 3.0,
        &format!("mean {mean:.4} vs {analytic:.4}, z = {z:.2}"),
    );
}

#[test]
fn criterion_02_tempered_arrival_mean() {
    // order-5 uniform jumps on a tempered-stable clock:
    // E[Y(t)] = 5 lambda E[E(t)] * 3 via the incomplete-gamma series
    let desc = BernsteinDescriptor::tempered_stable(0.7, 2.0).unwrap();
    let spec = time_changed(desc.clone(), 4.0, JumpLaw::DiscreteUniform { k: 5 }, 5.0);
    for (i, &t) in [0.5, 1.0].iter().enumerate() {
        let analytic =
            20.0 * specfun::mean_inverse_subordinator(&desc, t).unwrap() * 3.0;
        let values = terminal_values(&spec, t, 10_000, 0xac02 + i as u64, 2_000);
        let (mean, se) = mean_with_se(&values);
        let z = (mean - analytic) / se;
        check(
            &format!("02 tempered arrival mean t={t}"),
            z.abs() < 3.0,
            &format!("mean {mean:.3} vs {analytic:.3}, z = {z:.2}"),
        );
    }
}

#[test]
fn criterion_03_time_change_identities() {
    let itss = BernsteinDescriptor::tempered_stable(0.7, 2.0).unwrap();
    let iig = BernsteinDescriptor::inverse_gaussian(0.3, 1.0).unwrap();
    let ig_g = BernsteinDescriptor::inverse_gaussian(0.3, 1.0).unwrap();
    let cases: Vec<(&str, BernsteinDescriptor, JumpLaw, Representation)> = vec![
        (
            "stable at exponential time",
            itss.clone(),
            JumpLaw::MittagLeffler { beta: 0.9, eta: 2.0 },
            Representation::StableAtExpCpp { beta: 0.9 },
        ),
        (
            "general subordinator at exponential time",
            itss.clone(),
            JumpLaw::BernsteinType { g: ig_g.clone(), eta: 2.0 },
            Representation::SubordinatorAtExpCpp { g: ig_g },
        ),
        (
            "tempered stable at exponential time",
            itss.clone(),
            JumpLaw::TemperedMittagLeffler { beta: 0.9, eta: 2.0, nu: 1.0 },
            Representation::TemperedStableAtExpCpp { beta: 0.9, nu: 1.0 },
        ),
        (
            "stable at exponential time, inverse-Gaussian clock",
            iig,
            JumpLaw::MittagLeffler { beta: 0.9, eta: 2.0 },
            Representation::StableAtExpCpp { beta: 0.9 },
        ),
    ];
    for (i, (name, desc, jump, rep)) in cases.into_iter().enumerate() {
        let spec = time_changed(desc.clone(), 4.0, jump, 1.0);
        let base = time_changed(desc, 4.0, JumpLaw::Exponential { eta: 2.0 }, 1.0);
        let direct = terminal_values(&spec, 1.0, 10_000, 0xac30 + i as u64, 2_000);
        let composed: Vec<f64> = (0..10_000usize)
            .into_par_iter()
            .map(|p| {
                let mut rng = RngStream::new(0xac40 + i as u64, p as u64);
                processes::simulate_representation(&rep, &base, 1.0, &mut rng).unwrap()
            })
            .collect();
        let (d, p) = analytics::ks_two_sample(&direct, &composed).unwrap();
        check(
            &format!("03 time-change identity: {name}"),
            p >= 0.01,
            &format!("KS D = {d:.4}, p = {p:.3}"),
        );
    }
}

#[test]
fn criterion_04_martingale_property() {
    let pairs = [(0.5, 1.0), (1.0, 2.0)];
    for (name, desc) in [
        ("stable", BernsteinDescriptor::stable(0.9).unwrap()),
        ("inverse-Gaussian", BernsteinDescriptor::inverse_gaussian(0.3, 1.0).unwrap()),
    ] {
        let spec = time_changed(desc, 4.0, JumpLaw::Exponential { eta: 2.0 }, 1.0);
        let rows = analytics::martingale_test(&spec, &pairs, 10_000, 0xac04, None).unwrap();
        for r in &rows {
            check(
                &format!("04 martingale ({name}, {}..{})", r.s, r.t),
                r.z.abs() < 3.0,
                &format!("z = {:.2}", r.z),
            );
        }
        // power check: a wrong compensator mean must be detected
        let bad =
            analytics::martingale_test(&spec, &pairs, 10_000, 0xac04, Some(1.0)).unwrap();
        for r in &bad {
            check(
                &format!("04 corrupted compensator ({name}, {}..{})", r.s, r.t),
                r.z.abs() > 3.0,
                &format!("z = {:.2}", r.z),
            );
        }
    }
}

#[test]
fn criterion_05_lrd_slope() {
    let spec = time_changed(
        BernsteinDescriptor::tempered_stable(0.7, 2.0).unwrap(),
        4.0,
        JumpLaw::CenteredTwoPoint,
        1.0,
    );
    let points = 8;
    let (lo, hi) = (4.0f64, 200.0f64);
    let grid: Vec<f64> = (0..points)
        .map(|i| lo * (hi / lo).powf(i as f64 / (points - 1) as f64))
        .collect();
    let fit = analytics::lrd_slope(&spec, 1.0, &grid, 100_000, 0xac05, 4_000).unwrap();
    check(
        "05 long-range dependence slope",
        (-0.6..=-0.4).contains(&fit.slope),
        &format!("slope {:.3} +- {:.3} over {} points", fit.slope, fit.slope_se, fit.points_used),
    );
}

#[test]
fn criterion_06_dde_residuals() {
    let h = 1.0 / 128.0;
    // semi-analytic n = 0 rows, all three clock families, order-5 uniform jumps
    for (name, desc) in [
        ("stable", BernsteinDescriptor::stable(0.9).unwrap()),
        ("tempered stable", BernsteinDescriptor::tempered_stable(0.7, 2.0).unwrap()),
        ("inverse-Gaussian", BernsteinDescriptor::inverse_gaussian(0.3, 1.0).unwrap()),
    ] {
        let spec = time_changed(desc, 4.0, JumpLaw::DiscreteUniform { k: 5 }, 5.0);
        let rep = fde::dde_residual(&spec, 0, h, 2.0, PmfSource::SemiAnalytic).unwrap();
        check(
            &format!("06 dde n=0 semi-analytic ({name})"),
            rep.status == RowStatus::Pass,
            &format!("max residual {:.2e}, budget C = {:.2e}", rep.max_residual, rep.c_budget),
        );
    }
    // Monte Carlo rows n in {1, 2} on the tempered-stable clock
    let itss = BernsteinDescriptor::tempered_stable(0.7, 2.0).unwrap();
    let mc = PmfSource::MonteCarlo { paths: 1_500, seed: 0xac06 };
    for (name, spec) in [
        (
            "order-5 uniform",
            time_changed(itss.clone(), 4.0, JumpLaw::DiscreteUniform { k: 5 }, 5.0),
        ),
        (
            "order-5 truncated geometric",
            time_changed(itss.clone(), 4.0, JumpLaw::TruncatedGeometric { rho: 0.5, k: 5 }, 1.0),
        ),
    ] {
        let rep = fde::dde_residual(&spec, 2, h, 2.0, mc).unwrap();
        check(
            &format!("06 dde Monte Carlo rows ({name})"),
            rep.status == RowStatus::Pass,
            &format!("max ratio {:.2}, status {:?}", rep.max_ratio, rep.status),
        );
    }
}

#[test]
fn criterion_07_operator_correctness() {
    let alpha = 0.9;
    let kq = |h: f64, cells: usize| {
        KernelQuadrature::new(BernsteinDescriptor::stable(alpha).unwrap(), h, cells).unwrap()
    };
    // u(t) = t: exact cell weights make product integration exact here, so
    // the match holds to roundoff (stronger than the O(h) requirement)
    let h = 1.0 / 128.0;
    let n = 256;
    let u: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
    let d = fde::cd_derivative(&u, &kq(h, n)).unwrap();
    let max_err = (1..=n)
        .map(|i| {
            let t = i as f64 * h;
            (d[i] - t.powf(1.0 - alpha) / gamma(2.0 - alpha)).abs()
        })
        .fold(0.0f64, f64::max);
    check(
        "07 identity benchmark",
        max_err < 1e-10,
        &format!("max error {max_err:.2e}"),
    );
    // Richardson ratio on the first non-exact monomial t^2
    let err_quadratic = |h: f64| {
        let n = (2.0 / h).round() as usize;
        let u: Vec<f64> = (0..=n).map(|i| (i as f64 * h) * (i as f64 * h)).collect();
        let d = fde::cd_derivative(&u, &kq(h, n)).unwrap();
        (1..=n)
            .map(|i| {
                let t = i as f64 * h;
                (d[i] - 2.0 * t.powf(2.0 - alpha) / gamma(3.0 - alpha)).abs()
            })
            .fold(0.0f64, f64::max)
    };
    let ratio = err_quadratic(1.0 / 128.0) / err_quadratic(1.0 / 256.0);
    check(
        "07 Richardson ratio",
        (1.7..=2.3).contains(&ratio),
        &format!("ratio {ratio:.2}"),
    );
    // eigenfunction residual shrink on t >= 0.1
    let sup_err = |h: f64| {
        let n = (1.0 / h).round() as usize;
        let u: Vec<f64> = (0..=n)
            .map(|i| mittag_leffler(alpha, 1.0, -(i as f64 * h).powf(alpha)).unwrap())
            .collect();
        let d = fde::cd_derivative(&u, &kq(h, n)).unwrap();
        ((n / 10)..=n)
            .map(|i| (d[i] + u[i]).abs())
            .fold(0.0f64, f64::max)
    };
    let shrink = sup_err(1.0 / 256.0) / sup_err(1.0 / 512.0);
    check(
        "07 eigenfunction shrink",
        shrink >= 1.7,
        &format!("factor {shrink:.2}"),
    );
    // constructive Riemann-Liouville / Caputo-Djrbashian relation
    let u: Vec<f64> = (0..=128)
        .map(|i| {
            let t = i as f64 / 128.0;
            0.3 * t * t * t - 1.2 * t * t + 0.5 * t + 2.0
        })
        .collect();
    let kq128 = kq(1.0 / 128.0, 128);
    let cd = fde::cd_derivative(&u, &kq128).unwrap();
    let rl = fde::rl_derivative(&u, &kq128).unwrap();
    let gap = (1..=128)
        .map(|i| {
            let tail = kq128.descriptor.levy_tail(i as f64 / 128.0).unwrap();
            (rl[i] - cd[i] - tail * u[0]).abs() / (1.0 + rl[i].abs())
        })
        .fold(0.0f64, f64::max);
    check("07 operator relation", gap <= 1e-12, &format!("gap {gap:.2e}"));
}

#[test]
fn criterion_08_double_laplace_identity() {
    // inverse of the inverse-Gaussian subordinator: the double transform of
    // its first-passage density equals f(s) / (s (y + f(s)))
    let desc = BernsteinDescriptor::inverse_gaussian(0.3, 1.0).unwrap();
    let t_max = 40.0;
    let n_cells = 800usize;
    let dt = t_max / n_cells as f64;
    let grid: Vec<f64> = (0..=n_cells).map(|i| i as f64 * dt).collect();
    let paths = 4_000usize;
    let op_steps = 60_000usize;
    let combos = [(0.5, 0.5), (0.5, 1.0), (1.0, 0.5), (1.0, 1.0)];
    // per-path Simpson integrals keep node correlations in the standard error
    let integrals: Vec<[f64; 4]> = (0..paths)
        .into_par_iter()
        .map(|p| {
            let mut rng = RngStream::new(0xac08, p as u64);
            let e = subordinators::sample_inverse_at(&desc, &grid, op_steps, &mut rng).unwrap();
            let mut out = [0.0; 4];
            for (c, &(y, s)) in combos.iter().enumerate() {
                let f = |i: usize| (-s * grid[i] - y * e[i]).exp();
                let mut acc = f(0) + f(n_cells);
                for i in 1..n_cells {
                    acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i);
                }
                out[c] = acc * dt / 3.0;
            }
            out
        })
        .collect();
    for (c, &(y, s)) in combos.iter().enumerate() {
        let vals: Vec<f64> = integrals.iter().map(|r| r[c]).collect();
        let (mean, se) = mean_with_se(&vals);
        let fs = desc.eval(s);
        let exact = fs / (s * (y + fs));
        // quadrature budget: calendar truncation at e^{-s t_max} plus the
        // operational-grid bias of the left-point inverse
        let budget = (-s * t_max).exp() / s + 8e-3;
        let err = (mean - exact).abs();
        check(
            &format!("08 double Laplace (y={y}, s={s})"),
            err < 3.0 * se + budget,
            &format!("{mean:.5} vs {exact:.5}, err {err:.1e}, 3se {:.1e}", 3.0 * se),
        );
    }
}

#[test]
fn criterion_09_special_functions() {
    // exponential reduction within 1e-10 on [-5, 5]
    let mut max_rel = 0.0f64;
    for i in -10..=10 {
        let z = i as f64 * 0.5;
        let rel = (mittag_leffler(1.0, 1.0, z).unwrap() - z.exp()).abs() / z.exp();
        max_rel = max_rel.max(rel);
    }
    check(
        "09 Mittag-Leffler exp reduction",
        max_rel < 1e-10,
        &format!("max rel {max_rel:.1e}"),
    );
    let e_half = mittag_leffler(0.5, 1.0, -1.0).unwrap();
    check(
        "09 Mittag-Leffler erfc value",
        (e_half - 0.42758357615580700442).abs() < 1e-9,
        &format!("{e_half:.12}"),
    );
    // incomplete-gamma complementarity to 1e-12 relative
    let mut worst = 0.0f64;
    for &a in &[0.1, 0.5, 0.9, 1.0, 2.5, 7.0] {
        for &x in &[1e-6, 0.1, 1.0, 5.0, 30.0] {
            let rel = (incomplete_gamma_lower(a, x) + incomplete_gamma_upper(a, x) - gamma(a))
                .abs()
                / gamma(a);
            worst = worst.max(rel);
        }
    }
    check(
        "09 incomplete gamma complementarity",
        worst <= 1e-12,
        &format!("max rel {worst:.1e}"),
    );
    // stable tail closed form
    let d = BernsteinDescriptor::stable(0.7).unwrap();
    let tail = d.levy_tail(2.0).unwrap();
    let exact = 2.0f64.powf(-0.7) / gamma(0.3);
    check(
        "09 stable tail",
        (tail - exact).abs() < 1e-14,
        &format!("{tail:.12}"),
    );
}

#[test]
fn criterion_10_determinism() {
    use std::collections::BTreeMap;
    use std::process::Command;

    let bin = env!("CARGO_BIN_EXE_gfcpp");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let cfg_path = dir.path().join("exp.cfg");
    std::fs::write(
        &cfg_path,
        format!(
            "arrival.kind = poisson\narrival.lambda = 4\njump.kind = exponential\n\
             jump.eta = 2\nrun.horizon = 1\nrun.grid = 100\nrun.paths = 300\n\
             run.seed = 9\nrun.output = {}\nreport.t = 1\n",
            out.display()
        ),
    )
    .unwrap();

    let run = |args: &[&str]| {
        let st = Command::new(bin).args(args).output().unwrap();
        assert!(
            st.status.success(),
            "command {args:?} failed: {}",
            String::from_utf8_lossy(&st.stderr)
        );
    };
    let snapshot = || -> BTreeMap<String, Vec<u8>> {
        std::fs::read_dir(&out)
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (
                    e.file_name().to_string_lossy().into_owned(),
                    std::fs::read(e.path()).unwrap(),
                )
            })
            .collect()
    };

    let cfg = cfg_path.to_str().unwrap();
    run(&["simulate", cfg, "--workers", "1"]);
    let first = snapshot();
    assert_eq!(first.len(), 301, "300 path CSVs plus the manifest");
    run(&["simulate", cfg, "--workers", "1"]);
    let second = snapshot();
    run(&["simulate", cfg, "--workers", "4"]);
    let third = snapshot();
    check(
        "10 simulate determinism across runs",
        first == second,
        "byte-identical CSVs and manifest",
    );
    check(
        "10 simulate determinism across worker counts",
        first == third,
        "workers 1 vs 4",
    );

    run(&["report", cfg, "--kind", "moments", "--workers", "1"]);
    let r1 = std::fs::read(out.join("report-moments.json")).unwrap();
    run(&["report", cfg, "--kind", "moments", "--workers", "4"]);
    let r2 = std::fs::read(out.join("report-moments.json")).unwrap();
    check("10 report determinism", r1 == r2, "workers 1 vs 4");
}
