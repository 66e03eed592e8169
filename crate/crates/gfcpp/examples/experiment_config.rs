//! Parse an experiment configuration, print its content hash, and list the
//! bundled presets (the same ones exposed by `gfcpp presets`).

use gfcpp::config::{parse_config, preset, PRESET_NAMES};

fn main() -> gfcpp::Result<()> {
    let text = "\
# inverse-Gaussian clock with logarithmic jumps
arrival.kind = inverse-gaussian
arrival.lambda = 4
arrival.delta = 0.3
arrival.gamma = 1
jump.kind = logarithmic
jump.q = 0.5
run.horizon = 2
run.grid = 200
run.paths = 500
run.seed = 12345
";
    let cfg = parse_config(text)?;
    println!("parsed config with hash {}", cfg.hash());
    println!("horizon {}  grid {}  paths {}  seed {}", cfg.horizon, cfg.grid, cfg.paths, cfg.seed);

    println!("\navailable presets:");
    for name in PRESET_NAMES {
        let body = preset(name).unwrap();
        let jump = body
            .lines()
            .find(|l| l.starts_with("jump.kind"))
            .unwrap_or_default();
        println!("  {name:<28} {jump}");
    }
    Ok(())
}
