//! Drive a study from config text, as the `weno3` binary does.

use weno3z::config::validate_config;
use weno3z::runner::{run, RunManifest, Subcommand};

const CONFIG: &str = r#"
[case]
tag = "SINE_CP"
cfl = 0.25

[scheme]
tag = "NN3"

[run]
ns = [80, 160, 320, 640]

[expect]
linf_order_max = 2.8
"#;

fn main() {
    let cfg = validate_config(CONFIG, false).unwrap();
    println!("normalized config:\n{}", cfg.to_text());

    let dir = std::env::temp_dir().join("weno3z-config-runner");
    std::fs::write(dir.with_extension("toml"), CONFIG).unwrap();
    let manifest = RunManifest {
        subcommand: Subcommand::Converge,
        config: Some(dir.with_extension("toml")),
        out_dir: dir.clone(),
        seed: 1,
        threads: 0,
        full_scale: false,
    };
    let summary = run(&manifest).unwrap();
    for v in &summary.verdicts {
        println!("{v}");
    }
    println!("exit status {}, artifacts:", summary.status.code());
    for a in &summary.artifacts {
        println!("  {}", a.display());
    }
}
