//! End-to-end runs of the `weno3` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

struct Run {
    out: PathBuf,
    output: Output,
}

impl Run {
    fn code(&self) -> i32 {
        self.output.status.code().unwrap_or(-1)
    }

    fn stderr(&self) -> String {
        String::from_utf8_lossy(&self.output.stderr).into_owned()
    }

    fn read(&self, name: &str) -> String {
        fs::read_to_string(self.out.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
    }

    /// Lines of an artifact with the `#` header removed.
    fn body(&self, name: &str) -> Vec<String> {
        self.read(name).lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect()
    }
}

fn weno3(dir: &Path, sub: &str, config: &str, extra: &[&str]) -> Run {
    let cfg = dir.join(format!("{sub}.toml"));
    fs::write(&cfg, config).unwrap();
    let out = dir.join(format!("out-{sub}-{}", extra.join("")));
    let output = Command::new(env!("CARGO_BIN_EXE_weno3"))
        .arg(sub)
        .arg("-c")
        .arg(&cfg)
        .arg("-o")
        .arg(&out)
        .args(extra)
        .output()
        .unwrap();
    Run { out, output }
}

fn tmp() -> TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn converge_writes_the_report_columns() {
    let dir = tmp();
    let cfg = "[scheme]\ntag = \"ZES3\"\n[case]\ntag = \"SINE_CP\"\n[run]\nns = [10, 20, 40]\n";
    let run = weno3(dir.path(), "converge", cfg, &[]);
    assert_eq!(run.code(), 0, "{}", run.stderr());
    let body = run.body("convergence.csv");
    assert_eq!(body[0], "N,dt,L1_error,L1_order,Linf_error,Linf_order,status");
    assert_eq!(body.len(), 4);
    assert!(body[1].starts_with("10,") && body[1].ends_with(",ok"));
    assert!(run.read("convergence.csv").contains("# tag = \"ZES3\""));
    assert_eq!(run.body("verdict.csv")[0], "check,status,observed,expected");
}

#[test]
fn uniform_state_dump_equals_the_input() {
    let dir = tmp();
    let cfg = "[scheme]\ntag = \"ZM3\"\n[case]\ntag = \"SINE\"\nn = 32\nt_end = 0.3\nuniform = [0.7]\n";
    let run = weno3(dir.path(), "solve", cfg, &[]);
    assert_eq!(run.code(), 0, "{}", run.stderr());
    let body = run.body("field.csv");
    assert_eq!(body[0], "x,u");
    assert_eq!(body.len(), 33);
    for line in &body[1..] {
        let u: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(u, 0.7);
    }
}

#[test]
fn nullspace_basis_matches_the_fixture() {
    let dir = tmp();
    let run = weno3(dir.path(), "nullspace", "[run]\npoints = 4\n[expect]\ndimension = 1\n", &[]);
    assert_eq!(run.code(), 0, "{}", run.stderr());
    let fixture = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/tau_cp1_basis.csv")).unwrap();
    let ours = run.body("nullspace_basis.csv");
    let expected: Vec<&str> = fixture.lines().collect();
    assert_eq!(ours.len(), expected.len());
    assert_eq!(ours[0], expected[0]);
    for (a, b) in ours[1..].iter().zip(&expected[1..]) {
        let xs: Vec<f64> = a.split(',').skip(2).map(|v| v.parse().unwrap()).collect();
        let ys: Vec<f64> = b.split(',').skip(2).map(|v| v.parse().unwrap()).collect();
        for (x, y) in xs.iter().zip(&ys) {
            assert!((x - y).abs() < 1e-9, "{a} vs {b}");
        }
    }
}

#[test]
fn unknown_tag_lists_the_valid_ones() {
    let dir = tmp();
    let run = weno3(dir.path(), "solve", "[scheme]\ntag = \"WENO9\"\n[case]\ntag = \"SINE\"\n", &[]);
    assert_eq!(run.code(), 2);
    let err = run.stderr();
    assert!(err.contains("WENO9"), "{err}");
    assert!(err.contains("JS3, Z3, Z3POW"), "{err}");
}

#[test]
fn out_of_range_exponent_is_rejected() {
    let dir = tmp();
    let run = weno3(dir.path(), "solve", "[scheme]\ntag = \"PZ3\"\np = 0.9\n[case]\ntag = \"SINE\"\n", &[]);
    assert_eq!(run.code(), 2);
    assert!(run.stderr().contains("p"), "{}", run.stderr());
}

#[test]
fn failed_expectation_exits_one() {
    let dir = tmp();
    let run = weno3(dir.path(), "nullspace", "[run]\npoints = 3\n[expect]\ndimension = 1\n", &[]);
    assert_eq!(run.code(), 1);
    let verdicts = run.body("verdict.csv");
    assert!(verdicts.iter().any(|l| l.contains(",fail,")), "{verdicts:?}");
}

#[test]
fn robustness_failure_exits_two_unless_expected() {
    let dir = tmp();
    let cfg = "[scheme]\ntag = \"PPLUS3\"\n[case]\ntag = \"STRONG_SHOCK\"\n";
    let run = weno3(dir.path(), "solve", cfg, &[]);
    assert_eq!(run.code(), 2);
    let log = run.read("failure.log");
    assert!(log.contains("scheme=PPLUS3") && log.contains("reason="), "{log}");

    let dir = tmp();
    let run = weno3(dir.path(), "solve", &format!("{cfg}[expect]\nfail = true\n"), &[]);
    assert_eq!(run.code(), 0, "{}", run.stderr());
}

#[test]
fn artifacts_do_not_depend_on_the_thread_count() {
    let dir = tmp();
    let cfg = "[scheme]\ntag = \"ZM3\"\n[case]\ntag = \"DMR\"\nn = 64\nny = 16\nt_end = 0.02\n";
    let one = weno3(dir.path(), "solve", cfg, &["-j", "1"]);
    let two = weno3(dir.path(), "solve", cfg, &["-j", "2"]);
    assert_eq!(one.code(), 0, "{}", one.stderr());
    assert_eq!(two.code(), 0, "{}", two.stderr());
    for name in ["field.bin", "field.csv", "solve.csv"] {
        assert_eq!(fs::read(one.out.join(name)).unwrap(), fs::read(two.out.join(name)).unwrap(), "{name}");
    }

    let cfg = "[scheme]\ntag = \"ZES3\"\n[case]\ntag = \"SINE_CP\"\n[run]\nns = [10, 20, 40]\n";
    let one = weno3(dir.path(), "converge", cfg, &["-j", "1"]);
    let two = weno3(dir.path(), "converge", cfg, &["-j", "2"]);
    assert_eq!(one.read("convergence.csv"), two.read("convergence.csv"));
}

#[test]
fn check_prints_every_default() {
    let dir = tmp();
    let cfg = dir.path().join("c.toml");
    fs::write(&cfg, "[scheme]\ntag = \"NN3\"\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_weno3")).arg("check").arg(&cfg).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p = 0.5"), "{text}");
    assert!(text.contains("eps = 1e-40"), "{text}");
    assert!(text.contains("[run]"), "{text}");
}
