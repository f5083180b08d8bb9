use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lorentz-squeeze"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file present")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn matches_golden_files() {
    let cases: [(&[&str], &str); 6] = [
        (&["algebra-check"], "algebra_check.csv"),
        (&["algebra-check", "--corrupt"], "algebra_check_corrupt.csv"),
        (
            &["contract", "--eta-max", "10", "--steps", "10"],
            "contract.csv",
        ),
        (
            &[
                "contract",
                "--eta-max",
                "10",
                "--steps",
                "10",
                "--format",
                "json",
            ],
            "contract.json",
        ),
        (&["coherence", "--energy", "900"], "coherence.csv"),
        (
            &["coherence", "--energy", "900", "--format", "json"],
            "coherence.json",
        ),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(&run(args)), golden(file), "{args:?}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &[
            "squeeze-plot",
            "--n",
            "2",
            "--eta",
            "0.7",
            "--grid",
            "-4:4:21",
        ][..],
        &[
            "squeeze-plot",
            "--n",
            "0",
            "--eta",
            "1",
            "--grid",
            "-6:6:17",
            "--format",
            "json",
        ][..],
        &["fourier-check", "--eta", "0.5", "--format", "json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().expect("exit code");
    assert_eq!(code(&["algebra-check"]), 0);
    assert_eq!(code(&["algebra-check", "--corrupt"]), 1);
    assert_eq!(code(&["fourier-check", "--eta", "0"]), 0);
    // too narrow to hold the norm
    assert_eq!(
        code(&["fourier-check", "--eta", "1", "--grid", "-2:2:17"]),
        1
    );
    assert_eq!(code(&["contract", "--eta-max", "1"]), 2);
    assert_eq!(code(&["contract", "--eta-max", "1", "--steps", "0"]), 2);
    assert_eq!(code(&["coherence", "--energy", "0.5"]), 2);
    assert_eq!(code(&["squeeze-plot", "--n", "40", "--eta", "0"]), 2);
    assert_eq!(
        code(&[
            "squeeze-plot",
            "--n",
            "0",
            "--eta",
            "0",
            "--grid",
            "1:-1:20"
        ]),
        2
    );
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn corrupt_flag_names_failures() {
    let text = stdout(&run(&["algebra-check", "--corrupt"]));
    let failing: Vec<&str> = text.lines().filter(|l| l.ends_with(",false")).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|l| l.contains("[K1,K2] = -iJ3")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("\"[J1,J2] = iJ3\"") && l.ends_with(",true")));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("lorentz-squeeze-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coherence.csv");
    let out = run(&[
        "coherence",
        "--energy",
        "900",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("coherence.csv")
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_documents_have_fixed_sections() {
    for args in [
        &["algebra-check", "--format", "json"][..],
        &[
            "contract",
            "--eta-max",
            "5",
            "--steps",
            "5",
            "--format",
            "json",
        ][..],
        &[
            "squeeze-plot",
            "--n",
            "1",
            "--eta",
            "0.5",
            "--grid",
            "-3:3:16",
            "--format",
            "json",
        ][..],
        &["fourier-check", "--eta", "0.5", "--format", "json"][..],
        &["coherence", "--energy", "100", "--format", "json"][..],
    ] {
        let text = stdout(&run(args));
        assert!(text.ends_with("}\n"));
        let doc: Value = serde_json::from_str(&text).expect("valid json");
        let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["params", "results", "residuals"], "{args:?}");
        for value in doc["residuals"].as_object().unwrap().values() {
            assert!(value.is_number(), "{args:?}: {value}");
        }
    }
}

#[test]
fn squeeze_plot_layout() {
    let text = stdout(&run(&[
        "squeeze-plot",
        "--n",
        "0",
        "--eta",
        "1",
        "--grid",
        "-6:6:21",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "section,x1,x2,value");
    let count = |section: &str| {
        lines
            .iter()
            .filter(|l| l.starts_with(&format!("{section},")))
            .count()
    };
    assert_eq!(count("space_time"), 21 * 21);
    assert_eq!(count("momentum_energy"), 21 * 21);
    assert_eq!(count("semi_axes"), 1);
    let spread: Vec<f64> = lines
        .iter()
        .find(|l| l.starts_with("space_spread,"))
        .unwrap()
        .split(',')
        .skip(1)
        .map(|x| x.parse().unwrap())
        .collect();
    assert!((spread[2] - 1f64.exp().powi(2)).abs() < 1e-6);
}

#[test]
fn default_plot_grid() {
    let text = stdout(&run(&[
        "squeeze-plot",
        "--n",
        "0",
        "--eta",
        "0.5",
        "--format",
        "json",
    ]));
    let doc: Value = serde_json::from_str(&text).unwrap();
    let grid = &doc["params"]["grid"];
    assert_eq!(grid["n_z"], 61);
    assert!((grid["z_max"].as_f64().unwrap() - 3.0 * 0.5f64.exp()).abs() < 1e-9);
}

#[test]
fn mass_default_is_documented() {
    let help = stdout(&run(&["coherence", "--help"]));
    assert!(help.contains("0.938"));
}
