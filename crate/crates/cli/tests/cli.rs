//! End-to-end tests of the `rankgraph` binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rankgraph"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .env_remove("RANKGRAPH_SEED")
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn zoo_list_names_every_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["zoo-list"], dir.path());
    assert_ok(&out);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "spatial",
        "nested",
        "star",
        "perlin",
        "fractal-hierarchy",
        "watts-strogatz",
        "custom",
    ] {
        assert!(text.lines().any(|l| l == name), "missing {name}");
    }
}

#[test]
fn generate_is_deterministic_and_epsilon_zero_has_exactly_m_edges() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "generate",
        "--structure",
        "nested",
        "--n",
        "128",
        "--m",
        "512",
        "--epsilon",
        "0",
        "--seed",
        "3",
        "--out",
        "a.edges",
    ];
    assert_ok(&run(&args, dir.path()));
    let mut again = args;
    again[args.len() - 1] = "b.edges";
    assert_ok(&run(&again, dir.path()));
    let a = std::fs::read(dir.path().join("a.edges")).unwrap();
    let b = std::fs::read(dir.path().join("b.edges")).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 512);
}

#[test]
fn manifest_replay_reproduces_bytes() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &[
            "generate",
            "--structure",
            "spatial",
            "--n",
            "64",
            "--k",
            "8",
            "--epsilon",
            "0.3",
            "--seed",
            "11",
            "--out",
            "a.edges",
        ],
        dir.path(),
    ));
    assert_ok(&run(
        &[
            "generate",
            "--config",
            "a.edges.manifest.json",
            "--out",
            "replay.edges",
        ],
        dir.path(),
    ));
    let a = std::fs::read(dir.path().join("a.edges")).unwrap();
    let b = std::fs::read(dir.path().join("replay.edges")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // Two density specifiers.
    let out = run(
        &[
            "generate",
            "--structure",
            "nested",
            "--n",
            "10",
            "--m",
            "5",
            "--k",
            "2",
            "--epsilon",
            "0",
            "--out",
            "x",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));

    // Positions row count mismatch.
    std::fs::write(dir.path().join("pos.csv"), "0.1,0.2\n0.3,0.4\n").unwrap();
    let out = run(
        &[
            "generate",
            "--structure",
            "spatial",
            "--n",
            "12",
            "--m",
            "5",
            "--epsilon",
            "0",
            "--positions",
            "pos.csv",
            "--out",
            "x",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("12"));

    // Infeasible edge count.
    let out = run(
        &[
            "generate",
            "--structure",
            "nested",
            "--n",
            "4",
            "--m",
            "100",
            "--epsilon",
            "0",
            "--out",
            "x",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));

    // No partial outputs were left behind.
    assert!(!dir.path().join("x").exists());
}

#[test]
fn custom_costs_missing_pair_is_named() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("costs.csv"), "0,1,1.0\n0,2,2.0\n").unwrap();
    let out = run(
        &[
            "generate",
            "--structure",
            "custom",
            "--n",
            "3",
            "--m",
            "1",
            "--epsilon",
            "0",
            "--costs",
            "costs.csv",
            "--out",
            "x",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(1, 2)"));
}

#[test]
fn prob_curve_mass_and_uniform_row() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &["prob-curve", "--epsilons", "0,0.5,1", "--out", "curve.csv"],
        dir.path(),
    ));
    let text = std::fs::read_to_string(dir.path().join("curve.csv")).unwrap();
    let l = 512 * 511 / 2;
    let uniform = 128.0 / l as f64;
    let mut sums = std::collections::BTreeMap::<String, f64>::new();
    for line in text.lines().skip(1) {
        let mut parts = line.split(',');
        let eps = parts.next().unwrap().to_string();
        let _r = parts.next().unwrap();
        let p: f64 = parts.next().unwrap().parse().unwrap();
        *sums.entry(eps.clone()).or_default() += p;
        if eps == "1" {
            assert_eq!(p, uniform);
        }
    }
    for (eps, sum) in sums {
        assert!((sum - 128.0).abs() / 128.0 < 1e-9, "eps {eps}: sum {sum}");
    }
    assert!(dir.path().join("curve.csv.cumulative.csv").exists());
}

#[test]
fn env_seed_sets_the_default() {
    let dir = tempfile::tempdir().unwrap();
    let gen = |out: &str, env: Option<&str>| {
        let mut cmd = bin();
        cmd.args([
            "generate",
            "--structure",
            "nested",
            "--n",
            "64",
            "--m",
            "200",
            "--epsilon",
            "0.5",
            "--out",
            out,
        ])
        .current_dir(dir.path());
        match env {
            Some(v) => cmd.env("RANKGRAPH_SEED", v),
            None => cmd.env_remove("RANKGRAPH_SEED"),
        };
        assert!(cmd.output().unwrap().status.success());
        std::fs::read(dir.path().join(out)).unwrap()
    };
    let default = gen("d.edges", None);
    let seeded = gen("s.edges", Some("42"));
    let seeded_again = gen("s2.edges", Some("42"));
    assert_eq!(seeded, seeded_again);
    assert_ne!(default, seeded);
}

#[test]
fn rank_matrix_pgm_contract() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &[
            "rank-matrix",
            "--structure",
            "nested",
            "--n",
            "16",
            "--m",
            "32",
            "--out",
            "m.pgm",
        ],
        dir.path(),
    ));
    let bytes = std::fs::read(dir.path().join("m.pgm")).unwrap();
    assert!(bytes.starts_with(b"P5\n16 16\n255\n"));
    assert_eq!(bytes.len(), b"P5\n16 16\n255\n".len() + 256);
}

#[test]
fn smallworld_all_zoo_writes_one_csv_per_structure() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(
        &[
            "smallworld",
            "--all-zoo",
            "true",
            "--n",
            "40",
            "--m",
            "80",
            "--runs",
            "1",
            "--epsilons",
            "0,1",
            "--out",
            "zoo",
        ],
        dir.path(),
    ));
    for name in ["nested", "star", "watts-strogatz", "fractal-hierarchy"] {
        let path = dir.path().join("zoo").join(format!("{name}.csv"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 3, "{name}");
        assert!(text.starts_with("structure,n,m,epsilon,"));
    }
    assert!(dir.path().join("zoo").join("manifest.json").exists());
}
