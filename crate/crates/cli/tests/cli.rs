use std::process::{Command, Output};

fn zeroweight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeroweight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn zero_dim_of_the_adjoint_a2() {
    let o = zeroweight(&["zero-dim", "A2", "1", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn zero_dim_in_epsilon_coordinates() {
    let o = zeroweight(&["zero-dim", "A3", "--eps", "2", "1", "-1", "-2"]);
    assert_eq!(stdout(&o).trim(), "7");
    let o = zeroweight(&["zero-dim", "A2", "--eps", "1", "0", "-1"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn gamma_g2() {
    let o = zeroweight(&["gamma", "G2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("index 12"), "{s}");
    assert!(s.contains("basis 6α1, 2α2"), "{s}");
}

#[test]
fn chambers_a3_lists_three_walls() {
    let o = zeroweight(&["chambers", "A3"]);
    let s = stdout(&o);
    assert!(s.starts_with("A3: 3 walls, 4 chambers"), "{s}");
    for w in ["(λ2 = 0)", "(λ3 = 0)", "(λ2 + λ3 = 0)"] {
        assert!(s.contains(w), "{w} missing from {s}");
    }
}

#[test]
fn chamber_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = zeroweight(&["chambers", "A3", "--json", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["chambers"].as_array().unwrap().len(), 4);
    assert_eq!(v["walls"][0]["normal"], serde_json::json!([1, -2, -1]));
}

#[test]
fn multiplicity_queries() {
    let o = zeroweight(&["mult", "A2", "1", "1", "--mu", "0", "0"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = zeroweight(&["mult", "A2", "1", "1", "--mu", "-1", "-1"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = zeroweight(&["mult", "A2", "1", "1", "--csv", "-"]);
    assert_eq!(
        stdout(&o),
        "weight,multiplicity,orbit_size\n1;1,1,6\n0;0,2,1\n"
    );
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(zeroweight(&["bogus"]).status.code(), Some(2));
    assert_eq!(zeroweight(&["zero-dim", "X9", "1"]).status.code(), Some(2));
    // α1 is not dominant for A2.
    assert_eq!(
        zeroweight(&["zero-dim", "A2", "1", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(zeroweight(&["zero-dim", "A2", "1"]).status.code(), Some(2));
    assert_eq!(
        zeroweight(&["verify-paper", "--section", "7"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn rank_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_zeroweight"))
        .args(["chambers", "A3"])
        .env("ZEROWEIGHT_RANK_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank cap"));
}

#[test]
fn fit_writes_verified_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let o = zeroweight(&[
        "fit",
        "C2",
        "--jobs",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let mut files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 2);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&files[0]).unwrap()).unwrap();
    assert_eq!(v["status"], "verified");
    assert_eq!(v["degree_bound"], 2);
    assert_eq!(v["coset"], serde_json::json!([0, 0]));
    assert_eq!(v["terms"][0]["coeff"], "1/1");
}

#[test]
fn verify_paper_section_five_passes() {
    let o = zeroweight(&["verify-paper", "--section", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(
        s.lines().filter(|l| l.starts_with("PASS")).count(),
        3,
        "{s}"
    );
}
