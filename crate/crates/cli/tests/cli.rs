use std::process::{Command, Output};

use cp2nine::catalog::build_cp2_9;
use cp2nine::io::read_complex;
use cp2nine::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cp2nine")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_cp29() {
    let o = run(&["verify", "cp29"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("facets=36"));
    assert!(text.contains("aut_order=54"));
}

#[test]
fn verify_solid_torus_has_six_rows() {
    let o = run(&["verify", "solid-torus", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.checks.len(), 6);
    assert!(r.all_pass(false));
}

#[test]
fn verify_trisection_table() {
    let o = run(&["verify", "trisection"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<&str> = text.lines().filter(|l| l.contains(" pass ") || l.contains(" fail ")).collect();
    assert_eq!(rows.len(), 13);
    let b14 = rows.iter().find(|l| l.starts_with("B14_facets")).unwrap();
    let cells: Vec<&str> = b14.split("  ").filter(|c| !c.trim().is_empty()).map(str::trim).collect();
    assert_eq!(cells[1], "pass");
    assert_eq!(cells[3], "13");
}

#[test]
fn verify_plmap_seeded() {
    let o = run(&["verify", "plmap", "--samples", "10000", "--tol", "1e-9", "--seed", "7"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    for row in ["continuity", "membership", "s_conjugation", "t_conjugation"] {
        assert!(text.lines().any(|l| l.starts_with(row) && l.contains(" pass ")), "{row}");
    }
}

#[test]
fn json_is_stable_and_deterministic() {
    let a = stdout(&run(&["verify", "geometry", "--format", "json", "--seed", "3", "--samples", "500"]));
    let b = stdout(&run(&["verify", "geometry", "--format", "json", "--seed", "3", "--samples", "500"]));
    assert_eq!(a, b);
    let r = Report::from_json(&a).unwrap();
    assert_eq!(r.to_json() + "\n", a);
    let keys: Vec<&str> = ["\"target\"", "\"checks\"", "\"seed\"", "\"tolerances\""].to_vec();
    let pos: Vec<usize> = keys.iter().map(|k| a.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn failures_and_unknowns_exit_one() {
    let o = run(&["verify", "plmap", "--samples", "300", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let fail = text.lines().find(|l| l.contains(" fail ")).expect("a failing row");
    assert!(fail.contains("< 0") || fail.contains("tol 0"), "{fail}");

    let o = run(&["verify", "cp29", "--flip-budget", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(" unknown "));
    let o = run(&["verify", "cp29", "--flip-budget", "0", "--allow-unknown"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "rp26", "--samples", "many"]).status.code(), Some(2));
}

#[test]
fn build_and_read_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cp29.txt");
    let o = run(&["build", "cp29", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_complex(&path).unwrap(), build_cp2_9());
    let h = stdout(&run(&["homology", path.to_str().unwrap()]));
    assert_eq!(h, "H0 = Z\nH1 = 0\nH2 = Z\nH3 = 0\nH4 = Z\neuler = 3\n");

    let b14 = dir.path().join("b14.txt");
    run(&["build", "b14", "--out", b14.to_str().unwrap()]);
    let text = std::fs::read_to_string(&b14).unwrap();
    assert_eq!(text.lines().count(), 13);
    assert!(text.contains("[14] [147]"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "# header\n1 2 3\n1 2 2\n").unwrap();
    let o = run(&["homology", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn sphere_recognition() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oct.txt");
    std::fs::write(&path, "1 3 5\n1 3 6\n1 4 5\n1 4 6\n2 3 5\n2 3 6\n2 4 5\n2 4 6\n").unwrap();
    let o = run(&["sphere", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sphere of dimension 2"));
}

#[test]
fn mesh_export() {
    let o = run(&["export-mesh", "--part", "central-torus", "--res", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 14);
    for line in text.lines() {
        let xs: Vec<f64> = line.split(' ').map(|x| x.parse().unwrap()).collect();
        assert_eq!(xs.len(), 9);
    }
}
