use std::process::{Command, Output};

fn gaussforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaussforge"))
        .args(args)
        .env_remove("GAUSSFORGE_MAX_CHORDS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn jones_prints_four_lines() {
    for code in ["O1+ U1+", ""] {
        let o = gaussforge(&["jones", code]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "1\n1\n1\n1\n");
    }
    let o = gaussforge(&["jones", "O1+ U2+ O3+ U1+ O2+ U3+", "--var", "A", "--map", "pr"]);
    assert_eq!(stdout(&o), "-A^-16 + A^-12 + A^-4\n");
    let o = gaussforge(&["jones", "O1+ U2+ O3+ U1+ O2+ U3+", "--var", "q", "--map", "pra"]);
    assert_eq!(stdout(&o), "-q^-8 + q^-6 + q^-2\n");
}

#[test]
fn jones_rejects_bad_codes() {
    let o = gaussforge(&["jones", "O1+ U1-"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("SignMismatch"), "{}", stderr(&o));
    let o = gaussforge(&["jones", "O1+ Q1+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Q1+"));
    let o = gaussforge(&["jones", "O1+ U1+", "--var", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jones_json_schema() {
    let o = gaussforge(&["jones", "O1+ O2+ U1+ U2+", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["code"], "O1+ O2+ U1+ U2+");
    for key in ["pr", "pra", "ip", "iap"] {
        assert!(v["jones"][key].is_array(), "{key}");
    }
    assert_eq!(v["jones"]["pr"], serde_json::json!([[-10, -1], [-6, 1], [-4, 1]]));
}

#[test]
fn khovanov_tables_and_euler_line() {
    let o = gaussforge(&["khovanov", ""]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("0 -1 1\n0 1 1\n").count(), 4);
    assert!(text.ends_with("euler: OK\n"));

    let o = gaussforge(&["khovanov", "O1+ U2+ O3+ U1+ O2+ U3+"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[pr]\n0 1 1\n0 3 1\n2 5 1\n2 7 1\n3 7 1\n3 9 1\n[pra]"), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("euler: OK\n"));

    let big: String = (1..=13).map(|k| format!("O{k}+ U{k}+ ")).collect();
    let o = gaussforge(&["khovanov", &big]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("TooManyChords"));
}

#[test]
fn khovanov_json_schema() {
    let o = gaussforge(&["khovanov", "O1+ U1+", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["khovanov"]["pr"]["euler"], "q^-1 + q");
    assert_eq!(
        v["khovanov"]["ip"]["homology"],
        serde_json::json!([{"i": 0, "j": -1, "dim": 1}, {"i": 0, "j": 1, "dim": 1}])
    );
    assert_eq!(v["euler_check"], "OK");
}

#[test]
fn max_chords_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_gaussforge"))
        .args(["jones", "O1+ U1+ O2+ U2+"])
        .env("GAUSSFORGE_MAX_CHORDS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("TooManyChords"));
}

#[test]
fn verify_passes_on_equivalent_diagrams() {
    let o = gaussforge(&["verify", "O1+ O2+ U1+ U2+", "--moves", "30", "--seed", "7", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS"));
    let o = gaussforge(&["verify", "", "--moves", "50", "--seed", "1", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = gaussforge(&["verify", "O1+ U1+", "--moves", "10", "--seed", "3", "--samples", "3", "--kh"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Jones and Khovanov"));
}

#[cfg(debug_assertions)]
#[test]
fn verify_catches_a_corrupted_r2_move() {
    let o = gaussforge(&[
        "verify",
        "O1+ O2+ U1+ U2+",
        "--moves",
        "30",
        "--seed",
        "7",
        "--samples",
        "10",
        "--inject-r2-fault",
    ]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("R2+"), "violating sequence is printed");
}

#[test]
fn search_lists_codes() {
    let o = gaussforge(&["search", "--chords", "1", "--target-pr", "1"]);
    assert_eq!(o.status.code(), Some(0));
    // sorted by chord count, then by code
    assert_eq!(stdout(&o), "\nO1+ U1+\nO1- U1-\nU1+ O1+\nU1- O1-\n");
    let o = gaussforge(&["search", "--chords", "2", "--target-pr", "t + t^3/2 - t^5/2", "--target-ip", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "O1+ U2+ U1+ O2+"), "{}", stdout(&o));
    let o = gaussforge(&["search", "--chords", "6", "--target-pr", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("TooLarge"));
}
