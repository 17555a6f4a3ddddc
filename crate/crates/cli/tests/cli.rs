use std::process::{Command, Output};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .env_remove("QSCHUR_MAX_CELLS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qschur(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn expand_examples() {
    assert_eq!(
        stdout(&["expand", "--basis", "F", "(1,3)"]),
        "F(1,3) + F(2,2)"
    );
    assert_eq!(
        stdout(&["expand", "--basis", "F", "1,3"]),
        "F(1,3) + F(2,2)"
    );
    assert_eq!(stdout(&["expand", "--basis", "M", "()"]), "1");
    assert_eq!(
        stdout(&["expand", "--basis", "M", "(1,2)"]),
        "M(1,2) + M(1,1,1)"
    );
}

#[test]
fn pieri_and_product() {
    assert_eq!(
        stdout(&["pieri-row", "(1,3)", "1"]),
        "S(1,4) + S(2,3) + S(1,3,1) + S(1,1,3)"
    );
    assert_eq!(
        stdout(&["pieri-col", "(1,3)", "1"]),
        stdout(&["product", "(1)", "(1,3)"])
    );
    let sq = stdout(&["product", "(2,1)", "(2,1)"]);
    assert!(
        sq.contains("2S(3,2,1)") && sq.contains(" - S(1,4,1)"),
        "{sq}"
    );
}

#[test]
fn matrix_and_in_s() {
    let m = stdout(&["matrix", "--basis", "F", "--n", "4"]);
    assert_eq!(m.lines().count(), 8);
    assert!(m.starts_with("(4)"));
    let dir = std::env::temp_dir().join(format!("qschur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = dir.join("e.txt");
    std::fs::write(&text, "M(2,1) + M(1,2) + 2M(1,1,1)\n").unwrap();
    assert_eq!(stdout(&["in-s", text.to_str().unwrap()]), "S(2,1) + S(1,2)");
    let json = dir.join("e.json");
    let e = stdout(&[
        "expand",
        "--basis",
        "F",
        "(1,3)",
        "--format",
        "json",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(e.is_empty());
    assert_eq!(stdout(&["in-s", json.to_str().unwrap()]), "S(1,3)");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn macdonald_verbs() {
    assert_eq!(
        stdout(&["atom", "--shape", "(1,0,2)"]),
        stdout(&["atoms", "--shape", "(1,0,2)"])
    );
    assert_eq!(
        stdout(&[
            "e-poly",
            "--shape",
            "(0,2)",
            "--basement",
            "const",
            "--spec",
            "q=0,t=0"
        ]),
        "x1^2 + x1*x2 + x2^2"
    );
    assert_eq!(
        stdout(&["l-alpha", "--shape", "(1,3)", "--spec", "t=0"]),
        stdout(&["expand", "--basis", "M", "(1,3)"])
    );
    let hl = stdout(&["hl-p", "--shape", "(2)", "--vars", "2"]);
    assert!(hl.contains("(1 - t)*x1*x2"), "{hl}");
    let j = stdout(&["j-fund", "--shape", "(1)"]);
    assert!(j.ends_with("F(1)"), "{j}");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["product", "(2,1)", "(1,1)", "--format", "json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["basis"], "S");
}

#[test]
fn verify_reports() {
    let out = qschur(&["verify", "pieri", "--max-size", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "pieri");
    assert!(v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["passed"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(
        qschur(&["expand", "--basis", "F", "(1,x)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qschur(&["expand", "--basis", "F", "(1,0)"]).status.code(),
        Some(2)
    );
    assert_eq!(qschur(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        qschur(&["expand", "--basis", "S", "(1)"]).status.code(),
        Some(2)
    );
    assert_eq!(qschur(&["verify", "nope"]).status.code(), Some(2));
    // guard
    assert_eq!(qschur(&["hl-p", "--shape", "(9)"]).status.code(), Some(1));
    assert_eq!(
        qschur(&["e-poly", "--shape", "(1,1,1,1,1,1,1)"])
            .status
            .code(),
        Some(1)
    );
    // domain error
    assert_eq!(
        qschur(&["hl-p", "--shape", "(1,1)", "--vars", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn guard_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(["hl-p", "--shape", "(1,1)", "--vars", "2"])
        .env("QSCHUR_MAX_CELLS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = qschur(&["hl-p", "--shape", "(1,1)", "--vars", "7", "--no-guard"]);
    assert!(out.status.success());
}
