use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn wpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpi"))
        .args(args)
        .output()
        .expect("wpi runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wpi(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn paths_and_generators() {
    let tree = fixture("tree.json");
    assert_eq!(
        stdout(&["paths", "--graph", &tree, "--r", "3"]),
        "1-2-3-4\n1-2-3-6\n2-3-4-5\n5-4-3-6\n"
    );
    assert_eq!(
        stdout(&["gens", "--graph", &tree, "--r", "3", "--f", "max"]),
        "(X1^2*X2^2*X3^3*X6^3, X1^2*X2^2*X3^2*X4^2, X2*X3^2*X4^2*X5^2, X3^3*X4^2*X5^2*X6^3)\n"
    );
    assert_eq!(
        stdout(&["paths", "--graph", &tree, "--r", "6", "--format", "json"]),
        "{\"paths\":[]}\n"
    );
    assert_eq!(stdout(&["gens", "--graph", &tree, "--r", "6"]), "(0)\n");
}

#[test]
fn text_and_json_graph_files_agree() {
    for cmd in ["gens", "decompose", "covers"] {
        assert_eq!(
            stdout(&[cmd, "--graph", &fixture("tree.json"), "--r", "3"]),
            stdout(&[cmd, "--graph", &fixture("tree.txt"), "--r", "3"])
        );
    }
}

#[test]
fn decompose_and_covers_correspond() {
    let tree = fixture("tree.json");
    let comps = stdout(&["decompose", "--graph", &tree, "--r", "3"]);
    let covers = stdout(&["covers", "--graph", &tree, "--r", "3"]);
    assert_eq!(comps.lines().count(), 9);
    for (p, c) in comps.lines().zip(covers.lines()) {
        let from_component: Vec<String> = p
            .trim_matches(|ch| ch == '(' || ch == ')')
            .split(", ")
            .map(|x| {
                let (var, exp) = x.split_once('^').unwrap_or((x, "1"));
                format!("v{}^{exp}", &var[1..])
            })
            .collect();
        assert_eq!(format!("{{{}}}", from_component.join(", ")), c);
    }
}

#[test]
fn unmixed_dim_and_cm() {
    let tree = fixture("tree.json");
    assert_eq!(
        stdout(&["unmixed", "--graph", &tree, "--r", "3"]),
        "false\n"
    );
    assert_eq!(stdout(&["dim", "--graph", &tree, "--r", "3"]), "5\n");
    let k4 = fixture("k4.json");
    assert_eq!(stdout(&["unmixed", "--graph", &k4, "--r", "2"]), "true\n");
    let cm = stdout(&["cm", "--graph", &k4, "--r", "2"]);
    assert_eq!(
        cm.lines().next(),
        Some("not Cohen-Macaulay; witness triple (1,2,3)")
    );
    let witness: serde_json::Value = serde_json::from_str(cm.lines().nth(1).unwrap()).unwrap();
    assert_eq!(witness["kind"], "failing_triple");
    assert_eq!(
        stdout(&["cm", "--graph", &k4, "--r", "2", "--oracle"]),
        "not Cohen-Macaulay; Reisner criterion over Q\n"
    );
    let json = stdout(&[
        "cm",
        "--graph",
        &fixture("g_prime.json"),
        "--r",
        "6",
        "--format",
        "json",
    ]);
    assert!(json.starts_with("{\"is_cm\":true"));
}

#[test]
fn polarize_and_colon() {
    let path = fixture("k4.json");
    let pol = stdout(&["polarize", "--graph", &path, "--r", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&pol).unwrap();
    assert_eq!(v["variables"].as_array().unwrap().len(), 8);
    assert_eq!(v["generators"].as_array().unwrap().len(), 6);
    let text = stdout(&["polarize", "--graph", &path, "--r", "2"]);
    assert!(text.contains("X1_1*X2_1*X2_2*X3_1*X3_2"));
    assert_eq!(
        stdout(&[
            "colon",
            "--graph",
            &fixture("tree.json"),
            "--r",
            "3",
            "--by",
            "X3^2"
        ]),
        "(X1^2*X2^2*X3*X6^3, X1^2*X2^2*X4^2, X2*X4^2*X5^2, X3*X4^2*X5^2*X6^3)\n"
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "decompose",
        "--graph",
        &fixture("g_prime.json"),
        "--r",
        "2",
        "--format",
        "json",
    ];
    assert_eq!(wpi(&args).stdout, wpi(&args).stdout);
}

#[test]
fn exit_codes() {
    let c5 = fixture("c5.json");
    let out = wpi(&["cm", "--graph", &c5, "--r", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no characterization available"));

    let tree = fixture("tree.json");
    assert_eq!(
        wpi(&["cm", "--graph", &tree, "--r", "2", "--f", "min"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wpi(&["gens", "--graph", &tree, "--r", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wpi(&["gens", "--graph", &tree, "--r", "2", "--f", "sum"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wpi(&["colon", "--graph", &tree, "--r", "2", "--by", "X9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wpi(&["gens", "--graph", "/no/such/file", "--r", "2"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 3, \"edges\": [[1, 4, 1]]}").unwrap();
    let out = wpi(&["gens", "--graph", bad.to_str().unwrap(), "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(&bad, "{\"n\": 3, \"edges\": [[1, 2, 0]]}").unwrap();
    assert_eq!(
        wpi(&["gens", "--graph", bad.to_str().unwrap(), "--r", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn size_guard_from_environment() {
    let k4 = fixture("k4.json");
    let out = Command::new(env!("CARGO_BIN_EXE_wpi"))
        .args(["cm", "--graph", &k4, "--r", "2", "--oracle"])
        .env("WPI_SIZE_GUARD", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));
    let out = Command::new(env!("CARGO_BIN_EXE_wpi"))
        .args(["cm", "--graph", &k4, "--r", "2", "--oracle"])
        .env("WPI_SIZE_GUARD", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
