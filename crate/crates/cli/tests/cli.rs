use std::path::Path;
use std::process::{Command, Output};

fn hpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hpa"))
        .args(args)
        .output()
        .expect("hpa runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn export(dir: &Path) {
    let o = hpa(&["examples", "export", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exported_presentations_check() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    for name in [
        "sweedler4.json",
        "z2-group-algebra.json",
        "s3-group-algebra.json",
        "dual-numbers.json",
    ] {
        let o = hpa(&["check", dir.path().join(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
}

#[test]
fn corrupted_multiplication_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let path = dir.path().join("sweedler4.json");
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // c·c = 1 becomes c·c = 1 + x
    v["mult"][1][1][2] = serde_json::json!("1");
    std::fs::write(&path, v.to_string()).unwrap();
    let o = hpa(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness ("), "{}", stdout(&o));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"kind\": \"hopf\"").unwrap();
    assert_eq!(
        hpa(&["check", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        hpa(&["check", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hpa(&["classify", "--example", "no-such"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hpa(&["classify", "--example", "trivial", "--field", "fp:4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn classify_reports_flags() {
    let o = hpa(&["classify", "--example", "sweedler-on-k", "--alpha", "1/2"]);
    assert!(stdout(&o).starts_with("partial: yes, weak: no, lax: yes, comodule: no"));
    let o = hpa(&["classify", "--example", "trivial", "--dim", "3"]);
    assert!(stdout(&o).starts_with("partial: yes, weak: yes, lax: yes, comodule: yes"));
    let o = hpa(&["classify", "--example", "weak-zero"]);
    let out = stdout(&o);
    assert!(out.contains("weak: yes") && out.contains("partial: no"));
}

#[test]
fn galois_verdict_lines() {
    let o = hpa(&["galois", "--example", "regular-z2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("can: bijective, theta: bijective, morita: strict, GALOIS: yes"));
    let o = hpa(&["galois", "--example", "sweedler-on-k", "--alpha", "0"]);
    assert!(stdout(&o).contains("GALOIS: no"));
    // the weak zero coaction is not partial
    assert_eq!(
        hpa(&["galois", "--example", "weak-zero"]).status.code(),
        Some(1)
    );
}

#[test]
fn frobenius_identities_and_hypotheses() {
    let o = hpa(&["frobenius", "--example", "partial-z2-on-k2"]);
    assert_eq!(o.status.code(), Some(0));
    for id in ["commute", "bimodule", "counit-like"] {
        assert!(
            stdout(&o)
                .lines()
                .any(|l| l.contains(id) && l.ends_with("ok")),
            "{id}"
        );
    }
    assert_eq!(
        hpa(&["frobenius", "--example", "noncentral-t2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_reports_share_a_schema() {
    for args in [
        &["classify", "--example", "regular-z3", "--json"][..],
        &["dualize", "--example", "sweedler-on-k", "--json"],
        &["smash", "--example", "partial-z3-on-k2", "--json"],
        &["koppinen", "--example", "z2-integral-on-k", "--json"],
        &[
            "morita",
            "--example",
            "regular-z2",
            "--field",
            "fp:5",
            "--json",
        ],
    ] {
        let o = hpa(args);
        assert!(o.status.success(), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["kind"], args[0]);
        assert_eq!(v["ok"], true);
        assert!(v.get("result").is_some());
    }
    let o = hpa(&["galois", "--example", "weak-zero", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["exit"], 1);
}

#[test]
fn map_files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let map = dir.path().join("regular-z3.map.json");
    let before = std::fs::read_to_string(&map).unwrap();
    let o = hpa(&["galois", map.to_str().unwrap()]);
    assert!(stdout(&o).contains("GALOIS: yes"));
    let m = hopf_partial::mapfile::MapFile::load(&map).unwrap();
    m.save(&map).unwrap();
    assert_eq!(std::fs::read_to_string(&map).unwrap(), before);
    // a file over Q refuses to be read as F_5
    assert_eq!(
        hpa(&["classify", map.to_str().unwrap(), "--field", "fp:5"])
            .status
            .code(),
        Some(2)
    );
    let o = hpa(&[
        "check",
        dir.path().join("partial-s3.map.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn examples_list_names_every_builtin() {
    let out = stdout(&hpa(&["examples", "list"]));
    for name in hopf_partial::examples::COACTION_EXAMPLES
        .iter()
        .chain(hopf_partial::examples::ACTION_EXAMPLES.iter())
    {
        assert!(out.lines().any(|l| l.starts_with(name)), "{name}");
    }
}
