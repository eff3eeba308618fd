use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bei")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = bei(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n') && !text.contains('\r'));
    serde_json::from_str(&text).unwrap()
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn analyze_examples() {
    let a = &json(&["analyze", "corpus:fig2"])["analysis"];
    assert_eq!(a["chordal"]["result"], "chordal");
    assert_eq!(a["claw_free"], true);
    assert_eq!(a["closed"]["result"], "not_closed");

    let a = &json(&["analyze", "corpus:claw"])["analysis"];
    assert_eq!(a["claw_free"], false);
    assert_eq!(a["claw"]["center"], 1);

    let a = &json(&["analyze", "corpus:c4"])["analysis"];
    assert_eq!(a["chordal"]["result"], "not_chordal");
    assert_eq!(a["chordal"]["witness"]["cycle"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn classify_examples() {
    for (name, status) in [("fig1", "koszul"), ("fig2", "not_koszul"), ("k5", "koszul")] {
        let c = &json(&["classify", &format!("corpus:{name}")])["classification"];
        assert_eq!(c["verdict"]["status"], status, "{name}");
        assert_eq!(c["certificates_verified"], true);
    }
}

#[test]
fn gb_examples() {
    let g = &json(&["gb", "corpus:path3", "--order", "lex"])["groebner"];
    assert_eq!(g["quadratic"], true);
    let g = &json(&["gb", "corpus:c4"])["groebner"];
    assert_eq!(g["quadratic"], false);
    assert_eq!(g["max_degree"], 3);
    let g = &json(&["gb", "corpus:k2", "--field", "QQ", "--hilbert-degree", "3"])["groebner"];
    assert_eq!(g["generators"], serde_json::json!(["x1*y2 - x2*y1"]));
    assert_eq!(g["hilbert"], serde_json::json!([1, 4, 9, 16]));
    let g = &json(&["gb", "corpus:c4", "--labeling", "1,3,2,4"])["groebner"];
    assert_eq!(g["quadratic"], false);
}

#[test]
fn betti_examples() {
    let t = &json(&["betti", "corpus:claw", "--mode", "tor", "--imax", "3", "--jmax", "6"])["table"];
    assert_eq!(t["kind"], "tor");
    assert_eq!(t["trunc"], serde_json::json!([3, 6]));
    assert_eq!(t["entries"][4], serde_json::json!([3, 4, 1]));

    let t = &json(&["betti", "corpus:c5", "--mode", "betti_S", "--imax", "2", "--jmax", "6"])["table"];
    assert!(t["entries"].as_array().unwrap().contains(&serde_json::json!([2, 5, 4])));

    let args = ["betti", "corpus:fig2", "--mode", "module", "--gens", "x5,x6,y5,y6", "--imax", "4", "--jmax", "8"];
    let t = &json(&args)["table"];
    assert_eq!(t["kind"], "module_over_A");
    assert!(t["entries"].as_array().unwrap().contains(&serde_json::json!([4, 6, 1])));
}

#[test]
fn corpus_commands() {
    let out = bei(&["corpus", "emit", "fig1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n 6\n1 2\n1 3\n1 4\n2 3\n2 5\n3 6\n");
    let out = String::from_utf8(bei(&["corpus", "emit", "line2d-4"]).stdout).unwrap();
    assert_eq!(out.lines().count(), 10);
    let list = String::from_utf8(bei(&["corpus", "list"]).stdout).unwrap();
    assert!(list.lines().any(|l| l.starts_with("bowtie")));

    let all = json(&["corpus", "run-all"]);
    let c = &all["cross_checks"];
    assert_eq!(c["closed_vs_quadratic_agreements"], c["within_labeling_bound"]);
    assert_eq!(c["certificates_verified"], c["graphs"]);
    assert_eq!(c["disagreements"], serde_json::json!([]));
    assert_eq!(all["rows"].as_array().unwrap().len() as u64, c["graphs"].as_u64().unwrap());
}

#[test]
fn reports_are_deterministic() {
    let runs: [&[&str]; 5] = [
        &["analyze", "corpus:fig2"],
        &["classify", "corpus:glued-k3-line2d2-triple"],
        &["gb", "corpus:c5"],
        &["betti", "corpus:fig1", "--imax", "2", "--jmax", "4"],
        &["corpus", "run-all"],
    ];
    for args in runs {
        let a = bei(args).stdout;
        let b = bei(args).stdout;
        let (va, vb): (Value, Value) = (serde_json::from_slice(&a).unwrap(), serde_json::from_slice(&b).unwrap());
        let (ca, cb) = (without_timing(va).to_string(), without_timing(vb).to_string());
        assert_eq!(ca, cb, "{args:?}");
    }
}

#[test]
fn files_and_stdin() {
    let dir = std::env::temp_dir().join(format!("bei-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.graph");
    std::fs::write(&path, "# a path\n1 2\n2 3\n").unwrap();
    let v = json(&["classify", path.to_str().unwrap()]);
    assert_eq!(v["input"]["n"], 3);
    assert_eq!(v["classification"]["verdict"]["status"], "koszul");

    let mut child = Command::new(env!("CARGO_BIN_EXE_bei"))
        .args(["analyze", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1 2\n2 3\n3 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["analysis"]["clique_complex"]["dim"], 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    // a negative verdict is still a successful run
    assert!(bei(&["classify", "corpus:c4"]).status.success());

    let dir = std::env::temp_dir().join(format!("bei-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "1 2\n3 3\n").unwrap();
    let out = bei(&["analyze", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    std::fs::remove_dir_all(dir).unwrap();

    for args in [
        &["analyze", "/nonexistent/x.graph"][..],
        &["gb", "corpus:c4", "--order", "bogus"],
        &["gb", "corpus:c4", "--labeling", "1,1,2,3"],
        &["betti", "corpus:fig2", "--guard", "100"],
        &["betti", "corpus:fig2", "--mode", "module"],
        &["betti", "corpus:c4", "--field", "QQ"],
        &["corpus", "emit", "nope"],
    ] {
        let out = bei(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("bei: "), "{args:?}");
    }
    assert_eq!(bei(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn pretty_output_renders_tables() {
    let out = String::from_utf8(bei(&["betti", "corpus:k3", "--mode", "betti_S", "--pretty"]).stdout).unwrap();
    assert!(out.contains("  i\\j"));
    assert!(out.contains("\"kind\": \"betti_S\""));
}
