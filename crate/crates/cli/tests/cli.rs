use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const FN2D: &str = r#"{"rank": 3, "a": [[2, -1, 0], [-1, 2, -2], [0, -2, 2]]}"#;
const SIGMA: &str = r#"{"gens": [[1, 1, 0], [2, 2, 3], [0, 2, 3], [0, 4, 3]]}"#;
const A2: &str = r#"{"rank": 2, "a": [[2, -1], [-1, 2]]}"#;

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn kmroots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmroots")).args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn fn2d_roots_contain_the_generators() {
    let d = TempDir::new().unwrap();
    let g = write(&d, "fn2d.json", FN2D);
    let o = kmroots(&["roots", "--gcm", p(&g), "--height", "14", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let real = json(&o)["real"].as_array().unwrap().clone();
    for gamma in [[1, 1, 0], [2, 2, 3], [0, 2, 3], [0, 4, 3]] {
        assert!(real.contains(&serde_json::json!(gamma)), "{gamma:?}");
    }
}

#[test]
fn fn2d_pisystem_is_certified() {
    let d = TempDir::new().unwrap();
    let (g, s) = (write(&d, "fn2d.json", FN2D), write(&d, "sigma.json", SIGMA));
    let o = kmroots(&["pisystem", "--gcm", p(&g), "--gens", p(&s), "--height", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Certified"));
}

#[test]
fn refuted_pisystem_exits_one() {
    let d = TempDir::new().unwrap();
    let g = write(&d, "a2.json", A2);
    let s = write(&d, "s.json", r#"{"gens": [[1, 0], [1, 1]]}"#);
    let o = kmroots(&["pisystem", "--gcm", p(&g), "--gens", p(&s), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "Refuted");
}

#[test]
fn input_errors_exit_two() {
    let d = TempDir::new().unwrap();
    let bad = write(&d, "bad.json", r#"{"rank": 2, "a": [[2, 1], [-1, 2]]}"#);
    assert_eq!(kmroots(&["roots", "--gcm", p(&bad)]).status.code(), Some(2));
    let broken = write(&d, "broken.json", "{\"rank\": 2,");
    assert_eq!(kmroots(&["roots", "--gcm", p(&broken)]).status.code(), Some(2));
    assert_eq!(kmroots(&["roots", "--gcm", "/nonexistent.json"]).status.code(), Some(2));
    let o = kmroots(&["roots", "--height", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--gcm"));
}

#[test]
fn truncation_is_exit_three_only_when_strict() {
    let d = TempDir::new().unwrap();
    let g = write(&d, "fn2d.json", FN2D);
    let args = ["string", "--gcm", p(&g), "--alpha", "[0,0,1]", "--beta", "[1,1,0]", "--height", "3"];
    assert_eq!(kmroots(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(kmroots(&strict).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_kmroots"))
        .args(["roots", "--gcm", p(&g), "--height", "14", "--strict"])
        .env("KMROOTS_MAX_ROOTS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn reports_are_byte_identical() {
    let d = TempDir::new().unwrap();
    let (g, s) = (write(&d, "fn2d.json", FN2D), write(&d, "sigma.json", SIGMA));
    let run = || stdout(&kmroots(&["orbit", "--gcm", p(&g), "--gens", p(&s), "--height", "14", "--pretty"]));
    assert_eq!(run(), run());
}

#[test]
fn bsigma_and_pi_of() {
    let d = TempDir::new().unwrap();
    let (g, s) = (write(&d, "fn2d.json", FN2D), write(&d, "sigma.json", SIGMA));
    let o = kmroots(&["bsigma", "--gcm", p(&g), "--gens", p(&s), "--json"]);
    assert_eq!(json(&o)["b"]["a"][1], serde_json::json!([-2, 2, -2, -10]));
    let a2 = write(&d, "a2.json", A2);
    let r = write(&d, "r.json", r#"{"rank": 2, "roots": [[1, 0], [0, 1], [1, 1]]}"#);
    let o = kmroots(&["pi-of", "--gcm", p(&a2), "--roots", p(&r), "--height", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pi"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn affine_and_tuple_commands() {
    let d = TempDir::new().unwrap();
    let ok = write(&d, "ok.json", r#"{"finite_type": "A2", "components": [{"roots": [[1, 0], [0, 1], [1, 1]], "k": 2}]}"#);
    let o = kmroots(&["affine-validate", "--datum", p(&ok), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["period"], 2);
    let open = write(&d, "open.json", r#"{"finite_type": "A2", "components": [{"roots": [[1, 0], [0, 1]], "k": 1}]}"#);
    assert_eq!(kmroots(&["affine-validate", "--datum", p(&open)]).status.code(), Some(1));
    let o = kmroots(&["affine-pi", "--datum", p(&ok), "--json"]);
    assert_eq!(json(&o)["pi"].as_array().unwrap().len(), 3);

    let t = write(
        &d,
        "t.json",
        r#"{"finite_type": "A3", "components": [{"roots": [[1, 0, 0]], "k": 0}],
            "lambda": {"modulus": 1, "add": [1, -1]},
            "v": [{"residue": 0, "basis": [[0, 0, 1]]}]}"#,
    );
    let o = kmroots(&["tuple-validate", "--datum", p(&t), "--band", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["roots"]["imaginary"], serde_json::json!([-1, 1]));
    let o = kmroots(&["loop-verify", "--datum", p(&t), "--band", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(kmroots(&["tuple-maximal", "--datum", p(&t), "--with-d"]).status.code(), Some(1));

    let o = kmroots(&["affine-maximal", "--type", "A2", "--json"]);
    assert_eq!(json(&o)["maximal_closed"].as_array().unwrap().len(), 3);
}

#[test]
fn loop_commands() {
    let d = TempDir::new().unwrap();
    let g = write(
        &d,
        "g.json",
        r#"{"finite_type": "A1", "gens": [
            {"terms": [{"kind": "X", "root": [1], "r": 1, "coef": "1"}]},
            {"terms": [{"kind": "X", "root": [-1], "r": -1, "coef": "1"}]}]}"#,
    );
    let o = kmroots(&["loop-generate", "--gens", p(&g), "--band", "3", "--json", "--basis"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dim"], 3);
    assert!(v["caveat"].as_str().unwrap().contains("band"));
    let o = kmroots(&["loop-verify", "--gens", p(&g), "--band", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["keyprop"]["pass"], true);
    let mixed = write(&d, "m.json", r#"{"finite_type": "A1", "gens": [{"terms": [{"kind": "X", "root": [1], "r": 1, "coef": 1}, {"kind": "C", "coef": 1}]}]}"#);
    assert_eq!(kmroots(&["loop-generate", "--gens", p(&mixed)]).status.code(), Some(2));
}

#[test]
fn worked_examples_suite() {
    let o = kmroots(&["verify", "paper-examples", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(json(&o)["examples"].as_array().unwrap().len(), 11);
    assert_eq!(kmroots(&["verify-paper-examples"]).status.code(), Some(0));
}
