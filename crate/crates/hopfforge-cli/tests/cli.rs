use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hopfforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfforge")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn enumerate_tables() {
    let out = hopfforge(&["enumerate", "--m", "12", "--set", "J"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("7 rows"), "{}", stdout(&out));
    let out = hopfforge(&["enumerate", "--m", "12", "--set", "L", "--max-rank", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("3 rows"));
    let out = hopfforge(&["enumerate", "--m", "10", "--set", "J"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("m = 10"));
}

#[test]
fn small_m_needs_the_flag() {
    assert_eq!(code(&hopfforge(&["enumerate", "--m", "8", "--set", "J"])), 2);
    assert_eq!(code(&hopfforge(&["enumerate", "--m", "8", "--set", "J", "--allow-small-m"])), 0);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let out = hopfforge(&["deform", "--m", "12", "--I", "(2,4)"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not in J"), "{}", stderr(&out));
    assert_eq!(code(&hopfforge(&["deform", "--m", "12", "--I", "(2,3"])), 2);
    assert_eq!(code(&hopfforge(&["deform", "--m", "12", "--kind", "B", "--L", "3", "--zeta", "2,3,9=1"])), 2);
    assert_eq!(code(&hopfforge(&["verify", &path(&dir, "missing.json")])), 2);
    let garbage = path(&dir, "garbage.json");
    std::fs::write(&garbage, "{\"schema\": \"nothing/v0\"}").unwrap();
    assert_eq!(code(&hopfforge(&["verify", &garbage])), 2);
    assert_eq!(code(&hopfforge(&["bogus"])), 2);
}

#[test]
fn threads_variable_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfforge")).args(["enumerate", "--m", "12", "--set", "J"]).env("HOPFFORGE_THREADS", "0").output().unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_hopfforge")).args(["enumerate", "--m", "12", "--set", "J"]).env("HOPFFORGE_THREADS", "1").output().unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn deform_then_verify_and_corrupt() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.json");
    let out = hopfforge(&["deform", "--m", "12", "--kind", "A", "--I", "(2,3),(2,9)", "--zeta", "2,3,9=1", "--out", &a]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = hopfforge(&["verify", &a, "--suite", "hopf"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let rows = doc["antipode"].as_array_mut().unwrap();
    rows.retain(|e| e[0] != 30);
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = hopfforge(&["verify", &bad, "--suite", "hopf"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL  antipode"));
    assert!(stderr(&out).contains("antipode axiom fails at"), "{}", stderr(&out));
}

#[test]
fn presented_and_deformed_compare() {
    let dir = TempDir::new().unwrap();
    let (l, p, d, e) = (path(&dir, "l.json"), path(&dir, "p.json"), path(&dir, "d.json"), path(&dir, "e.json"));
    let out = hopfforge(&["construct", "--m", "12", "--object", "lifting", "--kind", "C", "--I", "(2,3)", "--L", "3", "--seed", "5", "--out", &l]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(code(&hopfforge(&["construct", "--m", "12", "--object", "presented", "--lifting", &l, "--out", &p])), 0);
    assert_eq!(code(&hopfforge(&["deform", "--m", "12", "--lifting", &l, "--out", &d])), 0);
    let out = hopfforge(&["compare", "--presented", &p, "--deformed", &d]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    assert_eq!(code(&hopfforge(&["deform", "--m", "12", "--I", "(2,3)", "--L", "3", "--seed", "5", "--mu", "0,0=7", "--out", &e])), 0);
    let out = hopfforge(&["compare", "--presented", &p, "--deformed", &e]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("differs from the presented value"), "{}", stderr(&out));
}

#[test]
fn lifting_suites_and_export_round_trip() {
    let dir = TempDir::new().unwrap();
    let l = path(&dir, "l.json");
    assert_eq!(code(&hopfforge(&["construct", "--m", "12", "--object", "lifting", "--L", "5", "--seed", "2", "--out", &l])), 0);
    let out = hopfforge(&["verify", &l, "--suite", "all"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    for suite in ["ε-cocycle", "invariance", "cocycle identity", "coradical", "primitives", "compatibility"] {
        assert!(stdout(&out).contains(&format!("PASS  {suite}")), "{suite}\n{}", stdout(&out));
    }

    for object in ["module", "nichols", "bosonization"] {
        let first = path(&dir, &format!("{object}.json"));
        let second = path(&dir, &format!("{object}-2.json"));
        assert_eq!(code(&hopfforge(&["construct", "--m", "12", "--object", object, "--I", "(3,2)", "--out", &first])), 0);
        assert_eq!(code(&hopfforge(&["export", &first, "--out", &second])), 0);
        assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap(), "{object}");
    }
    let out = hopfforge(&["verify", &path(&dir, "module.json"), "--suite", "cocycle"]);
    assert_eq!(code(&out), 2);
    assert!(Path::new(&path(&dir, "nichols.json")).exists());
    assert_eq!(code(&hopfforge(&["verify", &path(&dir, "nichols.json")])), 0);
}

#[test]
fn classify_menu_lists_families() {
    let dir = TempDir::new().unwrap();
    let menu = path(&dir, "menu.json");
    let out = hopfforge(&["classify-menu", "--m", "12", "--max-rank", "1", "--out", &menu]);
    assert_eq!(code(&out), 0);
    // k^{D_12}, seven classes of type A and three of type B.
    assert!(stdout(&out).contains("11 entries"), "{}", stdout(&out));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&menu).unwrap()).unwrap();
    assert_eq!(doc["schema"], "menu/v1");
    assert_eq!(doc["entries"].as_array().unwrap().len(), 11);
}
