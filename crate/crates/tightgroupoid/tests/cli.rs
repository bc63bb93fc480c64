//! End-to-end runs of the `tg` binary.

mod common;

use common::{tg, EXIT_CASES, STABLE_CASES};

#[test]
fn exit_codes_follow_the_contract() {
    for (args, want) in EXIT_CASES {
        let out = tg(args);
        assert_eq!(
            out.status.code(),
            Some(*want),
            "{args:?}\nstdout: {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert!(common::fixture_files() >= 12);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in STABLE_CASES {
        let a = tg(args);
        let b = tg(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn hausdorff_suite_reports_its_count() {
    let out = tg(&["equiv", "--theorem", "hausdorff", "--max-size", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("checked ") && text.ends_with(" instances, 0 inconsistencies\n"), "{text}");
}

#[test]
fn example_then_groupoid_gives_four_arrows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    assert_eq!(tg(&["example", "--name", "isym:2", "--emit", p]).status.code(), Some(0));
    let out = tg(&["groupoid", p]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["kind"], "groupoid_model");
    assert_eq!(doc["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn emitted_files_re_export_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["arrow", "diamond", "powerset:2", "chain:3", "tree:2:2", "isym:2"] {
        let path = dir.path().join("x.json");
        let p = path.to_str().unwrap();
        assert_eq!(tg(&["example", "--name", name, "--emit", p]).status.code(), Some(0));
        let written = std::fs::read(&path).unwrap();
        let out = tg(&["export", p]);
        assert_eq!(out.stdout, written, "{name}");
    }
    for file in ["pair2_family.json", "discrete_family.json", "z2.json"] {
        let out = tg(&["export", file]);
        let again = dir.path().join("again.json");
        std::fs::write(&again, &out.stdout).unwrap();
        assert_eq!(tg(&["export", again.to_str().unwrap()]).stdout, out.stdout, "{file}");
    }
}

#[test]
fn witnesses_name_the_failing_elements() {
    let out = tg(&["check", "not_transitive.json"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(a,b) and (b,c)"), "{err}");
    let out = tg(&["check", "not_round.json"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("witness round: x"));
}

#[test]
fn dot_has_one_graph_per_component() {
    let out = tg(&["groupoid", "isym:3", "--dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("digraph").count(), 1);
    assert_eq!(text.matches("shape=box").count(), 3);
    assert_eq!(text.matches(" -> ").count(), 6);
}
