//! Shared CLI fixtures and helpers.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub fn tg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tg"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

/// Invocations run inside the fixture directory and their expected exit codes.
pub const EXIT_CASES: &[(&[&str], i32)] = &[
    (&["check", "diamond.json"], 0),
    (&["check", "not_transitive.json"], 2),
    (&["check", "not_transitive.json", "--close"], 0),
    (&["check", "not_transitive_closed.json"], 0),
    (&["check", "not_round.json"], 1),
    (&["spectrum", "not_round.json"], 1),
    (&["check", "duplicate_element.json"], 2),
    (&["check", "unknown_element.json"], 2),
    (&["check", "truncated.json"], 2),
    (&["check", "unknown_kind.json"], 2),
    (&["check", "not_associative.json"], 2),
    (&["check", "no_inverse.json"], 2),
    (&["check", "bad_groupoid_inverse.json"], 2),
    (&["check", "unordered_groupoid.json"], 1),
    (&["groupoid", "unordered_groupoid.json"], 1),
    (&["check", "z2.json"], 0),
    (&["groupoid", "z2.json"], 0),
    (&["check", "unknown_point.json"], 2),
    (&["check", "sierpinski_family.json"], 1),
    (&["recover", "sierpinski_family.json"], 1),
    (&["check", "discrete_family.json"], 0),
    (&["recover", "discrete_family.json"], 0),
    (&["check", "model_bad_units.json"], 2),
    (&["check", "model_indiscrete.json"], 1),
    (&["recover", "pair2_family.json"], 0),
    (&["recover", "family_product_mismatch.json"], 1),
    (&["check", "missing.json"], 2),
    (&["check", "tree:1:2"], 2),
    (&["check", "isym:4"], 2),
    (&["equiv", "--max-size", "9"], 2),
    (&["spectrum", "powerset:6", "--kind", "tight"], 2),
    (&["check", "--frobnicate", "diamond.json"], 2),
    (&["spectrum", "diamond.json", "--kind", "tight"], 0),
    (&["export", "diamond.json", "--dot"], 0),
    (&["export", "z2.json", "--dot"], 2),
    (&["germs", "isym:2"], 0),
    (&["equiv", "--theorem", "hausdorff", "--max-size", "3"], 0),
];

/// Invocations whose output must be byte-identical across runs.
pub const STABLE_CASES: &[&[&str]] = &[
    &["equiv"],
    &["equiv", "--theorem", "meet", "--samples", "50", "--seed", "7"],
    &["spectrum", "tree:2:3"],
    &["spectrum", "powerset:3", "--kind", "tight"],
    &["groupoid", "isym:3"],
    &["groupoid", "isym:3", "--dot"],
    &["germs", "isym:3"],
    &["check", "isym:3"],
    &["recover", "pair2_family.json"],
    &["example", "--name", "isym:3"],
    &["export", "pair2_family.json"],
];

/// Count of distinct fixture files the exit cases read.
pub fn fixture_files() -> usize {
    std::fs::read_dir(fixtures())
        .map(|d| d.filter(|e| e.as_ref().is_ok_and(|e| e.path().extension().is_some_and(|x| x == "json"))).count())
        .unwrap_or(0)
}
