//! Fixed invocations whose output is checked byte for byte against
//! `tests/golden/<name>.out`.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// File fed on stdin, relative to the crate root.
    pub stdin: Option<&'static str>,
}

pub const CASES: &[Case] = &[
    Case { name: "ord_norm", args: &["ord", "norm", "1+w", "w+w^2", "w^2*3+w+4", "(w+1)*3"], stdin: None },
    Case { name: "ord_add", args: &["ord", "add", "w", "1"], stdin: None },
    Case { name: "ord_mul", args: &["ord", "mul", "w^2+w+1", "3"], stdin: None },
    Case { name: "ord_pow", args: &["ord", "pow", "w+1"], stdin: None },
    Case { name: "ord_cmp", args: &["ord", "cmp", "w^2", "w*5+9"], stdin: None },
    Case { name: "space_canonical", args: &["space", "canonical", "--alpha", "w+1", "--p", "2"], stdin: None },
    Case { name: "space_cb", args: &["space", "cb", "--in", "tests/golden/mixed.json"], stdin: None },
    Case { name: "space_classify", args: &["space", "classify"], stdin: Some("tests/golden/canonical_2_3.json") },
    Case { name: "space_derive", args: &["space", "derive", "--times", "1", "--in", "tests/golden/mixed.json"], stdin: None },
    Case { name: "space_truncate", args: &["space", "truncate", "--depth", "2", "--in", "tests/golden/canonical_w_1.json"], stdin: None },
    Case {
        name: "space_embed_json",
        args: &["space", "embed", "--depth", "2", "--a", "0", "--b", "1", "--format", "json", "--in", "tests/golden/canonical_1_1.json"],
        stdin: None,
    },
    Case {
        name: "space_embed_csv",
        args: &["space", "embed", "--depth", "2", "--a", "-1", "--b", "1", "--format", "csv", "--in", "tests/golden/mixed.json"],
        stdin: None,
    },
    Case { name: "space_labels", args: &["space", "labels", "--depth", "2", "--in", "tests/golden/canonical_w_1.json"], stdin: None },
    Case { name: "space_equiv", args: &["space", "equiv", "tests/golden/mixed.json", "tests/golden/shuffled.json"], stdin: None },
    Case { name: "partition_finite", args: &["partition", "--model", "finite:2"], stdin: None },
    Case {
        name: "partition_dyadic",
        args: &["partition", "--model", "dyadic-interval", "--rank-bound", "w", "--count-bound", "2"],
        stdin: None,
    },
];

/// Invocations paired with the exit code they must produce.
pub const EXIT_CASES: &[(&[&str], i32)] = &[
    (&["ord", "add", "w", "1"], 0),
    (&["partition", "--model", "discrete-omega", "--rank-bound", "3", "--count-bound", "5"], 0),
    // domain errors
    (&["ord", "norm", "w+"], 1),
    (&["ord", "cmp", "w^(2", "1"], 1),
    (&["space", "derive", "--in", "tests/golden/canonical_w_1.json"], 1),
    (&["space", "embed", "--depth", "1", "--a", "1", "--b", "1", "--in", "tests/golden/mixed.json"], 1),
    (&["space", "embed", "--depth", "1", "--a", "0", "--b", "1/3", "--in", "tests/golden/mixed.json"], 1),
    // usage errors
    (&["ord", "mul", "w"], 2),
    (&["space", "truncate", "--in", "tests/golden/mixed.json"], 2),
    (&["space", "embed", "--depth", "1", "--a", "0", "--b", "1", "--format", "xml"], 2),
    (&["partition", "--model", "finite:x"], 2),
    (&["space", "cb", "--in", "tests/golden/missing.json"], 2),
    (&["space", "canonical", "--alpha", "1", "--p", "1", "--bogus"], 2),
    (&["frobnicate"], 2),
];

pub fn crate_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_root().join("tests/golden").join(format!("{name}.out"))
}

/// Runs the library entry point from the crate root, as the binary would be
/// run by the golden tests.
pub fn run_case(args: &[&str], stdin: Option<&str>) -> cbrank::Outcome {
    let root = crate_root();
    let input = stdin
        .map(|p| std::fs::read(root.join(p)).expect("stdin fixture"))
        .unwrap_or_default();
    let argv = std::iter::once("cbrank".to_string()).chain(args.iter().map(|a| relative(&root, a)));
    cbrank::run(argv, &mut input.as_slice())
}

/// Rebases fixture paths on the crate root so tests do not depend on the
/// working directory.
fn relative(root: &Path, arg: &str) -> String {
    if arg.starts_with("tests/") {
        root.join(arg).to_string_lossy().into_owned()
    } else {
        arg.to_string()
    }
}
