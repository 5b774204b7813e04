//! Byte-for-byte comparison of command output against checked-in files.
//! Run with `UPDATE_GOLDEN=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

const FIXTURES: [&str; 7] =
    ["segment", "projective_plane", "quadrant", "hirzebruch", "double_cover", "octahedral", "projective_space"];
const COMMANDS: [&str; 7] = ["validate", "chain", "volpoly", "betti", "cohomology", "homotopy", "nerve"];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the binary from the crate directory so input paths stay relative.
fn gvpoly(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_gvpoly")).current_dir(manifest_dir()).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn check(name: &str, args: &[&str], expected_code: i32) -> Option<String> {
    let (stdout, code) = gvpoly(args);
    if code != expected_code {
        return Some(format!("{name}: exit {code}, expected {expected_code}\n{stdout}"));
    }
    let path = manifest_dir().join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
        return None;
    }
    match std::fs::read_to_string(&path) {
        Ok(want) if want == stdout => None,
        Ok(_) => Some(format!("{name}: output differs from {}", path.display())),
        Err(_) => Some(format!("{name}: missing {}", path.display())),
    }
}

fn input(fixture: &str) -> String {
    Path::new("fixtures").join(format!("{fixture}.json")).to_string_lossy().into_owned()
}

#[test]
fn fixture_goldens() {
    let mut failures = Vec::new();
    for f in FIXTURES {
        let file = input(f);
        for c in COMMANDS {
            failures.extend(check(&format!("{f}.{c}"), &[c, "--input", &file], 0));
        }
        if f != "double_cover" {
            failures.extend(check(&format!("{f}.cells"), &["cells", "--input", &file], 0));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn flag_goldens() {
    let pp = input("projective_plane");
    let cases: Vec<(&str, Vec<&str>, i32)> = vec![
        ("projective_plane.bkkcheck", vec!["bkkcheck", "--input", &pp, "--samples", "10", "--seed", "7"], 0),
        ("projective_plane.integrate", vec!["integrate", "--input", &pp, "--q", "x1^2*x2 + 3/2*x1"], 0),
        ("projective_plane.chain_h", vec!["chain", "--input", &pp, "--h", "1/2,-1,3"], 0),
        (
            "lines.dominates",
            vec!["dominates", "--input", "fixtures/lines_generic.json", "--input", "fixtures/lines_concurrent.json"],
            0,
        ),
        ("missing_cone.validate", vec!["validate", "--input", "fixtures/missing_cone.json"], 2),
        ("dependent_lambda.validate", vec!["validate", "--input", "fixtures/dependent_lambda.json"], 2),
    ];
    let failures: Vec<String> = cases.iter().filter_map(|(n, a, c)| check(n, a, *c)).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["cohomology", "--input", "fixtures/octahedral.json"],
        vec!["bkkcheck", "--input", "fixtures/hirzebruch.json", "--samples", "5", "--seed", "3"],
        vec!["homotopy", "--input", "fixtures/double_cover.json"],
    ] {
        assert_eq!(gvpoly(&args), gvpoly(&args), "{args:?}");
    }
}

#[test]
fn compact_and_pretty_agree() {
    let (pretty, _) = gvpoly(&["volpoly", "--input", "fixtures/quadrant.json"]);
    let (compact, _) = gvpoly(&["volpoly", "--input", "fixtures/quadrant.json", "--compact"]);
    assert_eq!(compact.lines().count(), 1);
    let a: serde_json::Value = serde_json::from_str(&pretty).unwrap();
    let b: serde_json::Value = serde_json::from_str(&compact).unwrap();
    assert_eq!(a, b);
}
