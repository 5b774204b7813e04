use gvpoly_cli::report::Output;
use gvpoly_cli::{run, Command, Options, Report, EXIT_MATH, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE};
use serde_json::{json, Value};

fn fixture(name: &str) -> Vec<u8> {
    std::fs::read(format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn exec(command: Command, inputs: &[&str], options: Options) -> (u8, Value) {
    let bytes: Vec<Vec<u8>> = inputs.iter().map(|n| fixture(n)).collect();
    let r = run(command, &bytes, &options);
    (r.exit_code, Value::Object(r.value().clone()))
}

fn with_h(h: &str) -> Options {
    Options { h: Some(h.into()), samples: 100, ..Options::default() }
}

#[test]
fn chain_examples() {
    let (code, v) = exec(Command::Chain, &["projective_plane"], with_h("0,0,1"));
    assert_eq!(code, EXIT_OK);
    let regions = v["results"]["regions"].as_array().unwrap();
    assert_eq!(regions.len(), 1);
    assert_eq!(regions[0]["weight"], json!(1));
    assert_eq!(v["results"]["volume"], json!("1/2"));

    let (_, v) = exec(Command::Chain, &["projective_plane"], with_h("0,0,0"));
    assert_eq!(v["results"]["regions"], json!([]));

    let (_, v) = exec(Command::Chain, &["quadrant"], with_h("1,1,1,1"));
    assert_eq!(v["results"]["volume"], json!("4"));
}

#[test]
fn volpoly_coefficients() {
    let (code, v) = exec(Command::Volpoly, &["projective_plane"], Options::default());
    assert_eq!(code, EXIT_OK);
    let c = &v["results"]["coefficients"];
    assert_eq!(c["h1^2"], json!("1/2"));
    assert_eq!(c["h1h2"], json!("1"));
    assert_eq!(c.as_object().unwrap().len(), 6);
}

#[test]
fn bkkcheck_passes() {
    let opts = Options { samples: 10, seed: 7, ..Options::default() };
    let (code, v) = exec(Command::Bkkcheck, &["projective_plane"], opts);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["results"]["agreed"], json!(10));
}

#[test]
fn validation_failures_exit_two() {
    let (code, v) = exec(Command::Validate, &["missing_cone"], Options::default());
    assert_eq!(code, EXIT_MATH);
    assert!(v["error"]["message"].as_str().unwrap().contains("not complete"));
    let (code, v) = exec(Command::Validate, &["dependent_lambda"], Options::default());
    assert_eq!(code, EXIT_MATH);
    assert!(v["error"]["message"].as_str().unwrap().contains("dependent on face"));
}

#[test]
fn parse_errors_exit_one() {
    let r = run(Command::Volpoly, &[b"{\"dim\": 2".to_vec()], &Options::default());
    assert_eq!(r.exit_code, EXIT_PARSE);
    let (code, _) = exec(Command::Chain, &["projective_plane"], with_h("1,2"));
    assert_eq!(code, EXIT_PARSE);
    let (code, _) =
        exec(Command::Integrate, &["projective_plane"], Options { q: Some("x1/x2".into()), ..with_h("0,0,1") });
    assert_eq!(code, EXIT_PARSE);
    let (code, _) = exec(Command::Chain, &["missing_cone"], Options::default());
    assert_eq!(code, EXIT_MATH);
    let (code, _) = exec(Command::Volpoly, &["lines_generic"], Options::default());
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn failed_cross_checks_exit_three() {
    let mut r = Report::new(Command::Bkkcheck, &[], &Options::default());
    let mut out = Output::new(json!({}));
    out.mismatches.push("sample 0 differs".into());
    r.finish(out);
    assert_eq!(r.exit_code, EXIT_MISMATCH);
    assert_eq!(r.value()["mismatches"], json!(["sample 0 differs"]));
}

#[test]
fn dominates_compares_nerves() {
    let (code, v) = exec(Command::Dominates, &["lines_generic", "lines_concurrent"], Options::default());
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["results"]["first_dominates_second"], json!(true));
    assert_eq!(v["results"]["second_dominates_first"], json!(false));
    let (code, _) = exec(Command::Dominates, &["lines_generic"], Options::default());
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn multifan_skips_the_cell_route() {
    let (code, v) = exec(Command::Betti, &["double_cover"], Options::default());
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["results"]["macaulay"], json!([1, 4, 1]));
    assert_eq!(v["results"]["cells"], Value::Null);
    let (code, _) = exec(Command::Cells, &["double_cover"], Options::default());
    assert_eq!(code, EXIT_MATH);
}

#[test]
fn cohomology_report_shape() {
    let (code, v) = exec(Command::Cohomology, &["projective_plane"], Options::default());
    assert_eq!(code, EXIT_OK);
    let r = &v["results"];
    assert_eq!(r["betti"], json!([1, 1, 1]));
    assert_eq!(r["relations_deg1"], json!(["d1 - d2", "d1 - d3"]));
    assert_eq!(r["top_products"]["{1,3}"], json!("1"));
    assert_eq!(r["pairing_ok"], json!(true));
}

#[test]
fn digest_covers_the_input_bytes() {
    let (_, a) = exec(Command::Volpoly, &["projective_plane"], Options::default());
    let (_, b) = exec(Command::Volpoly, &["quadrant"], Options::default());
    assert_ne!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["input_digest"].as_str().unwrap().len(), 64);
}
