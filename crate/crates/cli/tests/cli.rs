use std::io::Write as _;

use ndc::{run_with_max_depth, Outcome};
use tempfile::NamedTempFile;

fn ndc(args: &[&str]) -> Outcome {
    run_with_max_depth(std::iter::once("ndc").chain(args.iter().copied()), None)
}

fn spec_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn with_file(json: &str, args: &[&str]) -> Outcome {
    let f = spec_file(json);
    let path = f.path().to_str().unwrap().to_string();
    let mut argv = vec![args[0], "--op", &path];
    argv.extend(&args[1..]);
    ndc(&argv)
}

fn rows(out: &str) -> Vec<Vec<String>> {
    out.lines().map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

const CORNER: &str = r#"{"entries": [[0, 3, 1.0, 0.0]], "partition": {"kind": "uniform", "width": 2}}"#;

#[test]
fn row_isometry_is_certified_out() {
    let out = ndc(&["membership", "--op", "demo:row-isometry", "--lambda", "0.75", "--horizon", "32", "--depth", "16"]);
    assert_eq!(out.stdout, "CERTIFIED_OUT eps=0.75\n");
    assert_eq!(out.code, 3);
}

#[test]
fn geometric_hook_table() {
    let out = ndc(&["hooks", "--op", "demo:minf-geometric", "--base", "0.5", "--horizon", "3", "--depth", "8"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let t = rows(&out.stdout);
    assert_eq!(t.len(), 3);
    assert_eq!(t[0], ["0", "1", "1"]);
    let lower: f64 = t[1][1].parse().unwrap();
    assert!((lower - (1.0 + 5f64.sqrt()) / 4.0).abs() <= 1e-9);
    assert_eq!(t[1][1], t[1][2]);
}

#[test]
fn closure_small_run() {
    let out = ndc(&["verify", "closure", "--trials", "20", "--seed", "1"]);
    assert_eq!(out.stdout.lines().last(), Some("PASS 20/20"));
    assert_eq!(out.code, 0);
}

#[test]
fn demos_pass() {
    for name in ["not-ideal", "partitions-differ", "minf"] {
        let out = ndc(&["demo", name]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
        assert!(out.stdout.lines().all(|l| l.starts_with("PASS ")), "{name}");
    }
}

#[test]
fn membership_exit_codes() {
    assert_eq!(with_file(CORNER, &["membership"]).stdout, "CERTIFIED_IN\n");
    let slow = ndc(&["membership", "--op", "demo:minf-inverse-sum"]);
    assert_eq!(slow.code, 4);
    assert!(slow.stdout.starts_with("EMPIRICAL_OUT maxtail="), "{}", slow.stdout);
    // the same projection over the fine partition
    let fine = ndc(&["membership", "--op", "demo:coarse-projection", "--partition", "uniform:1", "--horizon", "16", "--depth", "16"]);
    assert_eq!((fine.code, fine.stdout.as_str()), (3, "CERTIFIED_OUT eps=1\n"));
}

#[test]
fn hook_bounds_are_ordered() {
    let spec = r#"{"generator": {"name": "minf_sample", "params": {"rule": "inverse_sum"}},
                   "partition": {"kind": "cantor_coarsen", "base": {"kind": "uniform", "width": 1}}}"#;
    let out = with_file(spec, &["hooks", "--horizon", "4", "--depth", "4"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let t = rows(&out.stdout);
    assert_eq!(t.len(), 4);
    for r in t {
        let lo: f64 = r[1].parse().unwrap();
        let hi: f64 = r[2].parse().unwrap();
        assert!(lo < hi, "{r:?}");
    }
}

#[test]
fn norm_table() {
    let out = with_file(CORNER, &["norm", "--levels", "2", "--depth", "2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1\t0\n2\t1\nestimate\t1\t1\n");
}

#[test]
fn positivity_verdicts() {
    let neg = r#"{"entries": [[0, 0, 1.0, 0.0], [1, 1, -0.5, 0.0]], "partition": {"kind": "uniform", "width": 1}}"#;
    let out = with_file(neg, &["positivity", "--levels", "2"]);
    assert_eq!(out.code, 3);
    assert_eq!(out.stdout, "NEGATIVE_WITNESS subset={1} min_eig=-0.5 level=2\n");

    let out = with_file(CORNER, &["positivity", "--levels", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.starts_with("NOT_HERMITIAN "), "{}", out.stdout);

    let out = ndc(&["positivity", "--op", "demo:coarse-projection", "--levels", "4", "--depth", "4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("POSITIVE_UP_TO levels=4 "), "{}", out.stdout);
}

#[test]
fn generator_specs() {
    let iso = r#"{"generator": {"name": "row_isometry", "params": {"lambda": [0.75, 0.0]}},
                  "partition": {"kind": "cantor_coarsen", "base": {"kind": "uniform", "width": 1}}}"#;
    let out = with_file(iso, &["membership", "--horizon", "16", "--depth", "16"]);
    assert_eq!((out.code, out.stdout.as_str()), (3, "CERTIFIED_OUT eps=0.75\n"));

    let geo = r#"{"generator": {"name": "minf_sample", "params": {"rule": "geometric", "base": 0.5}},
                  "partition": {"kind": "uniform", "width": 1}}"#;
    assert_eq!(with_file(geo, &["membership"]).stdout, "CERTIFIED_IN\n");
}

#[test]
fn malformed_input_names_the_key() {
    for (json, key) in [
        (r#"{"entries": [[0, -1, 1.0, 0.0]], "partition": {"kind": "uniform", "width": 1}}"#, "entries[0][1]"),
        (r#"{"entries": [], "partition": {"kind": "uniform", "width": 1}, "extra": 1}"#, "extra"),
        (r#"{"entries": []}"#, "partition"),
        (
            r#"{"generator": {"name": "minf_sample", "params": {"rule": "geometric", "base": 2.0}},
                "partition": {"kind": "uniform", "width": 1}}"#,
            "generator.params.base",
        ),
        (r#"not json"#, ""),
    ] {
        let out = with_file(json, &["membership"]);
        assert_eq!(out.code, 64, "{json}: {}", out.stdout);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains(key), "{json}: {}", out.stderr);
    }
    let out = ndc(&["hooks", "--op", "/nonexistent/spec.json"]);
    assert_eq!(out.code, 64);
    let out = ndc(&["hooks", "--op", "demo:nope"]);
    assert_eq!(out.code, 64);
    assert!(out.stderr.contains("--op"), "{}", out.stderr);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(ndc(&["hooks"]).code, 64);
    assert_eq!(ndc(&["frobnicate"]).code, 64);
    assert_eq!(ndc(&["membership", "--op", "demo:minf", "--eps", "-1"]).code, 64);
    let help = ndc(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("membership"));
    assert_eq!(ndc(&["--version"]).code, 0);
}

#[test]
fn depth_cap() {
    let args = ["ndc", "hooks", "--op", "demo:minf-geometric", "--horizon", "2", "--depth", "11"];
    assert_eq!(run_with_max_depth(args, Some("11")).code, 0);
    let out = run_with_max_depth(args, Some("10"));
    assert_eq!(out.code, 64);
    assert!(out.stderr.contains("NDC_MAX_DEPTH"));
    assert_eq!(run_with_max_depth(args, Some("lots")).code, 64);
    assert_eq!(ndc(&["hooks", "--op", "demo:minf-geometric", "--depth", "0"]).code, 64);
    assert_eq!(ndc(&["hooks", "--op", "demo:minf-geometric", "--depth", "4097"]).code, 64);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "closure", "--trials", "10", "--seed", "3"][..],
        &["hooks", "--op", "demo:row-isometry", "--horizon", "8", "--depth", "8"],
        &["norm", "--op", "demo:minf-geometric", "--levels", "4", "--depth", "8"],
    ] {
        assert_eq!(ndc(args), ndc(args));
    }
    let a = ndc(&["verify", "closure", "--trials", "10", "--seed", "3"]);
    let b = ndc(&["verify", "closure", "--trials", "10", "--seed", "4"]);
    assert_eq!(a.code, b.code);
}
