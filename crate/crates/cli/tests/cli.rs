use cubic_surd_cli::{run_cli, EXIT_INPUT, EXIT_OK};

fn run(args: &[&str]) -> cubic_surd_cli::CliOutput {
    run_cli(std::iter::once("cubic-surd").chain(args.iter().copied()))
}

#[test]
fn solve_text_reports_root_and_denesting() {
    let out = run(&["solve", "x^3 + 4x = 75/8", "--digits", "9", "--format", "text"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("root 1: 3/2"), "{}", out.stdout);
    assert!(out.stdout.contains("w3 = (1/12)*sqrt(273) + 3/4 ≈ 2.126892637"), "{}", out.stdout);
}

#[test]
fn solve_latex_uses_frac() {
    let out = run(&["solve", "--a", "4/3", "--b", "75/16", "--format", "latex"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains(r"\frac{1}{12}\sqrt{273}+\frac{3}{4}"), "{}", out.stdout);
}

#[test]
fn solve_json_is_stable_and_schema_shaped() {
    let args = ["solve", "x^3 - x = -3/8", "--format", "json"];
    let first = run(&args);
    assert_eq!(first.code, EXIT_OK, "{}", first.stderr);
    assert_eq!(first.stdout, run(&args).stdout);
    let v: serde_json::Value = serde_json::from_str(&first.stdout).unwrap();
    // Key order is part of the contract; check it on the raw text.
    let keys = ["classification", "a", "b", "D", "roots", "denesting", "cardano", "digits"];
    let positions: Vec<_> = keys
        .iter()
        .map(|k| first.stdout.find(&format!("\"{k}\":")).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{}", first.stdout);
    assert_eq!(v["classification"], "three-real");
    assert_eq!(v["D"], "-13/6912");
    assert_eq!(v["roots"][0]["exact"], "1/2");
    assert_eq!(v["denesting"]["s"], "-12");
    assert_eq!(v["digits"], "10");
}

#[test]
fn denest_json() {
    let out = run(&["denest", "--a", "-1/3", "--b", "-3/16", "--root", "1/2", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with(r#"{"t":"1/4","s":"-12","#), "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["w3"], "1/4 - (1/12)*sqrt(39)*i");
}

#[test]
fn denest_rejects_non_root() {
    let out = run(&["denest", "--a", "4/3", "--b", "75/16", "--root", "1"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("not a root"), "{}", out.stderr);
}

#[test]
fn verify_ok_and_fail() {
    let ok = run(&["verify", "--a", "4/3", "--b", "75/16", "--t", "3/4", "--s", "12/43"]);
    assert_eq!(ok.code, EXIT_OK);
    assert_eq!(ok.stdout, "OK: denesting identities satisfied");
    let bad = run(&["verify", "--a", "4/3", "--b", "75/16", "--t", "3/4", "--s", "1/12"]);
    assert_eq!(bad.code, EXIT_INPUT);
    assert!(bad.stdout.starts_with("FAIL"), "{}", bad.stdout);
}

#[test]
fn branches_text_and_json() {
    let out = run(&["branches", "--a", "-1/3", "--b", "-3/16", "--root", "1/2", "--digits", "9"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("0.651387819"), "{}", out.stdout);
    assert!(out.stdout.contains("-1.151387819"), "{}", out.stdout);
    let json = run(&["branches", "--a", "-1/3", "--b", "-3/16", "--root", "1/2", "--digits", "9", "--format", "json"]);
    assert_eq!(json.code, EXIT_OK, "{}", json.stderr);
    serde_json::from_str::<serde_json::Value>(&json.stdout).unwrap();
}

#[test]
fn branches_requires_casus_irreducibilis() {
    let out = run(&["branches", "--a", "4/3", "--b", "75/16", "--root", "3/2", "--digits", "5"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["solve", "x^3 + 4x = 75/8", "--digits", "0"][..],
        &["solve", "x^3 + 4x = 75/8", "--digits", "1001"],
        &["solve", "x^2 = 1"],
        &["solve", "x^3 + y = 1"],
        &["solve", "x^3 + = 1"],
        &["denest", "--a", "1/0", "--b", "1", "--root", "1"],
        &["denest", "--a", "1.5", "--b", "1", "--root", "1"],
        &["solve", "--bogus"],
        &["solve", "--a", "1"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}: {out:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("solve"));
}
