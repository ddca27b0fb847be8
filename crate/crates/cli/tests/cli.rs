use kerovkit_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn kk(args: &[&str]) -> kerovkit_cli::RunOutput {
    run(std::iter::once("kerovkit").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = kk(&full);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid json")
}

#[test]
fn kerov_six_text() {
    let out = kk(&["kerov", "--k", "6"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "R7 + 35*R5 + 35*R3*R2 + 84*R3");
}

#[test]
fn kerov_json_terms_are_integers() {
    let v = json(&["kerov", "--k", "4"]);
    assert_eq!(v["command"], "kerov");
    assert_eq!(v["result"]["polynomial"], "R5 + 5*R3");
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[1]["coeff"], 5);
    assert_eq!(terms[1]["monomial"]["R3"], 1);
}

#[test]
fn kerov_above_cap_is_domain_error() {
    let out = kk(&["kerov", "--k", "7"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn nchar_transposition_on_hook() {
    let out = kk(&["nchar", "--lambda", "2,1", "--pi", "(1,2)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("0 "));
    let v = json(&["nchar", "--lambda", "3", "--pi", "(1,2)"]);
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(v["result"]["murnaghan_nakayama"], "6");
}

#[test]
fn dim_and_char() {
    assert_eq!(kk(&["dim", "--lambda", "3,1,1"]).stdout.trim(), "6");
    assert_eq!(kk(&["char", "--lambda", "3,1", "--ct", "2,2"]).stdout.trim(), "-1");
    assert_eq!(kk(&["char", "--lambda", "3,1", "--pi", "(1,2)"]).stdout.trim(), "1");
}

#[test]
fn colorings_counts() {
    let out = kk(&["colorings", "--lambda", "2", "--sigma1", "(1)(2)", "--sigma2", "(1)(2)"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "4");
}

#[test]
fn smoments_json_has_profile() {
    let v = json(&["smoments", "--lambda", "4,3,1", "--max", "4"]);
    assert_eq!(v["result"]["moments"]["S2"], "8");
    let profile = v["result"]["profile"].as_array().unwrap();
    assert_eq!(profile.first().unwrap()["x"], -3);
    assert_eq!(profile.last().unwrap()["x"], 4);
}

#[test]
fn cumulants_agree() {
    let v = json(&["cumulants", "--lambda", "3,2", "--max", "5"]);
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(v["result"]["cumulants"]["R2"], "5");
}

#[test]
fn factorization_counts_are_catalan() {
    for (k, c) in [(1, "1"), (2, "2"), (3, "5"), (4, "14")] {
        let ks = k.to_string();
        assert_eq!(kk(&["factorizations", "--k", &ks, "--minimal"]).stdout.trim(), c);
    }
    let listed = kk(&["factorizations", "--k", "2", "--minimal", "--list"]);
    assert_eq!(listed.stdout.lines().count(), 3);
}

#[test]
fn shuffle_csv_and_cap() {
    let out = kk(&["shuffle", "--n", "4", "--steps", "2", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<_> = out.stdout.lines().collect();
    assert_eq!(lines[0], "k,tv,ds_bound");
    assert_eq!(lines.len(), 3);
    let capped = kk(&["shuffle", "--n", "5", "--steps", "1", "--max-n", "4"]);
    assert_eq!(capped.code, EXIT_DOMAIN);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(kk(&["dim", "--lambda", "a,b"]).code, EXIT_USAGE);
    assert_eq!(kk(&["dim"]).code, EXIT_USAGE);
    assert_eq!(kk(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(kk(&["dim", "--lambda", "1", "--format", "xml"]).code, EXIT_USAGE);
}

#[test]
fn decreasing_violation_is_domain() {
    assert_eq!(kk(&["dim", "--lambda", "1,2"]).code, EXIT_DOMAIN);
}

#[test]
fn json_output_deterministic_except_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    let args = ["cumulants", "--lambda", "4,2,1", "--max", "6"];
    assert_eq!(strip(json(&args)), strip(json(&args)));
}
