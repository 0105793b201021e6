use skeinlab::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["skeinlab"];
    full.extend_from_slice(args);
    let code = run_with(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap().trim_end().to_string(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn reduce_and_bracket() {
    assert_eq!(ok(&["reduce", "tangle(0){cup0;cap0}"]), "(-s^4 - s^-4) * 1");
    assert_eq!(ok(&["reduce", "tangle(0){cup0} east=+-"]), "(s^-1) * 1");
    assert_eq!(ok(&["reduce", "tangle(2){x0} west=+- east=-+"]), "(-s^6 + s^-2) * 1 + (s^6) * beta(+-;+-)");
    assert_eq!(ok(&["bracket", "tangle(0){cup0;cup1;x2;x2;cap1;cap0}"]), "s^12 + s^4 + s^-4 + s^-12");
}

#[test]
fn hopf_operations() {
    assert_eq!(ok(&["mul", "a", "d"]), "beta(+-;+-)");
    assert_eq!(ok(&["mul", "a*d - q^-2*b*c"]), "1");
    assert_eq!(ok(&["comul", "b"]), "beta(+;+) ⊗ beta(+;-) + beta(+;-) ⊗ beta(-;-)");
    assert_eq!(ok(&["counit", "a*d"]), "1");
    assert_eq!(ok(&["antipode", "a"]), "beta(-;-)");
    assert_eq!(ok(&["antipode", "b"]), "(-s^4) * beta(+;-)");
    assert_eq!(ok(&["rot", "b"]), "beta(-;+)");
}

#[test]
fn functionals() {
    assert_eq!(ok(&["functional", "theta", "a"]), "-s^6");
    assert_eq!(ok(&["functional", "theta", "b"]), "0");
    assert_eq!(ok(&["functional", "R", "a", "a"]), "s^2");
    assert_eq!(ok(&["functional", "R", "a", "d"]), "s^-2");
    assert_eq!(ok(&["functional", "R", "b", "c"]), "s^2 - s^-6");
    let t = ok(&["functional", "t", "a"]);
    let tinv = ok(&["functional", "tinv", "d"]);
    assert!(!t.is_empty() && !tinv.is_empty());
}

#[test]
fn inversion_round_trip() {
    for edge in ["east", "west"] {
        let y = ok(&["inv", "a*b + 2*c", "--edge", edge]);
        let back = ok(&["inv", &y, "--edge", edge, "--inverse"]);
        let direct = ok(&["mul", "a*b + 2*c"]);
        assert_eq!(back, direct, "edge {edge}");
    }
}

#[test]
fn half_twist_and_st() {
    assert!(ok(&["ht", "a"]).contains("beta"));
    let table = ok(&["st", "--max-points", "4"]);
    assert!(table.lines().count() > 3);
    assert!(!table.contains("FAIL"));
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "braidop", "--max-degree", "1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("PASS"));
    let (code, _, err) = run(&["verify", "nonsense"]);
    assert_eq!(code, 2);
    for name in ["hopf", "excision", "all"] {
        assert!(err.contains(name), "{err}");
    }
    let (code, _, _) = run(&["verify", "hopf", "--spec", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["mul", "a +"]).0, 2);
    assert_eq!(run(&["reduce", "tangle(2){x5}"]).0, 2);
    assert_eq!(run(&["functional", "R", "a"]).0, 2);
    assert_eq!(run(&["functional", "theta", "a", "b"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
