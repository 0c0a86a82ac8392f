use knotbook::cli::{run, EXIT_CAPACITY, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn knotbook(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("knotbook").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn embed_lists_sheets() {
    let (code, out, _) = knotbook(&["embed", "--n", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("K_7: 4 sheets"), "{out}");
    let (code, csv, _) = knotbook(&["embed", "--n", "6", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(csv.lines().count(), 1 + 15);
    let (code, json, _) = knotbook(&["embed", "--n", "5", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["n"], 5);
}

#[test]
fn identify_trefoil() {
    let (code, out, _) = knotbook(&["identify", "--n", "7", "--cycle", "(1,3,5,7,2,4,6)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("3_1"));
    let (code, json, _) = knotbook(&["identify", "--n", "9", "--cycle", "(1,3,5,7,9,2,4,6,8)", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["knot"], "5_1");
    assert_eq!(value["crossings"], 9);
}

#[test]
fn census_csv() {
    let (code, out, _) = knotbook(&["census", "--n", "8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "n,knot_name,count\n8,unknot,2499\n8,3_1,21\n");
    let (code, text, _) = knotbook(&["census", "--n", "9", "--output", "text", "--workers", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("knotted cycles of all lengths 577"), "{text}");
}

#[test]
fn census_strict_flag() {
    let args = ["census", "--n", "9", "--bracket-threshold", "0"];
    let (code, _, err) = knotbook(&args);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.contains("unidentified"), "{err}");
    let (code, out, _) = knotbook(&[&args[..], &["--strict", "false"]].concat());
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("unidentified["), "{out}");
}

#[test]
fn verify_suites_pass() {
    for theorem in ["lemmas", "torus", "composite", "family"] {
        let (code, out, _) = knotbook(&["verify", "--theorem", theorem]);
        assert_eq!(code, EXIT_OK, "{theorem}: {out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    }
    let (code, out, _) = knotbook(&["verify", "--theorem", "extension", "--samples", "50", "--seed", "7"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(knotbook(&[]).0, EXIT_USAGE);
    assert_eq!(knotbook(&["embed"]).0, EXIT_USAGE);
    assert_eq!(knotbook(&["embed", "--n", "2"]).0, EXIT_USAGE);
    assert_eq!(knotbook(&["identify", "--n", "7", "--cycle", "(1,3,x)"]).0, EXIT_USAGE);
    assert_eq!(knotbook(&["identify", "--n", "7", "--cycle", "(1,3,3)"]).0, EXIT_USAGE);
    assert_eq!(knotbook(&["census", "--n", "13"]).0, EXIT_CAPACITY);
    assert_eq!(knotbook(&["verify", "--theorem", "nope"]).0, EXIT_USAGE);
    let (code, out, _) = knotbook(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("census"));
}
