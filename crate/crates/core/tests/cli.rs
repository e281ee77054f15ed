//! Command-line behaviour through the library entry point and the binary.

use std::process::Command;

use hopfforge::cli::run;

fn cli(args: &[&str]) -> (i32, String) {
    run(std::iter::once("hopfforge").chain(args.iter().copied()))
}

#[test]
fn documented_examples() {
    assert_eq!(
        cli(&["nf", "--algebra", "C:m=2", "g*y"]),
        (0, "y*g + g^2 - g\n".into())
    );
    assert_eq!(
        cli(&["find-sub", "--algebra", "E:n=1", "--g", "x0", "--y", "y"]),
        (0, "f = y, xi = -1, beta = 0\n".into())
    );
    let (code, out) = cli(&["gk", "--algebra", "A:b=1,xi=2", "--N", "16", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["dims"][0], 4);
    assert_eq!(v["dims"][1], 9);
}

#[test]
fn every_subcommand_answers() {
    let cases: &[&[&str]] = &[
        &["coprod", "--algebra", "F:t=1", "x*y"],
        &["antipode", "--algebra", "F:t=2", "y"],
        &["counit", "--algebra", "E:n=1", "y^2"],
        &["check-hopf", "--algebra", "E:n=1", "--trials", "5"],
        &["check-grading", "--algebra", "F:t=1", "--trials", "10"],
        &[
            "skew-prim",
            "--algebra",
            "F:t=1",
            "--pair-v",
            "x",
            "--ydeg",
            "1",
            "--ebound",
            "3",
        ],
        &["group-like", "--algebra", "F:t=2", "--ebound", "4"],
        &["classify", "--algebra", "F:t=1", "x*y*x^-1"],
        &["orbit", "--beta", "2,-1,0", "--t", "-1", "--smax", "4"],
        &["gk", "--algebra", "Zn:n=2", "--N", "8"],
        &["ball", "--algebra", "heis", "--gens", "x,y", "--N", "12"],
        &["lie-sub", "--lie", "sl2"],
        &[
            "verify-sub",
            "--algebra",
            "E:n=1",
            "--gens",
            "x0,x0^-1,y",
            "--cap",
            "3",
        ],
    ];
    for args in cases {
        let (code, out) = cli(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(!out.is_empty());
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let (code, out) = cli(&with_json);
        assert_eq!(code, 0);
        serde_json::from_str::<serde_json::Value>(&out)
            .unwrap_or_else(|e| panic!("{args:?}: {e}: {out}"));
    }
}

#[test]
fn outputs() {
    assert_eq!(
        cli(&["coprod", "--algebra", "F:t=1", "x*y"]).1,
        "x*y (x) x + x^2 (x) x*y\n"
    );
    assert_eq!(cli(&["antipode", "--algebra", "F:t=2", "y"]).1, "-x^-2*y\n");
    assert_eq!(cli(&["counit", "--algebra", "E:n=1", "y^2"]).1, "0\n");
    assert_eq!(
        cli(&["lie-sub", "--lie", "sl2"]).1,
        "u = h, v = e, [u,v] = 2*e\n"
    );
    let (_, csv) = cli(&["gk", "--algebra", "Zn:n=2", "--N", "8"]);
    assert!(csv.starts_with("n,dim\n1,5\n2,13\n"), "{csv}");
    assert!(csv.contains("# gk estimate: degree 2"));
    let (_, gl) = cli(&[
        "group-like",
        "--algebra",
        "F:t=2",
        "--ebound",
        "4",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&gl).unwrap();
    assert_eq!(v["count"], 9);
}

#[test]
fn json_is_deterministic_for_a_seed() {
    let args = [
        "check-hopf",
        "--algebra",
        "C:m=3",
        "--trials",
        "8",
        "--seed",
        "42",
        "--json",
    ];
    assert_eq!(cli(&args), cli(&args));
}

#[test]
fn errors_give_nonzero_status() {
    let (code, out) = cli(&["nf", "--algebra", "F:t=1", "x y"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error: parse error at 2"), "{out}");
    assert_eq!(cli(&["nf", "--algebra", "F:t=1", "q"]).0, 1);
    assert_eq!(cli(&["nf", "--algebra", "F:t=1", "y^-2"]).0, 1);
    assert_eq!(cli(&["nf", "--algebra", "Q:t=1", "x"]).0, 1);
    assert_eq!(cli(&["nf", "x"]).0, 1);
    assert_eq!(
        cli(&[
            "find-sub",
            "--algebra",
            "F:t=1",
            "--g",
            "x",
            "--y",
            "y",
            "--cap",
            "4"
        ])
        .0,
        1
    );
    assert_eq!(cli(&["orbit", "--beta", "0,0", "--t", "1"]).0, 1);
    assert_eq!(cli(&["bogus"]).0, 2);
    let (code, out) = cli(&["nf", "--algebra", "F:t=1", "x y", "--json"]);
    assert_eq!(code, 1);
    assert!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["error"].is_string());
}

#[test]
fn presentation_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("a.json");
    std::fs::write(
        &good,
        r#"{"field": "Q",
            "generators": [{"name": "y", "kind": "skewprimitive", "pair": "g"},
                           {"name": "g", "kind": "grouplike"}],
            "rules": [{"lhs": "g*y", "rhs": "-y*g"}, {"lhs": "g^-1*y", "rhs": "-y*g^-1"}]}"#,
    )
    .unwrap();
    let good = good.to_str().unwrap();
    assert_eq!(
        cli(&["nf", "--algebra", good, "g*y*g"]),
        (0, "-y*g^2\n".into())
    );
    assert_eq!(cli(&["check-hopf", "--algebra", good]).0, 0);

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"field": "Q",
            "generators": [{"name": "y", "kind": "skewprimitive", "pair": "g^2"},
                           {"name": "g", "kind": "grouplike", "weight": 0}],
            "order": ["y", "g^-1", "g"],
            "rules": [{"lhs": "g*y", "rhs": "y*g + g^2 - g"},
                      {"lhs": "g^-1*y", "rhs": "y*g^-1 - 1 + g^-1"}]}"#,
    )
    .unwrap();
    let (code, out) = cli(&["nf", "--algebra", bad.to_str().unwrap(), "g"]);
    assert_eq!(code, 1);
    assert!(out.contains("relation well-definedness"), "{out}");
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfforge"))
        .args(["nf", "--algebra", "E:n=1", "y^2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x0^2 - 1\n");
    let out = Command::new(env!("CARGO_BIN_EXE_hopfforge"))
        .args(["nf", "--algebra", "E:n=1", "y^"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
}
