use std::io::Write;
use std::process::{Command, Output, Stdio};

use ordlen::ordinal::Ordinal;
use serde_json::Value;

const EXAMPLE: &str =
    "x^5*y*z, x^3*y^3*z, x^3*y^2*z^2, x^2*y^3*z^2, x^2*y^2*z^3, x^4*y*z^4, x^6*z^4, x^5*z^5";

fn ordlen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordlen"))
        .args(args)
        .env_remove("ORDLEN_COLOR")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = ordlen(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn length_examples() {
    let out = ordlen(&["length", "--vars", "x,y,z", "--ideal", EXAMPLE]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3*w^2 + 9*w + 7\n");
    let out = ordlen(&["length", "--vars", "x", "--ideal", "x^3"]);
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn open_example() {
    let out = ordlen(&[
        "open", "--vars", "x,y,z", "--ideal", "x^2, x*y", "--sub", "x*z, y",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("open: true\n"));
}

#[test]
fn cycle_json_schema() {
    let v = json(&["cycle", "--vars", "x,y,z", "--ideal", EXAMPLE]);
    assert_eq!(v["pretty"], "3*w^2 + 9*w + 7");
    let len: Ordinal = serde_json::from_value(v["length"].clone()).unwrap();
    assert_eq!(len.to_string(), "3*w^2 + 9*w + 7");
    let cycle = v["cycle"].as_array().unwrap();
    assert_eq!(cycle.len(), 6);
    let xy = cycle
        .iter()
        .find(|e| e["prime"] == serde_json::json!(["x", "y"]))
        .unwrap();
    assert_eq!(xy["mult"], 5);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "length",
        "--vars",
        "x,y,z",
        "--ideal",
        EXAMPLE,
        "--json",
        "--threads",
        "4",
    ];
    let first = ordlen(&args).stdout;
    for _ in 0..3 {
        assert_eq!(ordlen(&args).stdout, first);
    }
    let single = ordlen(&args[..6]).stdout;
    assert_eq!(single, first);
}

#[test]
fn exit_codes() {
    let out = ordlen(&["length", "--vars", "x,y", "--ideal", "x^2, q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown variable"));

    let out = ordlen(&["length", "--vars", "x,y", "--ideal", "x^2 +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));

    let out = ordlen(&["length", "--vars", "x,y", "--ideal", "x", "--upper", "y"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not contained"));

    let out = ordlen(&["oracle", "--vars", "x,y", "--ideal", "x^2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = ordlen(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_subcommand_has_json() {
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "length",
            "--vars",
            "x,y",
            "--ideal",
            "x^2, x*y",
            "--extra-vars",
            "1",
        ],
        vec!["cycle", "--vars", "x,y", "--ideal", "x^2, x*y"],
        vec!["assoc", "--vars", "x,y", "--ideal", "x^2, x*y"],
        vec!["dimfil", "--vars", "x,y", "--ideal", "x^2, x*y"],
        vec!["open", "--vars", "x,y", "--ideal", "x^2, x*y", "--sub", "y"],
        vec![
            "closure", "--vars", "x,y", "--ideal", "x^2, x*y", "--sub", "0",
        ],
        vec![
            "parameter",
            "--vars",
            "x,y",
            "--ideal",
            "x*y",
            "--element",
            "x",
        ],
        vec![
            "semiadd", "--vars", "x,y", "--ideal", "x*y", "--upper", "x, y", "--sub", "x",
        ],
        vec!["stdpairs", "--vars", "x,y", "--ideal", "x^2, x*y"],
        vec!["poset", "--seed", "11", "--size", "5"],
        vec!["oracle", "--vars", "x,y", "--ideal", "x^2, x*y, y^2"],
    ];
    for args in cases {
        let v = json(&args);
        assert!(v.is_object(), "{args:?}");
    }
}

#[test]
fn subcommand_reports() {
    let v = json(&["assoc", "--vars", "x,y", "--ideal", "x^2, x*y"]);
    assert_eq!(v["primes"], serde_json::json!([["x"], ["x", "y"]]));

    let v = json(&[
        "closure", "--vars", "x,y", "--ideal", "x^2, x*y", "--sub", "0",
    ]);
    assert_eq!(v["closure"]["upper"], "x");
    assert_eq!(v["closed"], false);

    let v = json(&[
        "parameter",
        "--vars",
        "x,y",
        "--ideal",
        "x*y",
        "--element",
        "x",
    ]);
    let row = &v["elements"][0];
    assert_eq!(row["is_parameter"], false);
    assert_eq!(row["annihilator_dim"], 1);

    let v = json(&["stdpairs", "--vars", "x,y", "--ideal", "x^2, x*y"]);
    assert_eq!(
        v["pairs"],
        serde_json::json!([{"monomial": "x", "free": []}, {"monomial": "1", "free": ["y"]}])
    );

    let v = json(&["dimfil", "--vars", "x,y,z", "--ideal", EXAMPLE]);
    assert_eq!(v["steps"][1]["pretty"], "9*w + 7");
    assert_eq!(v["reconstruction_matches"], true);

    let v = json(&["oracle", "--vars", "x,y", "--ideal", "x^2, x*y, y^2"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["k_dimension"], 3);

    let v = json(&[
        "length",
        "--vars",
        "x,y",
        "--ideal",
        "x^2, x*y",
        "--extra-vars",
        "1",
    ]);
    assert_eq!(v["extension"]["pretty"], "w^2 + w");
    assert_eq!(v["extension"]["agree"], true);

    let v = json(&[
        "length",
        "--vars",
        "x,y",
        "--ideal",
        "0",
        "--quotient-by",
        "x",
    ]);
    assert_eq!(v["pretty"], "w");
}

#[test]
fn poset_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ordlen"))
        .args(["poset"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"4\n0 < 1\n1 < 2\n0 < 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("length: 2\n"));
}

#[test]
fn color_is_opt_in() {
    let out = Command::new(env!("CARGO_BIN_EXE_ordlen"))
        .args(["open", "--vars", "x,y", "--ideal", "x*y", "--sub", "x"])
        .env("ORDLEN_COLOR", "1")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("\x1b[1m"));
    let plain = ordlen(&["open", "--vars", "x,y", "--ideal", "x*y", "--sub", "x"]);
    assert!(!stdout(&plain).contains('\x1b'));
}
