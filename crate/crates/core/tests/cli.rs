use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use yangian::cli::run;

fn yangian(args: &[&str]) -> yangian::cli::Outcome {
    run(std::iter::once("yangian").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = yangian(&full);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (serde_json::from_str(&out.stdout).unwrap(), out.code)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("yangian-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn walk_rows_in_json() {
    let (v, code) = json(&["walk", "g2", "--weight", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "walk");
    assert_eq!(v["algebra"], "g2");
    assert_eq!(v["experimental"], false);
    assert_eq!(v["order"], 8);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(
        rows[3]["factored"],
        "(u - (a + 3/2))(u - (a + 5/2))(u - (a + 7/2))"
    );
    assert_eq!(rows[2]["variable"], "u/3");
    assert_eq!(rows[2]["rescale"], 3);
    assert_eq!(
        rows[2]["polynomial"],
        "u^2 + (-2/3*a - 1)*u + (1/9*a^2 + 1/3*a + 2/9)"
    );
}

#[test]
fn global_algebra_flag_and_positional_agree() {
    let a = yangian(&["walk", "--algebra", "g2", "--weight", "2"]);
    let b = yangian(&["walk", "g2", "--weight", "2"]);
    assert_eq!(a, b);
    assert_eq!(a.code, 0);
}

#[test]
fn s_sets_in_json() {
    let (v, _) = json(&["tables", "g2"]);
    let s = v["results"]["s_sets"].as_array().unwrap();
    let s22 = s
        .iter()
        .find(|x| x["earlier"] == 2 && x["later"] == 2)
        .unwrap();
    assert_eq!(strings(&s22["differences"]), ["1", "3", "4", "6"]);
}

/// Every `key: value` leaf of the JSON appears, in order, in the text output.
fn leaves(key: &str, v: &Value, out: &mut Vec<String>) {
    let compound = |x: &Value| match x {
        Value::Object(m) => !m.is_empty(),
        Value::Array(a) => !a.is_empty(),
        _ => false,
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            if !key.is_empty() {
                out.push(format!("{key}:"));
            }
            for (k, x) in m {
                leaves(k, x, out);
            }
        }
        Value::Array(items) if items.iter().any(compound) => {
            out.push(format!("{key}:"));
            for (n, x) in items.iter().enumerate() {
                leaves(&format!("[{n}]"), x, out);
            }
        }
        _ => out.push(format!("{key}: {}", flat(v))),
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) if s.is_empty() => "\"\"".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(flat).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}

#[test]
fn text_and_json_carry_the_same_data() {
    let cases: &[&[&str]] = &[
        &["walk", "g2", "--weight", "1"],
        &["walk", "g2", "--weight", "2"],
        &["tables", "g2"],
        &["path", "g2"],
        &[
            "cyclicity",
            "--factors",
            "1:0,1:3,2:1/2-1i",
            "--mode",
            "irr",
        ],
        &[
            "weyl-module",
            "--pi1",
            "0,4",
            "--pi2",
            "2",
            "--fund-dims",
            "15,7",
        ],
        &["dim", "--lambda", "2,1"],
        &["verify", "--suite", "roots"],
    ];
    for args in cases {
        let text = yangian(args);
        let (v, code) = json(args);
        assert_eq!(text.code, code);
        let mut expected = Vec::new();
        leaves("", &v, &mut expected);
        let lines: Vec<&str> = text.stdout.lines().map(str::trim).collect();
        assert_eq!(lines, expected, "{args:?}");
    }
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["tables", "g2", "--format", "json"][..],
        &[
            "weyl-module",
            "--pi1",
            "1,1,1/2+1i",
            "--pi2",
            "1",
            "--format",
            "json",
        ][..],
        &["verify", "--format", "json"][..],
    ] {
        assert_eq!(yangian(args).stdout, yangian(args).stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        yangian(&["cyclicity", "--factors", "1:0,1:7/2", "--mode", "hw"]).code,
        0
    );
    assert_eq!(
        yangian(&["cyclicity", "--factors", "1:0,1:3", "--mode", "hw"]).code,
        1
    );
    assert_eq!(
        yangian(&["cyclicity", "--factors", "1:3,1:0", "--mode", "hw"]).code,
        0
    );
    assert_eq!(
        yangian(&["cyclicity", "--factors", "1:3,1:0", "--mode", "irr"]).code,
        1
    );
    assert_eq!(yangian(&["cyclicity", "--factors", "3:0"]).code, 2);
    assert_eq!(yangian(&["cyclicity", "--factors", "1:1/0"]).code, 2);
    assert_eq!(yangian(&["walk", "g2", "--weight", "3"]).code, 2);
    assert_eq!(
        yangian(&["walk", "g2", "--weight", "1", "--order", "3"]).code,
        2
    );
    assert_eq!(
        yangian(&["walk", "no-such-algebra", "--weight", "1"]).code,
        2
    );
    assert_eq!(yangian(&["tables", "g2", "--word", "1,1,2"]).code, 2);
    assert_eq!(yangian(&["frobnicate"]).code, 2);
    assert_eq!(yangian(&["--help"]).code, 0);
    assert_eq!(yangian(&["verify"]).code, 0);
}

#[test]
fn errors_go_to_stderr() {
    let out = yangian(&["cyclicity", "--factors", "3:0"]);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("out of range"));
}

#[test]
fn violations_are_reported() {
    let (v, code) = json(&["cyclicity", "--factors", "2:0,1:9/2"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["verdict"], "not-certified");
    let viol = &v["results"]["violations"][0];
    assert_eq!((viol["i"].as_u64(), viol["j"].as_u64()), (Some(1), Some(2)));
    assert_eq!(viol["difference"], "9/2");
}

#[test]
fn weyl_module_ordering() {
    let (v, code) = json(&["weyl-module", "--pi1", "0,4", "--pi2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["results"]["factors"]), ["1:4", "2:2", "1:0"]);
    assert_eq!(v["results"]["dimension"]["bound"], Value::Null);
    let (v, _) = json(&["weyl-module", "--pi1", "2", "--pi2", "2"]);
    assert_eq!(strings(&v["results"]["factors"]), ["1:2", "2:2"]);
    let (v, code) = json(&["weyl-module"]);
    assert_eq!(code, 0);
    assert!(v["results"]["factors"].as_array().unwrap().is_empty());
}

#[test]
fn generic_pi_flag() {
    let (v, code) = json(&["weyl-module", "a2", "--pi", "2=1,-1", "--pi", "1=0"]);
    assert_eq!(code, 0);
    assert_eq!(v["experimental"], true);
    assert_eq!(strings(&v["results"]["factors"]), ["2:1", "1:0", "2:-1"]);
}

#[test]
fn dimension_from_config() {
    let cfg = temp_file("dims.toml", "fundamental_dims = [15, 7]\n");
    let (v, _) = json(&["dim", "--lambda", "2,0", "--config", cfg.to_str().unwrap()]);
    assert_eq!(v["results"]["bound"], "225");
    assert_eq!(strings(&v["results"]["reference_dims"]), ["14", "7"]);
    let (v, _) = json(&[
        "dim",
        "--lambda",
        "2,0",
        "--config",
        cfg.to_str().unwrap(),
        "--fund-dims",
        "2,3",
    ]);
    assert_eq!(v["results"]["bound"], "4");
    let (v, _) = json(&["dim", "--lambda", "0,0"]);
    assert_eq!(v["results"]["bound"], Value::Null);
    let (v, _) = json(&["dim", "--lambda", "0,0", "--fund-dims", "15,7"]);
    assert_eq!(v["results"]["bound"], "1");
}

#[test]
fn custom_algebra_file() {
    let file = temp_file("g2.alg", "# G2 again\n2 -1\n-3 2\nd: 3 1\n");
    let path = file.to_str().unwrap();
    let (custom, code) = json(&["tables", path]);
    assert_eq!(code, 0);
    assert_eq!(custom["experimental"], true);
    let (builtin, _) = json(&["tables", "g2"]);
    assert_eq!(custom["results"], builtin["results"]);

    let swapped = temp_file("g2w.alg", "2 -1\n-3 2\nd: 3 1\nword: 2 1 2 1 2 1\n");
    let (v, code) = json(&["walk", swapped.to_str().unwrap(), "--weight", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["word"], serde_json::json!([2, 1, 2, 1, 2, 1]));
    assert_eq!(v["results"]["crosschecks_passed"], true);

    let bad = temp_file("bad.alg", "2 -1\n-1 2\nd: 3 1\n");
    assert_eq!(yangian(&["tables", bad.to_str().unwrap()]).code, 2);
}

#[test]
fn other_reduced_word_is_experimental() {
    let (v, code) = json(&["walk", "g2", "--weight", "2", "--word", "2,1,2,1,2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["experimental"], true);
    assert_eq!(v["results"]["crosschecks_passed"], true);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_yangian");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["cyclicity", "--factors", "1:0,1:7/2", "--mode", "hw"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("verdict: certified"));
    assert_eq!(
        status(&["cyclicity", "--factors", "1:0,1:3", "--mode", "hw"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        status(&["cyclicity", "--factors", "9:0"]).status.code(),
        Some(2)
    );
}
