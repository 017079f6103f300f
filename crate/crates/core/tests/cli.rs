use std::process::{Command, Output};

use qhex::exact::{from_json, to_json};
use qhex::oracle::{enumerate_families, RegionSpec, DEFAULT_CAP};
use qhex::LaurentPoly;

fn qhex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhex")).args(args).env_remove("QHEX_CAP").output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = qhex(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn first_line_poly(stdout: &str) -> LaurentPoly {
    from_json(stdout.lines().next().expect("output")).expect("canonical json")
}

fn quarter(exps: &[i64]) -> LaurentPoly {
    LaurentPoly::from_terms(exps.iter().map(|&e| (e, qhex::BigRational::new(1.into(), 4.into()))))
}

#[test]
fn gf_examples() {
    let p = first_line_poly(&ok(&["gf", "0", "1", "1", "0", "--method", "dp"]));
    let half = qhex::BigRational::new(1.into(), 2.into());
    assert_eq!(
        p,
        LaurentPoly::from_terms([(-2, half.clone()), (0, qhex::BigRational::from_integer(1.into())), (2, half)])
    );
    assert!(first_line_poly(&ok(&["gf", "0", "0", "0", "5"])).is_zero());
    assert_eq!(first_line_poly(&ok(&["gf", "1", "0", "3", "0"])), quarter(&[-3, -1, 1, 3]));
}

#[test]
fn gf_closed_reports_agreement() {
    let out = ok(&["gf", "--method", "closed", "--", "-2", "3", "1", "-1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let parsed: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert!(parsed.get("num").is_some() && parsed.get("den").is_some());
    assert_eq!(lines[1], "rf_eq(closed, dp) = true");
}

#[test]
fn region_examples() {
    let one = ok(&["region", "--m", "1", "--k", "1", "--dents", "0", "--all"]);
    let half = qhex::BigRational::new(1.into(), 2.into());
    assert_eq!(first_line_poly(&one), LaurentPoly::from_terms([(-1, half.clone()), (1, half)]));

    // prefactor q^5/4 / ((1-q^2)(1-q^4)) times q^-8 (1-q^4)(1-q^8)
    let closed = ok(&["region", "--m", "2", "--dents", "0,1", "--route", "closed", "--pretty"]);
    assert_eq!(first_line_poly(&closed), quarter(&[-3, -1, 1, 3]));
    assert_eq!(closed.lines().count(), 2);

    assert!(first_line_poly(&ok(&["region", "--m", "2", "--dents", "1,2"])).is_zero());
    assert!(first_line_poly(&ok(&["lgv", "--m", "2", "--dents", "1,2", "--all"])).is_zero());
}

#[test]
fn all_routes_agree_on_small_regions() {
    for m in 1..=3 {
        for k in 0..=2 {
            for r in RegionSpec::all_admissible(m, k) {
                let dents = r.dents().values().iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                let (m, k) = (m.to_string(), k.to_string());
                let out = ok(&["family", "--m", &m, "--k", &k, "--dents", &dents, "--all"]);
                let lgv = ok(&["lgv", "--m", &m, "--k", &k, "--dents", &dents]);
                assert_eq!(out, lgv, "{r:?}");
            }
        }
    }
}

#[test]
fn json_output_round_trips() {
    let out = ok(&["lgv", "--m", "3", "--k", "2", "--dents", "-3,0,2"]);
    let line = out.lines().next().unwrap();
    assert_eq!(to_json(&from_json(line).unwrap()), line);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&qhex(&["closed", "--m", "1", "--dents", "1"])), 2);
    assert_eq!(code(&qhex(&["lgv", "--m", "2", "--dents", "1,0"])), 2);
    assert_eq!(code(&qhex(&["lgv", "--m", "2", "--dents", "0"])), 2);
    assert_eq!(code(&qhex(&["verify", "nope"])), 2);
    assert_eq!(code(&qhex(&["gf", "1", "2"])), 2);

    let capped = Command::new(env!("CARGO_BIN_EXE_qhex"))
        .args(["family", "--m", "3", "--k", "2", "--dents", "-4,-1,2"])
        .env("QHEX_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 4);
    let bad_cap = Command::new(env!("CARGO_BIN_EXE_qhex"))
        .args(["family", "--m", "1", "--dents", "0"])
        .env("QHEX_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&bad_cap), 2);
}

#[test]
fn verify_examples() {
    ok(&["verify", "prop1", "--max-m", "3"]);
    ok(&["verify", "krat", "--max-m", "2"]);
    let out = ok(&["verify", "endtoend", "--max-m", "3", "--max-k", "2"]);
    assert!(out.starts_with("endtoend"), "{out}");
}

fn svg_labels(path: &std::path::Path) -> Vec<i64> {
    let text = std::fs::read_to_string(path).unwrap();
    let doc = roxmltree::Document::parse(&text).expect("well-formed svg");
    let mut v: Vec<i64> = doc
        .descendants()
        .filter(|n| n.has_tag_name("text") && n.attribute("class") == Some("label"))
        .map(|n| n.text().unwrap().parse().unwrap())
        .collect();
    v.sort_unstable();
    v
}

#[test]
fn render_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("one.svg");
    ok(&["render", "--m", "1", "--k", "1", "--dents", "0", "--family", "0", "--out", out.to_str().unwrap()]);
    assert_eq!(svg_labels(&out), vec![1]);

    ok(&["render", "--m", "1", "--dents", "0", "--tiling", "--out", out.to_str().unwrap()]);
    assert!(svg_labels(&out).is_empty());

    let r = RegionSpec::new(3, 1, vec![-2, 0, 1]).unwrap();
    for (i, f) in enumerate_families(&r, DEFAULT_CAP).unwrap().iter().enumerate() {
        ok(&[
            "render",
            "--m",
            "3",
            "--k",
            "1",
            "--dents",
            "-2,0,1",
            "--family",
            &i.to_string(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(svg_labels(&out), f.label_multiset());
    }

    let past_end = qhex(&["render", "--m", "1", "--dents", "0", "--family", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&past_end), 2);
}
