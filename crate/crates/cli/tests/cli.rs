use std::process::{Command, Output};

use serde_json::Value;

fn osp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(args: &[&str]) -> (i32, Value) {
    let o = osp(args);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)));
    (code(&o), v)
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schema/report.schema.json"
    ))
    .unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let s = schema();
    let errors: Vec<String> = s
        .iter_errors(v)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn theorem_report_is_valid_and_proved() {
    let (c, v) = json(&["verify", "theorem", "--json"]);
    assert_eq!(c, 0);
    assert_valid(&v);
    assert_eq!(v["status"], "proved");
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["counts"]["inconclusive"], 0);
    let s = &v["suites"][0];
    assert_eq!(s["suite"], "theorem");
    assert!(s["completion"]["rules"].as_u64().unwrap() > 0);
    assert_eq!(s["completion"]["closed_to"], s["degree_bound"]);
}

#[test]
fn classical_at_two_two() {
    let (c, v) = json(&["verify", "classical", "-m", "2", "-n", "2", "--json"]);
    assert_eq!(c, 0);
    assert_valid(&v);
    assert_eq!(v["signature"]["m"], 2);
    assert_eq!(
        v["counts"]["proved"].as_u64().unwrap(),
        v["suites"][0]["instances"].as_array().unwrap().len() as u64
    );
}

#[test]
fn prop6_samples_and_rejection() {
    let (c, v) = json(&["verify", "prop6", "--samples", "20", "--json"]);
    assert_eq!(c, 0);
    assert_valid(&v);
    let s = &v["suites"][0];
    assert_eq!(s["samples"]["seed"], 20_250_917);
    assert!(s["samples"]["per_triple"].as_u64().unwrap() >= 20);
    assert_eq!(s["instances"].as_array().unwrap().len(), 6);
    let rejected: Vec<&str> = s["rejected"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(rejected, ["prop6[even,odd,odd]", "prop6[odd,odd,odd]"]);
}

#[test]
fn seed_changes_points_only() {
    let (_, a) = json(&["verify", "prop6", "--json", "--seed", "1"]);
    let (_, b) = json(&["verify", "prop6", "--json", "--seed", "2"]);
    assert_ne!(
        a["suites"][0]["samples"]["points"],
        b["suites"][0]["samples"]["points"]
    );
    assert_eq!(a["suites"][0]["instances"], b["suites"][0]["instances"]);
}

#[test]
fn small_bound_is_inconclusive() {
    let (c, v) = json(&["verify", "theorem", "--degree-bound", "2", "--json"]);
    assert_eq!(c, 2);
    assert_valid(&v);
    assert_eq!(v["status"], "inconclusive");
    assert_eq!(v["counts"]["refuted"], 0);
    let inst = v["suites"][0]["instances"].as_array().unwrap();
    assert!(inst
        .iter()
        .any(|i| i["status"] == "inconclusive" && i["residual"].is_string()));
}

#[test]
fn usage_errors() {
    for args in [
        &["verify"][..],
        &["verify", "nonsense"],
        &["cartan", "-m", "0"],
        &["verify", "theorem", "--q0", "1"],
        &["verify", "prop6", "--samples", "0"],
        &["reduce", "e1 *"],
        &["reduce", "e3"],
    ] {
        assert_eq!(code(&osp(args)), 64, "{args:?}");
    }
    assert_eq!(code(&osp(&["--help"])), 0);
}

#[test]
fn sampled_mode_agrees_with_symbolic() {
    let (_, sym) = json(&["verify", "theorem", "--json"]);
    for q0 in ["2", "-3/5"] {
        let (c, v) = json(&["verify", "theorem", "--json", "--q0", q0]);
        assert_eq!(c, 0, "q0 = {q0}");
        assert_valid(&v);
        assert_eq!(v["q_mode"]["mode"], "sampled");
        let names = |x: &Value| -> Vec<(String, String)> {
            x["suites"][0]["instances"]
                .as_array()
                .unwrap()
                .iter()
                .map(|i| {
                    (
                        i["name"].as_str().unwrap().to_string(),
                        i["status"].as_str().unwrap().to_string(),
                    )
                })
                .collect()
        };
        assert_eq!(names(&v), names(&sym));
    }
}

#[test]
fn traces_are_included_on_request() {
    let (_, v) = json(&["verify", "roundtrip", "--json", "--trace"]);
    assert_valid(&v);
    assert!(v["suites"][0]["instances"]
        .as_array()
        .unwrap()
        .iter()
        .all(|i| i["trace"].is_array()));
    let (_, v) = json(&["verify", "roundtrip", "--json"]);
    assert!(v["suites"][0]["instances"]
        .as_array()
        .unwrap()
        .iter()
        .all(|i| i.get("trace").is_none()));
}

#[test]
fn reduce_outputs() {
    let o = osp(&["reduce", "e1*f1 + f1*e1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "(k1 - kb1)/(q - q^-1)");
    assert_eq!(stdout(&osp(&["reduce", "k1*kb1"])).trim(), "1");
    assert_eq!(stdout(&osp(&["reduce", "a-2"])).trim(), "sqrt2*(e2)");

    let (c, v) = json(&["reduce", "e2*e2*f2 - f2*e2*e2", "--json", "--trace"]);
    assert_eq!(c, 0);
    assert_eq!(v["bound_hit"], false);
    assert!(v["steps"].as_u64().unwrap() > 0);
    assert_eq!(
        v["trace"].as_array().unwrap().len() as u64,
        v["steps"].as_u64().unwrap()
    );

    let o = osp(&["reduce", "e1*f1 + f1*e1", "--q0", "2"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains('q'), "{}", stdout(&o));
}

#[test]
fn reduce_bound_hit_is_inconclusive() {
    let o = osp(&["reduce", "e2*e1*e2*e1", "--degree-bound", "2"]);
    assert_eq!(code(&o), 2, "{}", stdout(&o));
}

#[test]
fn cartan_output() {
    let o = osp(&["cartan", "-m", "1", "-n", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("[[0,1],[1,-1]]"));
    let (c, v) = json(&["cartan", "-m", "4", "-n", "4", "--check-b44", "--json"]);
    assert_eq!(c, 0);
    assert_eq!(v["b44_check"], "pass");
    assert_eq!(v["matrix"].as_array().unwrap().len(), 8);
}

#[test]
fn present_fingerprint_is_stable() {
    let a = stdout(&osp(&["present", "--kind", "green", "-m", "2", "-n", "1"]));
    let b = stdout(&osp(&["present", "--kind", "green", "-m", "2", "-n", "1"]));
    assert_eq!(a, b);
    let fp = a
        .lines()
        .last()
        .unwrap()
        .strip_prefix("sha256 ")
        .unwrap()
        .to_string();
    let (_, v) = json(&["present", "--kind", "green", "-m", "2", "-n", "1", "--json"]);
    assert_eq!(v["fingerprint"], fp.as_str());
    let classical = stdout(&osp(&[
        "present",
        "--kind",
        "green",
        "-m",
        "2",
        "-n",
        "1",
        "--classical",
    ]));
    assert_ne!(classical, a);

    // The report fingerprint is the fingerprint of the presentation in use.
    let (_, r) = json(&["verify", "prop5", "--json"]);
    let (_, p) = json(&["present", "--json"]);
    assert_eq!(r["suites"][0]["presentation_fingerprint"], p["fingerprint"]);
}

#[test]
fn workers_do_not_change_the_report() {
    let (_, a) = json(&[
        "verify",
        "roundtrip",
        "-m",
        "1",
        "-n",
        "2",
        "--json",
        "--workers",
        "1",
    ]);
    let (_, b) = json(&[
        "verify",
        "roundtrip",
        "-m",
        "1",
        "-n",
        "2",
        "--json",
        "--workers",
        "4",
    ]);
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn converse_report_is_valid() {
    let (c, v) = json(&["converse", "--json"]);
    assert_valid(&v);
    assert_ne!(c, 1, "{v:#}");
    assert_eq!(v["counts"]["refuted"], 0);
}

#[test]
fn exit_code_fixture_matrix() {
    let cases: [(&[&str], i32, &str); 5] = [
        (
            &["check", "[[a-1, a+1]] = -2*(L1 - Lb1)/(q - qb)"],
            0,
            "proved",
        ),
        (
            &["check", "[[a-1, a+1]] = -3*(L1 - Lb1)/(q - qb)"],
            1,
            "refuted",
        ),
        (&["check", "L1*a+1 = q*(a+1*L1)"], 1, "refuted"),
        (
            &["check", "e2*e1*e2*e1 = e1*e2*e1*e2", "--degree-bound", "3"],
            2,
            "inconclusive",
        ),
        (
            &[
                "check",
                "[[a-1, a+1]] = -3*(L1 - Lb1)/(q - qb)",
                "--q0=-3/5",
            ],
            1,
            "refuted",
        ),
    ];
    for (args, want, status) in cases {
        let mut a = args.to_vec();
        a.push("--json");
        let (c, v) = json(&a);
        assert_valid(&v);
        assert_eq!(
            (c, v["status"].as_str().unwrap()),
            (want, status),
            "{args:?}"
        );
        assert_eq!(v["exit_code"], want);
        if status == "refuted" {
            assert!(v["suites"][0]["instances"][0]["witness"].is_string());
        }
    }
    assert_eq!(code(&osp(&["check", "e1 e2"])), 64);
    assert_eq!(code(&osp(&["check", "e3 = 0"])), 64);
}
