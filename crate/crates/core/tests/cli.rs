use std::process::{Command, Output};

fn rwps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rwps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const HALF: &str = r#"{"kind":"ultraspherical","alpha":"1/2"}"#;

#[test]
fn expand_prints_the_sieved_polynomial() {
    let o = rwps(&["expand", "--family-json", HALF, "--k", "2", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/2*T5 + 1/6*T3 + 1/3*T1\n");
}

#[test]
fn minpoly_in_every_format() {
    let o = rwps(&["minpoly", "--k", "5"]);
    assert_eq!(stdout(&o), "x^2 - x - 1\n");
    let o = rwps(&["minpoly", "--k", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["artifact"], "minpoly");
    assert_eq!(v["degree"], 2);
    for format in ["csv", "latex"] {
        let o = rwps(&["minpoly", "--k", "7", "--format", format]);
        assert_eq!(o.status.code(), Some(0), "{format}");
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn characterize_exit_status_reflects_the_verdict() {
    let sieved = r#"{"kind":"sieved","k":2,"inner":{"kind":"ultraspherical","alpha":"1/2"}}"#;
    let o = rwps(&[
        "characterize",
        "--family-json",
        sieved,
        "--k",
        "2",
        "--horizon",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = rwps(&[
        "characterize",
        "--family-json",
        HALF,
        "--k",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["artifact"], "characterize");
    assert_eq!(v["horizon"], 24);
    let conditions = v["conditions"].as_array().unwrap();
    assert!(conditions.iter().all(|c| c["verdict"] == "fails"));
}

#[test]
fn mode_selects_one_kappa_variant() {
    let o = rwps(&[
        "characterize",
        "--family-json",
        HALF,
        "--k",
        "3",
        "--mode",
        "weakened",
        "--format",
        "json",
    ]);
    let text = stdout(&o);
    assert!(text.contains("thm3.2-iv-weakened"));
    assert!(!text.contains(r#""thm3.2-iv""#));
}

#[test]
fn input_errors_exit_with_two() {
    let cases: [&[&str]; 5] = [
        &["expand", "--family-json", HALF, "--k", "0", "--m", "3"],
        &[
            "expand",
            "--family-json",
            r#"{"kind":"table","c":["3/2"]}"#,
            "--k",
            "1",
            "--m",
            "3",
        ],
        &["expand", "--family-json", "{", "--k", "1", "--m", "3"],
        &["transmogrify", "--k", "2"],
        &["fourier", "--family-json", HALF, "--k", "2"],
    ];
    for args in cases {
        let o = rwps(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&o.stderr).starts_with("error:"),
            "{args:?}"
        );
    }
}

#[test]
fn random_families_follow_the_seed() {
    let random = r#"{"kind":"random","len":8}"#;
    let run = |seed: &str| {
        stdout(&rwps(&[
            "expand",
            "--family-json",
            random,
            "--k",
            "3",
            "--m",
            "9",
            "--seed",
            seed,
        ]))
    };
    assert_eq!(run("11"), run("11"));
    assert_ne!(run("11"), run("12"));
}

#[test]
fn config_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.json");
    std::fs::write(
        &config,
        format!(r#"{{"command":"tables","family":{HALF},"n":3,"format":"csv"}}"#),
    )
    .unwrap();
    let out = dir.path().join("tables.csv");
    let o = rwps(&[
        "--config",
        config.to_str().unwrap(),
        "--n",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written.starts_with("table,n,j,value\n"));
    assert!(written.contains("p,2,0,1/6\n"));
    assert!(!written.contains(",3,"));
}
