use std::process::Command;

use gonal_bn_cli::run;

fn cli(args: &[&str]) -> gonal_bn_cli::Outcome {
    run(std::iter::once("gonal-bn").chain(args.iter().copied()))
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["classify", "--g", "10", "--nu", "3", "--d", "26"][..],
        &["classify", "--g", "11", "--nu", "5", "--d", "27"][..],
        &["sweep", "--g-min", "8", "--g-max", "9"][..],
        &["audit", "--g-min", "8", "--g-max", "10"][..],
        &["ext", "--g", "10", "--d", "25", "--delta", "18"][..],
        &[
            "splitting",
            "w",
            "--g",
            "10",
            "--nu",
            "4",
            "--r",
            "1",
            "--ell",
            "1",
            "--d",
            "7",
        ][..],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        let parsed: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(again, out.stdout);
    }
}

#[test]
fn classify_schema_keys_in_order() {
    let out = cli(&["classify", "--g", "10", "--nu", "3", "--d", "26"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["input", "case", "empty", "components", "warnings", "ambiguous"]);
    let comp = v["components"][0].as_object().unwrap();
    let keys: Vec<&str> = comp.keys().map(|k| k.as_str()).collect();
    assert_eq!(
        keys,
        [
            "kind",
            "dim",
            "expected_dim",
            "status",
            "generically_smooth",
            "birational",
            "presentation",
            "segre",
            "proved_for_genus_at_least"
        ]
    );
    assert_eq!(v["components"][1]["dim"], 22);
    assert_eq!(v["components"][1]["segre"]["exact"], 4);
}

#[test]
fn empty_verdict_exits_zero() {
    let out = cli(&["classify", "--g", "10", "--nu", "3", "--d", "36"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["empty"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 0);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 0);
}

#[test]
fn validation_failures_exit_two_with_one_line() {
    for args in [
        &["classify", "--g", "10", "--nu", "3", "--d", "40"][..],
        &["classify", "--g", "10", "--nu", "7", "--d", "20"][..],
        &["classify", "--g", "10", "--nu", "3"][..],
        &[
            "splitting",
            "w",
            "--g",
            "10",
            "--nu",
            "4",
            "--r",
            "1",
            "--ell",
            "2",
            "--d",
            "7",
        ][..],
        &[
            "ext",
            "--g",
            "10",
            "--d",
            "26",
            "--delta",
            "18",
            "--sigma",
            "12",
            "--family-dim",
            "3",
        ][..],
        &["sweep", "--g-min", "3", "--g-max", "9"][..],
        &["fixed-det", "--g", "10", "--nu", "5", "--d", "26"][..],
        &["bogus"][..],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert_eq!(out.stderr.lines().count(), 1, "{args:?}: {}", out.stderr);
        assert!(out.stderr.starts_with("error: "));
    }
}

#[test]
fn sweep_csv_header_and_blank_cells() {
    let out = cli(&["sweep", "--g-min", "8", "--g-max", "8", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("g,nu,d,case,dim_reg,dim_sup,rho,superabundant"));
    assert_eq!(lines.next(), Some("8,3,14,VI,25,,25,false"));
    assert!(out.stdout.contains("8,3,28,I,,,-3,false"));
}

#[test]
fn sweep_json_uses_null_for_absent_components() {
    let out = cli(&["sweep", "--g-min", "8", "--g-max", "8"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["rows"][0]["dim_sup"].is_null());
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("gonal-bn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("classify.json");
    let out = cli(&[
        "classify",
        "--g",
        "10",
        "--nu",
        "3",
        "--d",
        "21",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        cli(&["classify", "--g", "10", "--nu", "3", "--d", "21"]).stdout
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gonal-bn");
    let ok = Command::new(bin)
        .args(["pencil", "--g", "10", "--nu", "4", "--t", "5"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["case"], "gonal_only");
    assert_eq!(v["components"][0]["dim"], 1);

    let bad = Command::new(bin)
        .args(["rank1", "--g", "10", "--nu", "4", "--r", "-1", "--d", "7"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn splitting_max_reports_both_vectors() {
    let out = cli(&["splitting", "max", "--nu", "4", "--total", "-6", "--r", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let vectors: Vec<&serde_json::Value> = v["maximal"].as_array().unwrap().iter().map(|x| &x["vector"]).collect();
    assert_eq!(
        vectors,
        [&serde_json::json!([-3, -3, 0, 0]), &serde_json::json!([-3, -2, -2, 1])]
    );
}
