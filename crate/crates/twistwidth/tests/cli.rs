//! End-to-end tests running the `twistwidth` binary against the fixture
//! files, covering exit codes, text/json agreement and round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistwidth"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?} stderr: {}", stderr(&out));
    stdout(&out)
}

fn json_of(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&run_ok(args)).expect("output should be valid json")
}

#[test]
fn dm_check_reports_axiom_status() {
    let d_b = fixture("d_b.json");
    assert!(run_ok(&["dm", "check", d_b.to_str().unwrap()]).contains("holds"));

    let d_r = fixture("d_r.json");
    let v = json_of(&["--format", "json", "dm", "check", d_r.to_str().unwrap()]);
    assert_eq!(v["holds"], serde_json::json!(false));
    assert_eq!(v["witness"]["x"], serde_json::json!([]));
    assert_eq!(v["witness"]["y"], serde_json::json!([3, 4, 5]));
    assert_eq!(v["witness"]["u"], serde_json::json!(3));
}

#[test]
fn dm_width_and_maxwidth() {
    let d_r = fixture("d_r.json");
    let v = json_of(&["--format", "json", "dm", "width", d_r.to_str().unwrap()]);
    assert_eq!(v["r_min"], serde_json::json!(0));
    assert_eq!(v["r_max"], serde_json::json!(4));
    assert_eq!(v["width"], serde_json::json!(4));

    let fast = run_ok(&["dm", "maxwidth", d_r.to_str().unwrap()]);
    let brute = run_ok(&["dm", "maxwidth", "--brute", d_r.to_str().unwrap()]);
    assert_eq!(fast.trim(), "5");
    assert_eq!(brute.trim(), "5");

    let v = json_of(&["--format", "json", "dm", "maxwidth", "--brute", d_r.to_str().unwrap()]);
    assert_eq!(v["max_twist_width"], serde_json::json!(5));
    assert_eq!(v["method"], serde_json::json!("bruteforce"));
}

#[test]
fn dm_twist_empty_subset_round_trips_byte_identically() {
    for name in ["d_b.json", "d_r.json", "f53.json", "d_0.json"] {
        let path = fixture(name);
        let original = std::fs::read_to_string(&path).unwrap();
        let out = run_ok(&["dm", "twist", path.to_str().unwrap()]);
        assert_eq!(out, original, "{name} did not round-trip");
    }
}

#[test]
fn dm_twist_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("twisted.json");
    run_ok(&[
        "dm",
        "twist",
        "-A",
        "1,2",
        "-o",
        out_path.to_str().unwrap(),
        fixture("d_b.json").to_str().unwrap(),
    ]);
    let twisted = twistwidth::io::parse_set_system_file(&out_path).unwrap();
    let expected = twistwidth::fixtures::d_b()
        .twist(twistwidth::Subset::from_elements(&[1, 2], 4).unwrap())
        .unwrap();
    assert_eq!(twisted, expected);
}

#[test]
fn dm_hat_lists_attaining_feasible_sets() {
    let v = json_of(&["--format", "json", "dm", "hat", fixture("f53.json").to_str().unwrap()]);
    assert_eq!(
        v["hat_family"],
        serde_json::json!([[1, 3], [2, 3], [1, 4], [2, 4]])
    );
}

#[test]
fn dm_monotone_canonical_reaches_the_maximum() {
    let v = json_of(&[
        "--format",
        "json",
        "dm",
        "monotone",
        fixture("d_b.json").to_str().unwrap(),
    ]);
    assert_eq!(v["max_twist_width"], serde_json::json!(4));
    assert_eq!(v["feasible_final"], serde_json::json!(true));
    let widths: Vec<u64> = v["widths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert!(widths.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(widths.last(), Some(&4));
}

#[test]
fn dm_monotone_replays_scripts() {
    let v = json_of(&[
        "--format",
        "json",
        "dm",
        "monotone",
        "--script",
        fixture("script_d_b.json").to_str().unwrap(),
        fixture("d_b.json").to_str().unwrap(),
    ]);
    assert_eq!(v["sequence"], serde_json::json!([1, 2]));
    assert_eq!(v["widths"], serde_json::json!([2, 2, 4]));

    let v = json_of(&[
        "--format",
        "json",
        "dm",
        "monotone",
        "--script",
        fixture("script_f53.json").to_str().unwrap(),
        fixture("f53.json").to_str().unwrap(),
    ]);
    assert_eq!(v["sequence"], serde_json::json!([1, 3]));
}

#[test]
fn dm_monotone_rejects_non_delta_matroids() {
    let out = run(&["dm", "monotone", fixture("d_r.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NotDeltaMatroid"), "stderr: {}", stderr(&out));
}

#[test]
fn dm_profile_reports_prefix_widths() {
    let v = json_of(&[
        "--format",
        "json",
        "dm",
        "profile",
        "-S",
        "1,2",
        fixture("d_b.json").to_str().unwrap(),
    ]);
    assert_eq!(v["widths"], serde_json::json!([2, 2, 4]));
}

#[test]
fn rg_genus_and_boundaries() {
    let r4 = fixture("r4.json");
    assert_eq!(run_ok(&["rg", "genus", r4.to_str().unwrap()]).trim(), "2");

    let v = json_of(&["--format", "json", "rg", "genus", r4.to_str().unwrap()]);
    assert_eq!(v["euler_genus"], serde_json::json!(2));
    assert_eq!(v["vertices"], serde_json::json!(1));
    assert_eq!(v["edges"], serde_json::json!(4));
    assert_eq!(v["components"], serde_json::json!(1));

    let v = json_of(&[
        "--format",
        "json",
        "rg",
        "boundaries",
        "-A",
        "1,2,3,4",
        r4.to_str().unwrap(),
    ]);
    assert_eq!(v["count"], serde_json::json!(3));
}

#[test]
fn rg_quasitrees_match_even_feasible_sets() {
    let v = json_of(&["--format", "json", "rg", "quasitrees", fixture("t2.json").to_str().unwrap()]);
    assert_eq!(v["quasi_trees"], serde_json::json!([[], [1, 2]]));
}

#[test]
fn rg_dm_of_r4_matches_the_f53_fixture() {
    let out = run_ok(&["rg", "dm", fixture("r4.json").to_str().unwrap()]);
    let expected = std::fs::read_to_string(fixture("f53.json")).unwrap();
    assert_eq!(out, expected);
}

#[test]
fn rg_pdual_then_genus_matches_pdgenus() {
    let dir = tempfile::tempdir().unwrap();
    let dual_path = dir.path().join("dual.json");
    run_ok(&[
        "rg",
        "pdual",
        "-A",
        "1,3",
        "-o",
        dual_path.to_str().unwrap(),
        fixture("r4.json").to_str().unwrap(),
    ]);
    assert_eq!(run_ok(&["rg", "genus", dual_path.to_str().unwrap()]).trim(), "4");
    assert_eq!(
        run_ok(&["rg", "pdgenus", "-A", "1,3", fixture("r4.json").to_str().unwrap()]).trim(),
        "4"
    );
}

#[test]
fn rg_maxpdgenus_and_deficiency() {
    let r4 = fixture("r4.json");
    assert_eq!(run_ok(&["rg", "maxpdgenus", r4.to_str().unwrap()]).trim(), "4");
    assert_eq!(run_ok(&["rg", "deficiency", r4.to_str().unwrap()]).trim(), "1");

    let v = json_of(&["--format", "json", "rg", "maxpdgenus", r4.to_str().unwrap()]);
    assert_eq!(v["max_pd_genus"], serde_json::json!(4));
}

#[test]
fn verify_all_passes_and_emits_per_property_lines() {
    let out = run(&["verify", "all", "--seed", "42", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("pass")), "{text}");

    let v = serde_json::from_str::<serde_json::Value>(&run_ok(&[
        "--format", "json", "verify", "all", "--seed", "42", "--trials", "5",
    ]))
    .unwrap();
    assert_eq!(v["all_passed"], serde_json::json!(true));
}

#[test]
fn malformed_input_exits_two_without_crashing() {
    let dir = tempfile::tempdir().unwrap();

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();

    let missing = dir.path().join("does_not_exist.json");

    for path in [&garbage, &missing] {
        for tool in [["dm", "width"], ["dm", "check"], ["rg", "genus"]] {
            let out = run(&[tool[0], tool[1], path.to_str().unwrap()]);
            assert_eq!(
                out.status.code(),
                Some(2),
                "{tool:?} on {path:?}: {}",
                stderr(&out)
            );
        }
    }

    // a well-formed file with out-of-range content is a domain error
    let bad_ground = dir.path().join("bad_ground.json");
    std::fs::write(&bad_ground, r#"{"ground":2,"feasible":[[1,7]]}"#).unwrap();
    let out = run(&["dm", "width", bad_ground.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("OutOfRangeElement"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["dm", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["dm", "profile", "-S", "1,x", fixture("d_b.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_and_json_agree_on_numbers() {
    let d_b = fixture("d_b.json");
    let text = run_ok(&["dm", "maxwidth", d_b.to_str().unwrap()]);
    let v = json_of(&["--format", "json", "dm", "maxwidth", d_b.to_str().unwrap()]);
    assert_eq!(text.trim().parse::<u64>().unwrap(), v["max_twist_width"].as_u64().unwrap());

    let t2 = fixture("t2.json");
    let text = run_ok(&["rg", "genus", t2.to_str().unwrap()]);
    let v = json_of(&["--format", "json", "rg", "genus", t2.to_str().unwrap()]);
    assert_eq!(text.trim().parse::<u64>().unwrap(), v["euler_genus"].as_u64().unwrap());
}
