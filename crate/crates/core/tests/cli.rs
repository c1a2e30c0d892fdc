use serde_json::Value;
use steinberg::cli::{run, Outcome};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn steinberg(args: &[&str]) -> Outcome {
    run(std::iter::once("steinberg").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", out.stdout))
}

#[test]
fn validate_reports_and_exits() {
    let ok = steinberg(&["validate", &data("pair3.json")]);
    assert_eq!(ok.code, 0);
    assert_eq!(json(&ok)["valid"], true);
    assert_eq!(json(&ok)["units"], 3);

    let bad = steinberg(&["validate", &data("broken_z2.json")]);
    assert_eq!(bad.code, 1);
    let v = json(&bad);
    assert_eq!(v["valid"], false);
    assert!(v["violations"][0].as_str().unwrap().contains("compose(g, g)"));
    assert!(v.get("units").is_none());
}

#[test]
fn socle_of_pair3() {
    let out = steinberg(&["socle", &data("pair3.json"), "--field", "q"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["socle_dimension"], 9);
    assert_eq!(v["components"][0]["matrix_size"], 3);
    assert_eq!(v["components"][0]["dimension"], 9);
    assert_eq!(v["generating_units"], serde_json::json!(["u1"]));
    assert_eq!(v["basis"].as_array().unwrap().len(), 9);
}

#[test]
fn socle_refused_without_lp() {
    for file in ["z2.json", "pair2_z2.json"] {
        let out = steinberg(&["socle", &data(file), "--field", "f2"]);
        assert_eq!(out.code, 2);
        let v = json(&out);
        assert_eq!(v["lp_holds"], false);
        assert!(v["explanation"].as_str().unwrap().contains("isotropy"));
    }
}

#[test]
fn minimal_flavors() {
    let out = steinberg(&["minimal", &data("z2.json"), "--unit", "e", "--field", "f2"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["flavor"], "absolute_zero_divisor");
    assert_eq!(v["minimality"]["minimal"], true);
    assert_eq!(v["generator"], serde_json::json!([["1 mod 2", "e"], ["1 mod 2", "g"]]));

    let out = steinberg(&["minimal", &data("z2.json"), "--unit", "e", "--field", "q"]);
    let v = json(&out);
    assert_eq!(v["flavor"], "division_idempotent");
    assert_eq!(v["generator"], serde_json::json!([["1/2", "e"], ["1/2", "g"]]));
    assert_eq!(v["minimality"]["method"], "structured_with_shadow");

    let out = steinberg(&["minimal", &data("z2.json"), "--unit", "g", "--field", "q"]);
    assert_eq!(out.code, 64);
}

#[test]
fn oracle_output() {
    let out = steinberg(&["oracle", &data("z2.json"), "--field", "f2", "--semiprime"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["socle_dimension"], 1);
    assert_eq!(v["semiprime"], false);
    let kinds: Vec<&str> = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, vec!["minimal_ideal_generator", "absolute_zero_divisor"]);

    let v = json(&steinberg(&[
        "oracle",
        &data("z2.json"),
        "--field",
        "f3",
        "--semiprime",
    ]));
    assert_eq!(v["socle_dimension"], 2);
    assert_eq!(v["semiprime"], true);

    assert_eq!(steinberg(&["oracle", &data("z2.json"), "--field", "q"]).code, 64);
}

#[test]
fn graph_socle_outputs() {
    let v = json(&steinberg(&["graph-socle", &data("loop.json")]));
    assert_eq!(v["socle_is_zero"], true);
    assert_eq!(v["blocks"], serde_json::json!([]));

    let v = json(&steinberg(&["graph-socle", &data("loop_exit.json")]));
    assert_eq!(v["blocks"][0]["size"], "infinite");
    assert_eq!(v["blocks"][0]["class_representative"], "w");

    let out = steinberg(&["graph-socle", &data("line3.json"), "--materialize", "--field", "f2"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["blocks"][0]["size"], 3);
    assert_eq!(v["cross_check"]["agrees"], true);
    assert_eq!(v["cross_check"]["oracle"][0]["oracle_method"], "exhaustive");

    let v = json(&steinberg(&["graph-socle", &data("two_sinks.json"), "--materialize"]));
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(v["cross_check"]["engine_matrix_sizes"], serde_json::json!([1, 1]));
}

#[test]
fn graph_groupoid_is_a_valid_groupoid_file() {
    let out = steinberg(&["graph-groupoid", &data("line3.json")]);
    assert_eq!(out.code, 0);
    let dir = std::env::temp_dir().join(format!("steinberg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("line3_groupoid.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let v = steinberg(&["validate", path.to_str().unwrap()]);
    assert_eq!(v.code, 0);
    assert_eq!(json(&v)["elements"], 9);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn error_exit_codes() {
    assert_eq!(steinberg(&["socle", &data("missing.json")]).code, 64);
    assert_eq!(steinberg(&["socle", &data("broken_z2.json")]).code, 64);
    assert_eq!(steinberg(&["socle", &data("line3.json")]).code, 64);
    assert_eq!(steinberg(&["socle", &data("pair3.json"), "--field", "f4"]).code, 64);
    assert_eq!(steinberg(&["frobnicate"]).code, 64);
    assert_eq!(
        steinberg(&["graph-socle", &data("loop.json"), "--materialize"]).code,
        64
    );
    assert_eq!(steinberg(&["graph-groupoid", &data("loop_exit.json")]).code, 64);
    // 3⁹ vectors fit, 5⁹ do not.
    assert_eq!(steinberg(&["oracle", &data("pair3.json"), "--field", "f3"]).code, 0);
    assert_eq!(steinberg(&["oracle", &data("pair3.json"), "--field", "f11"]).code, 65);
    assert_eq!(steinberg(&["--help"]).code, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", &data("pair3.json"), "--field", "f2", "--semiprime"];
    assert_eq!(steinberg(&args), steinberg(&args));
}

#[test]
fn data_files_round_trip_bit_exactly() {
    for name in ["pair2.json", "pair3.json", "z2.json", "z3.json", "pair2_z2.json"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let g = steinberg::FiniteGroupoid::from_json(&text).unwrap();
        assert_eq!(g.to_json(), text, "{name}");
    }
}
