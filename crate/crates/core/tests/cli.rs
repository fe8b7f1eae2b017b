use std::process::Command;

use homcount::cli::{load_spec, parse_spec_file, run_command, CommandName, Format, Options, OracleCase};
use homcount::corpus;
use homcount::engine::CountingResult;
use serde_json::Value;

fn opts(input: &str) -> Options {
    Options { input: Some(input.to_string()), ..Options::default() }
}

fn json_of(command: CommandName, options: &Options) -> (i32, Value) {
    let out = run_command(command, options);
    (out.status, serde_json::from_str(&out.document).expect("valid JSON document"))
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_homcount"))
}

#[test]
fn poly_of_split_sl2_quotient() {
    let (status, doc) = json_of(CommandName::Poly, &opts("sl2_mod_torus.json"));
    assert_eq!(status, 0);
    assert_eq!(doc["polynomials"][0]["coeffs"], serde_json::json!(["0", "1", "1"]));
    assert_eq!(doc["period"], 1);
}

#[test]
fn count_of_conic_torus() {
    let (status, doc) = json_of(CommandName::Count, &Options { q: Some(3), n: Some(1), ..opts("conic_torus.json") });
    assert_eq!(status, 0);
    assert_eq!(doc["count"], "4");
}

#[test]
fn check_passes_on_every_bundled_spec() {
    for name in corpus::names() {
        let options = Options { qmax: Some(4), nmax: Some(3), ..opts(name) };
        let (status, doc) = json_of(CommandName::Check, &options);
        assert_eq!(status, 0, "{name}: {doc}");
        assert_eq!(doc["failed"], 0, "{name}");
    }
}

#[test]
fn check_of_glr_r2_with_deep_extensions() {
    let options = Options { qmax: Some(3), nmax: Some(4), ..opts("gl2r_h_r2.json") };
    let (status, doc) = json_of(CommandName::Check, &options);
    assert_eq!(status, 0);
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"oracle q=3 n=4"));
}

#[test]
fn emitted_result_round_trips() {
    for name in ["conic_torus", "gl2r_h_r2", "torus_order3", "sl3_mod_normalizer"] {
        let out = run_command(CommandName::Poly, &opts(name));
        let parsed: CountingResult = serde_json::from_str(&out.document).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap();
        assert_eq!(again, out.document, "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    for command in [CommandName::Poly, CommandName::Factor, CommandName::Period, CommandName::Check] {
        let a = run_command(command, &opts("gl2r_h_r1"));
        let b = run_command(command, &opts("gl2r_h_r1"));
        assert_eq!(a, b);
    }
}

#[test]
fn errors_become_machine_readable() {
    let (status, doc) = json_of(CommandName::Count, &Options { q: Some(6), n: Some(1), ..opts("conic_torus") });
    assert_eq!(status, 1);
    assert_eq!(doc["error"]["kind"], "invalid_input");

    let (status, doc) = json_of(CommandName::Poly, &opts("no_such_spec"));
    assert_eq!(status, 1);
    assert!(doc["error"]["message"].as_str().is_some());

    let (status, doc) = json_of(CommandName::Poly, &Options { residue: Some(5), ..opts("conic_torus") });
    assert_eq!(status, 1);
    assert_eq!(doc["error"]["kind"], "invalid_index");
}

#[test]
fn spec_file_parsing() {
    let file = load_spec("sl2_mod_torus.json").unwrap();
    assert_eq!(file.metadata.name, "sl2_mod_torus");

    let gl4 = parse_spec_file(
        r#"{"metadata":{"name":"g"},"group":{"preset":"GL","n":4},
        "subtorus_restriction":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],"gamma_generators":[]}"#,
    )
    .unwrap();
    assert_eq!(gl4.validate().unwrap().rank(), 4);

    let err = parse_spec_file(
        r#"{"metadata":{"name":"g"},"group":{"preset":"GL","n":2},
        "subtorus_restriction":[[1,0],[0,1]],
        "gamma_generators":[[[1,0,0],[0,1,0]]]}"#,
    )
    .unwrap_err();
    assert!(err.to_string().contains("line"), "{err}");

    let err = parse_spec_file("{\n  \"metadata\": {\"name\": \"g\"},\n  \"group\": {\"preset\": \"XX\", \"n\": 2}\n}").unwrap_err();
    assert!(err.to_string().contains("line"), "{err}");
}

#[test]
fn oracle_command_cases() {
    let glr = Options { case: Some(OracleCase::Glr), r: Some(2), q: Some(2), ..Options::default() };
    assert_eq!(json_of(CommandName::Oracle, &glr).1["count"], "11200");

    let conic = Options { case: Some(OracleCase::Conic), a: Some(2), b: Some(1), q: Some(9), ..Options::default() };
    assert_eq!(json_of(CommandName::Oracle, &conic).1["count"], "8");

    let torus = Options {
        case: Some(OracleCase::TwistedTorus),
        matrix: Some("[[0,1],[1,0]]".into()),
        q: Some(2),
        split: Some(2),
        ..Options::default()
    };
    let text = run_command(CommandName::Oracle, &Options { format: Format::Text, ..torus });
    assert_eq!(text.document.trim(), "3");
}

#[test]
fn binary_writes_to_out_file_and_sets_exit_status() {
    let dir = std::env::temp_dir().join(format!("homcount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("period.json");
    let status = binary()
        .args(["period", "--input", "torus_order3", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["period"], 3);
    assert_eq!(doc["minimal_period"], 3);

    let failed = binary().args(["count", "--input", "conic_torus", "--q", "6", "--n", "1"]).output().unwrap();
    assert_eq!(failed.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&failed.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "invalid_input");

    let text = binary().args(["count", "--input", "sl2_mod_torus", "--q", "2", "--n", "1", "--format", "text"]).output().unwrap();
    assert_eq!(String::from_utf8(text.stdout).unwrap().trim(), "6");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reduce_replays_a_trace() {
    let dir = std::env::temp_dir().join(format!("homcount-trace-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("trace.json");
    std::fs::write(&trace, r#"[{"step":"unipotent","d":2},{"step":"parabolic","flag":["1","1"]}]"#).unwrap();
    let options = Options { trace: Some(trace), ..opts("conic_torus") };
    let (status, doc) = json_of(CommandName::Reduce, &options);
    assert_eq!(status, 0, "{doc}");
    // (t − 1)·t²·(1 + t) = t⁴ − t².
    assert_eq!(doc["result"], serde_json::json!(["0", "0", "-1", "0", "1"]));
    std::fs::remove_dir_all(&dir).unwrap();
}
