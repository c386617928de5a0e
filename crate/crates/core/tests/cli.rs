use std::process::Command as Process;

use preproj::cli::{load_config, parse_config, run_command, Command, OutputFormat};
use preproj::field::FieldSpec;
use preproj::Error;

const A2_D22: &str = r#"{"cartan": [[2, -1], [-1, 2]], "symmetrizer": [2, 2], "orientation": [[1, 2]]}"#;
const B2_D21: &str = r#"{"cartan": [[2, -1], [-2, 2]], "symmetrizer": "minimal"}"#;
const AFFINE: &str = r#"{"cartan": [[2, -2], [-2, 2]], "weyl_cap": 50}"#;

fn run(config: &str, cmd: Command, format: OutputFormat) -> preproj::cli::Outcome {
    let mut cfg = parse_config(config).unwrap();
    cfg.format = format;
    run_command(&cfg, cmd)
}

#[test]
fn parses_configs() {
    let cfg = parse_config(A2_D22).unwrap();
    assert_eq!(cfg.data.symmetrizer.entries(), &[2, 2]);
    assert!(cfg.data.orientation.pairs().contains(&(0, 1)));
    assert_eq!(cfg.field, FieldSpec::Rational);
    assert_eq!(cfg.seed, 0);

    let cfg = parse_config(B2_D21).unwrap();
    assert_eq!(cfg.data.symmetrizer.entries(), &[2, 1]);
    let cfg = parse_config(r#"{"cartan": [[2]], "symmetrizer": [1], "field": {"type": "prime", "p": 7}}"#).unwrap();
    assert_eq!(cfg.data.rank(), 1);
    assert_eq!(cfg.field, FieldSpec::Prime { p: 7 });
}

#[test]
fn rejects_bad_configs() {
    let e = parse_config(r#"{"cartan": [[2, -1], [-1, 2]], "symmetrizer": [1, 2]}"#).unwrap_err();
    assert!(
        matches!(&e, Error::Validation(m) if m.starts_with("symmetrizer")),
        "{e}"
    );
    assert!(matches!(parse_config("{\"cartan\": "), Err(Error::Parse(_))));
    assert!(matches!(
        parse_config(r#"{"cartan": [[2]], "colour": 1}"#),
        Err(Error::Parse(_))
    ));
    assert!(matches!(
        parse_config(r#"{"cartan": [[2]], "symmetrizer": "least"}"#),
        Err(Error::Validation(_))
    ));
    assert!(matches!(
        parse_config(r#"{"cartan": [[2]], "field": {"type": "prime", "p": 8}}"#),
        Err(Error::Validation(_))
    ));
    assert!(matches!(
        parse_config(r#"{"cartan": [[2]], "weyl_cap": 0}"#),
        Err(Error::Validation(_))
    ));
    assert!(parse_config(r#"{"cartan": [[2, -1], [0, 2]]}"#).is_err());
}

#[test]
fn loads_files_and_inline_json() {
    let dir = std::env::temp_dir().join(format!("preproj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2_d22.json");
    std::fs::write(&path, A2_D22).unwrap();
    let from_file = load_config(path.to_str().unwrap()).unwrap();
    let inline = load_config(A2_D22).unwrap();
    assert_eq!(from_file.data, inline.data);
    assert!(matches!(
        load_config(dir.join("missing.json").to_str().unwrap()),
        Err(Error::Io(_))
    ));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn command_names() {
    for (name, cmd) in [
        ("check", Command::Check),
        ("algebra", Command::Algebra),
        ("weyl", Command::Weyl),
        ("stt", Command::Stt),
        ("mutation-graph", Command::MutationGraph),
        ("verify", Command::Verify),
    ] {
        assert_eq!(name.parse::<Command>().unwrap(), cmd);
    }
    assert!("graph".parse::<Command>().is_err());
}

#[test]
fn verify_passes_on_examples() {
    let out = run(A2_D22, Command::Verify, OutputFormat::Text);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("6 support τ-tilting modules = |W|"));
    assert!(!out.stdout.contains("FAIL"));
    let out = run(B2_D21, Command::Verify, OutputFormat::Json);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn weyl_on_affine_type_is_truncated() {
    let out = run(AFFINE, Command::Weyl, OutputFormat::Text);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout
            .contains("enumeration stopped at the cap: ball of 50 elements"),
        "{}",
        out.stdout
    );
    let out = run(B2_D21, Command::Weyl, OutputFormat::Text);
    assert_eq!(out.code, 0);
    assert!(!out.stdout.contains("stopped"));
}

#[test]
fn dynkin_only_commands_reject_affine_type() {
    for cmd in [Command::Algebra, Command::Stt, Command::MutationGraph] {
        let out = run(AFFINE, cmd, OutputFormat::Text);
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("error:"));
    }
    let out = run(AFFINE, Command::Check, OutputFormat::Text);
    assert_eq!(out.code, 0);
}

#[test]
fn mutation_graph_formats() {
    let dot = run(B2_D21, Command::MutationGraph, OutputFormat::Dot);
    assert_eq!(dot.code, 0);
    let nodes = dot.stdout.lines().filter(|l| l.contains("[label") && !l.contains("->"));
    assert_eq!(nodes.count(), 8);
    assert_eq!(dot.stdout.lines().filter(|l| l.contains("->")).count(), 8);
    let json = run(B2_D21, Command::MutationGraph, OutputFormat::Json);
    let g = preproj::MutationGraph::from_json(&json.stdout).unwrap();
    assert_eq!(g.nodes.len(), 8);
    let text = run(A2_D22, Command::MutationGraph, OutputFormat::Text);
    assert!(text.stdout.contains("e1P+e2P"));
}

#[test]
fn stt_and_algebra_output() {
    let out = run(A2_D22, Command::Stt, OutputFormat::Text);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("E1") && out.stdout.contains("E2"));
    let mut cfg = parse_config(B2_D21).unwrap();
    cfg.show_basis = true;
    let out = run_command(&cfg, Command::Algebra);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("a21ε1a12"), "{}", out.stdout);
}

fn binary(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_preproj")).args(args).output().unwrap()
}

#[test]
fn binary_exit_codes() {
    let ok = binary(&["verify", "--config", A2_D22]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("= |W|"));
    assert_eq!(binary(&["stt", "--config", AFFINE]).status.code(), Some(2));
    assert_eq!(
        binary(&["verify", "--config", "{\"cartan\": 1}"]).status.code(),
        Some(2)
    );
    assert_eq!(binary(&["explode", "--config", A2_D22]).status.code(), Some(2));
    assert_eq!(
        binary(&["mutation-graph", "--config", A2_D22, "--json", "--dot"])
            .status
            .code(),
        Some(2)
    );
    let fp = binary(&["mutation-graph", "--config", B2_D21, "--field", "fp:32003", "--dot"]);
    let q = binary(&["mutation-graph", "--config", B2_D21, "--dot"]);
    assert_eq!(fp.status.code(), Some(0));
    assert_eq!(fp.stdout, q.stdout);
}
