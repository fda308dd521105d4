//! The binary against golden fixtures and against direct library calls.

use std::path::PathBuf;
use std::process::{Command as Process, Output};

use deephole::classify::{completeness_check, count_deep_cosets, cubic_coverage, build_hypergraph, hypergraph_stats};
use deephole::families::{all_quadratic_families, union_of};
use deephole::numtheory::{n3_sweep, subset_sum_counts};
use deephole::{Bounds, Code, DeepHoleContext, Field};
use deephole_cli::{report_diff, run, CliError, Command, ExperimentConfig, Report};
use serde_json::json;

fn bin(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_deephole"))
        .args(args)
        .env_remove("DEEPHOLE_MAX_Q")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn parse(out: &Output) -> Report {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn gf(q: u64) -> Field {
    Field::of_order(q).unwrap()
}

fn bounds() -> Bounds {
    ExperimentConfig::new(Command::Family).bounds()
}

#[test]
fn golden_enum_deep_cosets_q5_k3() {
    let golden: Report =
        serde_json::from_str(&std::fs::read_to_string(fixture("enum-deep-cosets_q5_k3.json")).unwrap()).unwrap();
    assert_eq!(golden.result["total"], json!(100));
    let fresh = run(&ExperimentConfig::new(Command::EnumDeepCosets).with_q(5).with_k(3)).unwrap();
    assert_eq!(report_diff(&golden, &fresh).unwrap(), vec![]);
    let from_bin = parse(&bin(&["enum-deep-cosets", "--q", "5", "--k", "3"]));
    assert_eq!(report_diff(&golden, &from_bin).unwrap(), vec![]);
}

#[test]
fn golden_files_are_byte_identical_to_fresh_output() {
    let cases: [(&[&str], &str); 3] = [
        (&["enum-deep-cosets", "--q", "5", "--k", "3"], "enum-deep-cosets_q5_k3.json"),
        (&["covering-radius", "--code", "prs", "--q", "5", "--k", "4"], "covering-radius_prs_q5_k4.json"),
        (&["n3", "--q", "4", "--format", "csv"], "n3_q4.csv"),
    ];
    for (args, name) in cases {
        let out = bin(args);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(fixture(name)).unwrap(), "{name}");
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let one = bin(&["family", "--q", "7", "--k", "4", "--degree", "3", "--threads", "1"]);
    let four = bin(&["family", "--q", "7", "--k", "4", "--degree", "3", "--threads", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn covering_radius_matches_library() {
    let r = parse(&bin(&["covering-radius", "--code", "prs", "--q", "5", "--k", "4"]));
    assert_eq!(r.result["rho"], json!(1));
    for (q, k) in [(7u64, 4usize), (8, 5)] {
        let cfg = ExperimentConfig::new(Command::CoveringRadius).with_q(q).with_k(k);
        let lib = Code::projective(&gf(q), k).unwrap().covering_radius(&bounds()).unwrap();
        assert_eq!(run(&cfg).unwrap().result["rho"], json!(lib));
    }
    let rs = parse(&bin(&["covering-radius", "--code", "rs", "--q", "13", "--set", "0,1,2,3,4", "--k", "2"]));
    assert_eq!(rs.result["rho"], json!(3));
    assert!(rs.checks.iter().all(|c| c.holds));
}

#[test]
fn enum_deep_cosets_matches_library() {
    for (q, k) in [(7u64, 5usize), (8, 5), (5, 1)] {
        let r = run(&ExperimentConfig::new(Command::EnumDeepCosets).with_q(q).with_k(k)).unwrap();
        let lib = match k {
            1 => DeepHoleContext::projective(&gf(q), k, &bounds()).unwrap().deep_syndromes().len() as u64,
            _ => count_deep_cosets(&gf(q), k, &bounds()).unwrap(),
        };
        assert_eq!(r.result["total"], json!(lib), "q={q} k={k}");
    }
}

#[test]
fn family_matches_library() {
    let r = parse(&bin(&["family", "--q", "5", "--k", "3", "--degree", "2"]));
    let ctx = DeepHoleContext::projective(&gf(5), 3, &bounds()).unwrap();
    let fams = all_quadratic_families(&ctx).unwrap();
    assert_eq!(r.result["families"], json!(fams.len()));
    assert_eq!(r.result["union"], json!(union_of(&fams).len()));
    assert_eq!(r.table.unwrap().rows.len(), fams.len());
}

#[test]
fn classification_commands_match_library() {
    let c = parse(&bin(&["completeness", "--q", "7"]));
    let lib = completeness_check(&gf(7), &bounds()).unwrap();
    assert_eq!(c.result["union"], json!(lib.union_size));
    assert_eq!(c.result["total"], json!(lib.total));

    let h = parse(&bin(&["hypergraph", "--q", "7"]));
    let stats = hypergraph_stats(&build_hypergraph(&gf(7), &bounds()).unwrap());
    assert_eq!(h.result["vertices"], json!(stats.vertex_count));
    assert_eq!(h.result["edges"], json!(stats.edge_count));
    assert!(h.checks.iter().all(|c| c.holds));

    let v = parse(&bin(&["cubic-coverage", "--q", "5"]));
    let lib = cubic_coverage(&gf(5), &bounds()).unwrap();
    assert_eq!(v.result["covered"], json!(lib.covered));
    assert_eq!(v.result["total"], json!(lib.total));
}

#[test]
fn number_theory_commands_match_library() {
    let r = parse(&bin(&["n3", "--q", "2"]));
    let rows = r.table.unwrap().rows;
    assert!(rows.iter().all(|row| row[2] == row[3]));
    assert_eq!(rows.len(), n3_sweep(&gf(2)).unwrap().len());

    let s = parse(&bin(&["ssp", "--p", "3", "--m", "2", "--k", "4"]));
    let lib = subset_sum_counts(&gf(9), &gf(9).elements(), 4).unwrap();
    let col: Vec<_> = s.table.unwrap().rows.iter().map(|row| row[1].clone()).collect();
    assert_eq!(col, lib.iter().map(|&n| json!(n)).collect::<Vec<_>>());
}

#[test]
fn zero_sum_free_example_and_candidate_verdict() {
    let r = parse(&bin(&["zero-sum-free", "--q", "13", "--set", "0,1,2,3,4", "--r", "2"]));
    assert_eq!(r.result["distance"], json!(3));
    assert_eq!(r.result["outside_known_families"], json!(true));
    let c = parse(&bin(&["zero-sum-free", "--q", "7", "--r", "2"]));
    assert_eq!(c.result["zero_sum_free"], json!(false));
}

#[test]
fn csv_is_a_projection_of_the_table() {
    let out = bin(&["ssp", "--q", "5", "--k", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "g,count\n0,2\n1,2\n2,2\n3,2\n4,2\n");
}

#[test]
fn usage_errors_exit_with_one_and_write_nothing() {
    let dir = std::env::temp_dir().join(format!("deephole-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let out_arg = out_path.to_str().unwrap();
    for args in [
        vec!["no-such-command", "--q", "5"],
        vec!["covering-radius", "--q", "6", "--k", "2"],
        vec!["covering-radius", "--q", "5"],
        vec!["completeness", "--q", "17", "--out", out_arg],
        vec!["family", "--q", "5", "--k", "3", "--degree", "4"],
    ] {
        let out = bin(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    assert!(!out_path.exists());
}

#[test]
fn size_guard_follows_environment() {
    let out = Process::new(env!("CARGO_BIN_EXE_deephole"))
        .args(["n3", "--q", "5"])
        .env("DEEPHOLE_MAX_Q", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Process::new(env!("CARGO_BIN_EXE_deephole"))
        .args(["n3", "--q", "16"])
        .env("DEEPHOLE_MAX_Q", "16")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn enumeration_bound_is_enforced() {
    // 13^7 syndromes, far above the default bound
    let cfg = ExperimentConfig::new(Command::EnumDeepCosets).with_q(13).with_k(7);
    assert!(matches!(run(&cfg), Err(CliError::Library(deephole::Error::BoundExceeded { .. }))));
}

#[test]
fn failed_hypotheses_map_to_exit_two() {
    let e = CliError::Library(deephole::Error::HypothesisFailed("x".into()));
    assert_eq!(e.exit_code(), 2);
    assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
}
