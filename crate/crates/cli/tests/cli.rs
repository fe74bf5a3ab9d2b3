use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use skewgoppa::{Alphabet, Fe, LinearCode, Matrix};
use skewgoppa_cli::{cmd_build, cmd_params, parse_config, ConfigError, FactorSpec, Family};

fn repo() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn config(name: &str) -> String {
    fs::read_to_string(repo().join("configs").join(name)).expect("shipped config")
}

fn golden(name: &str) -> String {
    fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/gsg_f8").join(name)).expect("golden file")
}

fn skewgoppa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewgoppa")).args(args).current_dir(repo()).output().expect("binary runs")
}

fn fe(v: &[u32]) -> Vec<Fe> {
    v.iter().map(|&x| Fe(x)).collect()
}

const GRS: &str = "family = grs\nfield.p = 2\nfield.t = 3\nfield.r = 3\nset.1 = [1, 2, 3]\nk = 2\n";

#[test]
fn minimal_grs_parses() {
    let cfg = parse_config(GRS).unwrap();
    assert_eq!(cfg.family, Family::Grs);
    assert_eq!(cfg.sets, vec![fe(&[1, 2, 3])]);
    assert_eq!(cfg.k, Some(2));
    assert_eq!(cfg.eta, None);
}

#[test]
fn shipped_gsg_config_is_the_f8_instance() {
    let cfg = parse_config(&config("gsg_f8.cfg")).unwrap();
    assert_eq!(cfg.family, Family::Gsg);
    assert_eq!(cfg.field.order(), 8);
    assert_eq!(cfg.field.modulus(), &[1, 1, 0, 1]);
    assert_eq!(cfg.sets, vec![fe(&[1, 2, 4])]);
    assert_eq!(cfg.factors, vec![FactorSpec::Invariant { a: Fe(1), v: fe(&[1]), l: 3 }]);
    assert_eq!(cfg.eta, Some(fe(&[1, 1, 1])));
}

#[test]
fn repeated_point_names_distinct_elements() {
    let err = parse_config(&config("repeated_point.cfg")).unwrap_err();
    assert!(err.to_string().contains("distinct elements"), "{err}");
    assert_eq!(err.exit_code(), 2);
    let out = skewgoppa(&["build", "configs/repeated_point.cfg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("distinct elements"));
}

#[test]
fn syntax_errors_carry_line_numbers() {
    let err = parse_config("family = grs\nfield.p = 2\nbogus = 1\n").unwrap_err();
    assert_eq!(err, ConfigError::Syntax { line: 3, msg: "unknown key `bogus`".into() });
    assert_eq!(err.exit_code(), 3);
    let err = parse_config("family = grs\nfield.p 2\n").unwrap_err();
    assert!(matches!(err, ConfigError::Syntax { line: 2, .. }));
    let err = parse_config("family = grs\nfield.p = 2\nfield.t = 3\nset.1 = [1, 2]\n").unwrap_err();
    assert_eq!(err, ConfigError::Missing("k".into()));
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = format!("# header\n\n{}# trailing\n", GRS.replace("k = 2", "k = 2   # dimension"));
    assert_eq!(parse_config(&text).unwrap().k, Some(2));
}

#[test]
fn hypothesis_violations_point_at_the_offending_line() {
    // the roots of X^3 + X^2 + 1 are P-independent; their inverses are not, which gsg tolerates
    let text = "family = gsg\nfield.p = 2\nfield.t = 3\nset.1 = [3, 5, 7]\ng.1 = [0, 0, 0, 1]\n";
    assert_eq!(parse_config(text).unwrap().sets[0].len(), 3);
    // X^3 vanishes at 0
    let text = "family = gsg\nfield.p = 2\nfield.t = 3\nset.1 = [0, 1, 2]\ng.1 = [0, 0, 0, 1]\n";
    let err = parse_config(text).unwrap_err();
    assert_eq!(err.exit_code(), 2, "{err}");
    assert!(matches!(err, ConfigError::Invalid { line: 5, .. }), "{err}");
    // every nonzero element of F_8 is conjugate to 1, so four of them are dependent
    let text = "family = gsg\nfield.p = 2\nfield.t = 3\nset.1 = [1, 2, 4, 3]\ng.1 = [0, 0, 0, 1]\n";
    let err = parse_config(text).unwrap_err();
    assert_eq!(err.exit_code(), 2, "{err}");
    assert!(matches!(err, ConfigError::Invalid { line: 4, .. }), "{err}");
    assert!(err.to_string().contains("P-independent"), "{err}");
}

#[test]
fn gsg_build_matches_golden_files() {
    let cfg = parse_config(&config("gsg_f8.cfg")).unwrap();
    let dir = tempfile::tempdir().unwrap();
    cmd_build(&cfg, Some(dir.path())).unwrap();
    for name in ["generator", "parity_check", "hprime", "rdiag", "ediag", "transform", "vandermonde", "ddiag"] {
        let file = format!("{name}.txt");
        let got = fs::read_to_string(dir.path().join(&file)).unwrap();
        assert_eq!(got, golden(&file), "{file}");
    }
}

#[test]
fn gsg_build_stdout_matches_golden_files() {
    let out = skewgoppa(&["build", "configs/gsg_f8.cfg"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("family = gsg\nn = 3\nk = 0\n"));
    assert!(text.contains(&format!("[parity_check]\n{}", golden("parity_check.txt"))));
    assert!(text.contains(&format!("[vandermonde]\n{}", golden("vandermonde.txt"))));
}

#[test]
fn gsg_params_report() {
    let cfg = parse_config(&config("gsg_f8.cfg")).unwrap();
    let (text, ok) = cmd_params(&cfg, None).unwrap();
    assert!(ok);
    assert_eq!(
        text,
        "family = gsg\nn = 3\nk = 0\nrank(H) = 3\nk >= -6 PASS\nk <= 0 PASS\nd = undefined (zero code)\nd >= 4 SKIPPED\n"
    );
}

#[test]
fn grs_with_k_equal_n_is_the_full_space() {
    let cfg = parse_config(&GRS.replace("k = 2", "k = 3")).unwrap();
    let built = cfg.build().unwrap();
    assert_eq!(built.code, LinearCode::full(&cfg.field, Alphabet::Extension, 3).unwrap());
    assert_eq!(built.code.generator().rref().0, Matrix::identity(&cfg.field, 3).unwrap());
}

#[test]
fn gsmg_parity_check_is_the_kronecker_product_of_its_blocks() {
    let cfg = parse_config(&config("gsmg_f8.cfg")).unwrap();
    let built = cfg.build().unwrap();
    let block = |name: &str| built.artifacts.iter().find(|(n, _)| n == name).map(|(_, m)| m.clone()).unwrap();
    // eta defaults to all ones, so E is the identity
    assert_eq!(block("block1").kronecker(&block("block2")).unwrap(), built.parity_check);
    assert_eq!(block("tensor_generator").row_space_equal(&built.parity_check), Ok(true));
}

#[test]
fn classical_goppa_bounds_pass() {
    let cfg = parse_config(&config("goppa_f8.cfg")).unwrap();
    let (text, ok) = cmd_params(&cfg, None).unwrap();
    assert!(ok, "{text}");
    // n = 8, deg g = 2 over F_2: k >= 8 - 3*2, and d >= 2 deg g + 1 for a squarefree binary g
    assert!(text.contains("k = 2\n"), "{text}");
    assert!(text.contains("d = 5\n"), "{text}");
}

#[test]
fn zero_dimensional_toy() {
    let text = "family = goppa\nfield.p = 2\nfield.t = 3\nset.1 = [1, 2]\ng.1 = [0, 0, 1]\n";
    let (report, ok) = cmd_params(&parse_config(text).unwrap(), None).unwrap();
    assert!(ok);
    assert!(report.contains("k = 0\n") && report.contains("d = undefined (zero code)\n"), "{report}");
}

#[test]
fn every_shipped_config_reports_pass() {
    for name in ["grs_f8.cfg", "goppa_f8.cfg", "gsg_f8.cfg", "gsmg_f8.cfg", "acar_f4.cfg"] {
        let out = skewgoppa(&["params", &format!("configs/{name}")]);
        let text = String::from_utf8_lossy(&out.stdout);
        assert_eq!(out.status.code(), Some(0), "{name}: {text}");
        assert!(!text.contains("FAIL"), "{name}: {text}");
    }
}

#[test]
fn distance_command_and_budget() {
    let out = skewgoppa(&["distance", "configs/grs_f8.cfg"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "d = 5\n");
    let out = skewgoppa(&["distance", "configs/grs_f8.cfg", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("d = unknown"));
}

#[test]
fn verify_exit_codes() {
    let out = skewgoppa(&["verify", "norms", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("seed = 3\n[norms]\n") && text.ends_with("norms: PASS\n"), "{text}");
    let out = skewgoppa(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn pindep_suite_reproduces_the_worked_example() {
    let out = skewgoppa(&["verify", "pindep"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("F_8 worked example: 7/7 PASS"));
}

#[test]
fn missing_file_is_a_parse_error() {
    let out = skewgoppa(&["params", "configs/does_not_exist.cfg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let a = skewgoppa(&["verify", "gsrs-witness", "--seed", "5"]);
    let b = skewgoppa(&["verify", "gsrs-witness", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("GSG = subfield subcode of theta(GSRS)^perp: 100/100 PASS"));
}
