//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn szero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szero"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_sod_both_sides_gr24() {
    let out = szero(&["verify-sod", "--n", "2", "--N", "4", "--k", "2", "--side", "both"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("F-side at (2,2): 6 members"), "{text}");
    assert!(text.contains("E-side at (2,2): 6 members"), "{text}");
    assert!(text.matches("VALID").count() >= 2, "{text}");
}

#[test]
fn verify_sod_flag_collection() {
    let out = szero(&["verify-sod", "--n", "3", "--N", "3", "--k", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("6 members"), "{}", stdout(&out));
}

#[test]
fn verify_sod_sweep_without_k() {
    let out = szero(&["verify-sod", "--N", "3", "--side", "both"]);
    assert_eq!(out.status.code(), Some(0));
    // 4 weights in C(2,3), two sides each
    assert_eq!(stdout(&out).matches("VALID").count(), 8, "{}", stdout(&out));
}

#[test]
fn small_n_is_a_config_error() {
    let out = szero(&["verify-sod", "--N", "1"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn e_side_needs_n_two() {
    let out = szero(&["verify-sod", "--n", "3", "--N", "3", "--side", "E"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn max_n_env_caps_sweeps() {
    let out = Command::new(env!("CARGO_BIN_EXE_szero"))
        .args(["verify-sod", "--N", "5"])
        .env("SZERO_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn check_relations_n3() {
    let out = szero(&["check-relations", "--N", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for rel in ["U01", "U03", "U04", "U05", "U06", "U07", "U09-interior", "U09-boundary"] {
        assert!(text.contains(rel), "missing {rel} in {text}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn h_generator_relations_are_out_of_scope() {
    let out = szero(&["check-relations", "--N", "3", "--rel", "U02"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of scope"));
}

#[test]
fn eval_word_key_relation() {
    let out = szero(&["eval-word", "E[1,-2] F[1,2] @ (0,3)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Psi[-,1,1] @ (0,3) [-1]"), "{text}");
}

#[test]
fn eval_word_oracle_side() {
    let out = szero(&["eval-word", "F[1,2] F[1,1] @ (0,4)"]);
    let text = stdout(&out);
    assert!(text.contains("S_(2,1)V[deg 0] on Gr(2,4)"), "{text}");
}

#[test]
fn eval_word_empty_is_identity() {
    let out = szero(&["eval-word", "@ (1,2)"]);
    assert!(stdout(&out).contains("identity with shift [0]"));
}

#[test]
fn eval_word_parse_error() {
    let out = szero(&["eval-word", "F[1,2] (0,3)"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error at byte"));
}

#[test]
fn dual_pairing_discovers_bijection() {
    let out = szero(&["dual-pairing", "--N", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("delta pattern"), "{}", stdout(&out));
}

#[test]
fn cross_check_agrees() {
    // 36 ordered pairs on Gr(2,4): 21 claimed (self + lex-less) agree, the
    // 15 reverse-ordered pairs carry no engine claim
    let out = szero(&["cross-check", "--N", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("21 agreements"), "{text}");
    assert!(text.contains("15 engine-incomplete (no-claim)"), "{text}");
}

#[test]
fn verify_kapranov_runs() {
    let out = szero(&["verify-kapranov", "--N", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn certificate_expressions_replay_through_the_word_grammar() {
    // every word printed inside a certificate chain must round-trip through
    // the eval-word grammar, so third parties can replay the rewrites
    let dir = std::env::temp_dir().join(format!("szero-replay-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let out = szero(&["verify-sod", "--N", "3", "--k", "1", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let mut checked = 0;
    for cert in json["certificates"].as_array().unwrap() {
        for rec in cert["members"]
            .as_array()
            .unwrap()
            .iter()
            .chain(cert["pairs"].as_array().unwrap())
        {
            for step in rec["steps"].as_array().unwrap() {
                for side in ["before", "after"] {
                    let text = step[side].as_str().unwrap();
                    // adjoint-construction records describe single letters,
                    // not full words; everything with a domain must parse
                    if !text.contains('@') || text.contains("^R") {
                        continue;
                    }
                    let eval = szero(&["eval-word", text]);
                    assert_eq!(
                        eval.status.code(),
                        Some(0),
                        "unparseable certificate expression: {text}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10, "expected a nontrivial replay surface, got {checked}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = std::env::temp_dir().join(format!("szero-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let out = szero(&[
            "verify-sod",
            "--N",
            "3",
            "--side",
            "both",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let ja = std::fs::read(&a).unwrap();
    let jb = std::fs::read(&b).unwrap();
    assert!(!ja.is_empty());
    assert_eq!(ja, jb, "JSON reports differ between identical runs");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn markdown_report_is_written() {
    let dir = std::env::temp_dir().join(format!("szero-md-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let md = dir.join("report.md");
    let out = szero(&["check-relations", "--N", "3", "--md", md.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&md).unwrap();
    assert!(text.contains("## Relation checks"));
    let _ = std::fs::remove_dir_all(&dir);
}
