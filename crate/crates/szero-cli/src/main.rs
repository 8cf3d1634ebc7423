//! Command-line surface for the verification engine.
//!
//! Exit codes: 0 all checks passed, 2 a verified claim failed, 3 the engine
//! returned an incomplete (stuck) verdict on a claimed pair, 64 bad
//! configuration or parse error.

mod words;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use szero_core::algebra::{
    simplify_with, FunctorExpr, GenKind, Policy, SimplifyOptions, Verdict, WeightVector,
};
use szero_core::bott::{dual_pairing, ext_q, ext_v, GradedDims};
use szero_core::ktheory::{check_relation, cross_check, eval_e_word, eval_f_word, RelId};
use szero_core::partitions::{enumerate_p, lex_compare, DiagramBox};
use szero_core::report::{write_atomic, CrossEntry, Report, RunConfig};
use szero_core::sod::{verify_collection, CollectionSpec, Side};

const WORD_GRAMMAR: &str = "word grammar: tokens `F[i,s]`, `E[i,r]`, `Psi[+,i,e]`, `Psi[-,i,e]` \
separated by spaces, then `@ (k_1,...,k_n)` for the domain weight; the empty word `@ (1,2)` \
is the identity functor.";

#[derive(Parser)]
#[command(
    name = "szero",
    about = "Verify semiorthogonal-decomposition certificates for categorical shifted q=0 affine algebra actions",
    after_help = WORD_GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Number of weight entries n (2 for Grassmannians, 3 for 3-step flags).
    #[arg(long = "n", default_value_t = 2)]
    n: usize,
    /// Total weight N (the GL rank).
    #[arg(long = "N")]
    n_total: i64,
    /// Target weight: a full comma-separated vector in C(n,N), or a single
    /// value k meaning (k, N-k) when n = 2. Omitted: sweep all of C(n,N).
    #[arg(long = "k", value_delimiter = ',', allow_negative_numbers = true)]
    k: Option<Vec<i64>>,
    /// Write the deterministic JSON report here.
    #[arg(long = "json")]
    json: Option<PathBuf>,
    /// Write the markdown report here.
    #[arg(long = "md")]
    md: Option<PathBuf>,
    /// Worker threads for the sweeps.
    #[arg(long = "jobs")]
    jobs: Option<usize>,
    /// Rule-application budget per simplification (default 4·length²).
    #[arg(long = "max-steps")]
    max_steps: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify semiorthogonal-collection certificates with the engine.
    VerifySod {
        #[command(flatten)]
        common: CommonArgs,
        /// Which collections to verify: F, E, or both.
        #[arg(long = "side", default_value = "F")]
        side: String,
        /// Also record no-claim (reverse-ordered) pairs.
        #[arg(long = "diagnostic", default_value_t = false)]
        diagnostic: bool,
    },
    /// Oracle-only exceptional-collection suite on Grassmannians.
    VerifyKapranov {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Simplify one word with the engine and evaluate it geometrically.
    EvalWord {
        /// The word, e.g. "E[1,-2] F[1,2] @ (0,3)".
        word: String,
        #[arg(long = "max-steps")]
        max_steps: Option<usize>,
    },
    /// Exact matrix checks of the decategorified presentation relations.
    CheckRelations {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated relation ids (default: all in scope).
        #[arg(long = "rel", value_delimiter = ',')]
        rel: Option<Vec<String>>,
    },
    /// Discover the pairing bijection between the collection and its dual.
    DualPairing {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare engine verdicts against the Ext oracle on all pairs.
    CrossCheck {
        #[command(flatten)]
        common: CommonArgs,
    },
}

struct ConfigError(String);

impl<T: std::fmt::Display> From<T> for ConfigError {
    fn from(e: T) -> Self {
        ConfigError(e.to_string())
    }
}

fn max_n_cap() -> i64 {
    std::env::var("SZERO_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(6)
}

fn validate_common(common: &CommonArgs) -> Result<(), ConfigError> {
    if common.n < 2 {
        return Err(ConfigError("n must be at least 2".into()));
    }
    if common.n_total < 2 {
        return Err(ConfigError(format!(
            "N must be at least 2 (got {})",
            common.n_total
        )));
    }
    let cap = max_n_cap();
    if common.n_total > cap {
        return Err(ConfigError(format!(
            "N = {} exceeds the sweep cap {} (override with SZERO_MAX_N)",
            common.n_total, cap
        )));
    }
    if let Some(jobs) = common.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    Ok(())
}

/// Resolve --k into the list of target weights to sweep.
fn targets(common: &CommonArgs) -> Result<Vec<WeightVector>, ConfigError> {
    match &common.k {
        Some(entries) => {
            let entries = if entries.len() == 1 && common.n == 2 {
                vec![entries[0], common.n_total - entries[0]]
            } else {
                entries.clone()
            };
            if entries.len() != common.n {
                return Err(ConfigError(format!(
                    "--k needs {} entries for n = {}",
                    common.n, common.n
                )));
            }
            if entries.iter().any(|&e| e < 0) || entries.iter().sum::<i64>() != common.n_total {
                return Err(ConfigError(format!(
                    "k = {entries:?} is not in C({},{})",
                    common.n, common.n_total
                )));
            }
            Ok(vec![WeightVector::new(entries)])
        }
        None => {
            let mut out = Vec::new();
            let mut current = vec![0i64; common.n];
            fn rec(current: &mut Vec<i64>, i: usize, rest: i64, out: &mut Vec<WeightVector>) {
                if i + 1 == current.len() {
                    current[i] = rest;
                    out.push(WeightVector::new(current.iter().copied()));
                    return;
                }
                for v in 0..=rest {
                    current[i] = v;
                    rec(current, i + 1, rest - v, out);
                }
            }
            rec(&mut current, 0, common.n_total, &mut out);
            Ok(out)
        }
    }
}

fn simplify_opts(max_steps: Option<usize>) -> SimplifyOptions {
    SimplifyOptions {
        max_steps,
        policy: Policy::Deterministic,
    }
}

fn emit(report: &mut Report, common: &CommonArgs, elapsed_ms: u128) -> Result<i32, ConfigError> {
    report.finalize();
    if let Some(path) = &common.json {
        write_atomic(path, &report.to_json())?;
    }
    if let Some(path) = &common.md {
        let mut md = report.to_markdown();
        md.push_str(&format!("_elapsed: {elapsed_ms} ms_\n"));
        write_atomic(path, &md)?;
    }
    println!(
        "status: {} ({} certificates, {} relations, {} cross-checks) in {} ms",
        report.status,
        report.certificates.len(),
        report.relations.len(),
        report.crosschecks.len(),
        elapsed_ms
    );
    Ok(report.exit_code())
}

fn run_verify_sod(common: &CommonArgs, side: &str, diagnostic: bool) -> Result<i32, ConfigError> {
    validate_common(common)?;
    let sides = match side {
        "F" => vec![Side::F],
        "E" => vec![Side::E],
        "both" => vec![Side::F, Side::E],
        other => {
            return Err(ConfigError(format!(
                "--side must be F, E or both, got {other}"
            )))
        }
    };
    if sides.contains(&Side::E) && common.n != 2 {
        return Err(ConfigError("E-side collections require n = 2".into()));
    }
    let started = Instant::now();
    let opts = simplify_opts(common.max_steps);
    let mut report = Report::new(RunConfig {
        command: "verify-sod".into(),
        n: common.n,
        n_total: common.n_total,
        k: common.k.clone(),
        side: side.to_string(),
        jobs: common.jobs,
        max_steps: common.max_steps,
    });
    for target in targets(common)? {
        for s in &sides {
            let spec = match s {
                Side::F => CollectionSpec::f_side(target.clone()),
                Side::E => CollectionSpec::e_side(target.clone())?,
            };
            let cert = verify_collection(&spec, &opts, diagnostic);
            println!(
                "{}-side at {}: {} members, {} pairs, {}",
                s,
                target,
                cert.member_count,
                cert.pairs.len(),
                cert.status
            );
            report.certificates.push(cert);
        }
    }
    emit(&mut report, common, started.elapsed().as_millis())
}

fn run_verify_kapranov(common: &CommonArgs) -> Result<i32, ConfigError> {
    validate_common(common)?;
    if common.n != 2 {
        return Err(ConfigError(
            "the oracle suite covers n = 2; flag collections are engine-verified via verify-sod"
                .into(),
        ));
    }
    let started = Instant::now();
    let mut report = Report::new(RunConfig {
        command: "verify-kapranov".into(),
        n: common.n,
        n_total: common.n_total,
        k: common.k.clone(),
        side: "F".into(),
        jobs: common.jobs,
        max_steps: None,
    });
    let n_total = common.n_total as usize;
    for target in targets(common)? {
        let k = target.k(1) as usize;
        let box_v = enumerate_p(DiagramBox::new((n_total - k) as u32, k as u32));
        let box_q = enumerate_p(DiagramBox::new(k as u32, (n_total - k) as u32));
        let mut ok = true;
        let mut detail = Vec::new();
        for a in &box_v {
            for b in &box_v {
                let t = ext_v(a, b, k, n_total)?;
                match lex_compare(a, b) {
                    std::cmp::Ordering::Equal => {
                        if t != GradedDims::singleton(0, 1) {
                            ok = false;
                            detail.push(format!("ext_V({a},{a}) = {t}"));
                        }
                    }
                    std::cmp::Ordering::Less => {
                        if !t.is_zero() {
                            ok = false;
                            detail.push(format!("ext_V({a},{b}) = {t}"));
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
        for a in &box_q {
            for b in &box_q {
                let t = ext_q(a, b, k, n_total)?;
                match lex_compare(a, b) {
                    std::cmp::Ordering::Equal => {
                        if t != GradedDims::singleton(0, 1) {
                            ok = false;
                            detail.push(format!("ext_Q({a},{a}) = {t}"));
                        }
                    }
                    std::cmp::Ordering::Greater => {
                        if !t.is_zero() {
                            ok = false;
                            detail.push(format!("ext_Q({a},{b}) = {t}"));
                        }
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        report.crosschecks.push(CrossEntry {
            kind: "kapranov".into(),
            detail: if ok {
                format!(
                    "Gr({k},{n_total}): {} members exceptional and semiorthogonal, dual order opposite",
                    box_v.len()
                )
            } else {
                detail.join("; ")
            },
            ok,
        });
    }
    emit(&mut report, common, started.elapsed().as_millis())
}

fn run_eval_word(input: &str, max_steps: Option<usize>) -> Result<i32, ConfigError> {
    let word = match words::parse_word(input) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("{e}");
            eprintln!("{WORD_GRAMMAR}");
            return Ok(64);
        }
    };
    let opts = simplify_opts(max_steps);
    let simp = simplify_with(&FunctorExpr::Word(word.clone()), &opts);
    match &simp.verdict {
        Verdict::IsoIdentity(m) => println!("engine: identity with shift [{m}]"),
        Verdict::ProvenZero => println!("engine: 0"),
        Verdict::Stuck(residue) => println!("engine: {residue}"),
    }
    println!("engine steps: {} ({})", simp.steps.len(), simp.clause_digest());

    // oracle evaluation where defined: pure F words at the highest weight,
    // pure E words at (N,0)
    let n = word.domain.n();
    let total = word.domain.total();
    let pure_f = word
        .tokens
        .iter()
        .all(|t| t.kind == GenKind::F && t.color == 1);
    let pure_e = word
        .tokens
        .iter()
        .all(|t| t.kind == GenKind::E && t.color == 1);
    if n == 2 && pure_f && word.domain == WeightVector::highest(2, total) {
        let indices: Vec<i64> = word.tokens.iter().map(|t| t.index).collect();
        println!("oracle: {}", eval_f_word(&indices, total as usize));
    } else if n == 2 && pure_e && word.domain == WeightVector::lowest(2, total) {
        let indices: Vec<i64> = word.tokens.iter().map(|t| t.index).collect();
        println!("oracle: {}", eval_e_word(&indices, total as usize));
    } else {
        println!(
            "oracle: not defined for this word (needs a pure F word at (0,N) or pure E word at (N,0))"
        );
    }
    Ok(0)
}

fn run_check_relations(common: &CommonArgs, rel: &Option<Vec<String>>) -> Result<i32, ConfigError> {
    validate_common(common)?;
    if common.n != 2 {
        return Err(ConfigError("relation matrices are built for n = 2".into()));
    }
    let selected: Vec<RelId> = match rel {
        None => RelId::ALL.to_vec(),
        Some(names) => {
            let mut out = Vec::new();
            for name in names {
                if name == "U02" || name == "U08" {
                    return Err(ConfigError(format!(
                        "out of scope: h-generators ({name} involves h_{{i,±1}})"
                    )));
                }
                match RelId::parse(name) {
                    Some(r) => out.push(r),
                    None => return Err(ConfigError(format!("unknown relation id {name}"))),
                }
            }
            out
        }
    };
    let started = Instant::now();
    let mut report = Report::new(RunConfig {
        command: "check-relations".into(),
        n: common.n,
        n_total: common.n_total,
        k: None,
        side: "-".into(),
        jobs: common.jobs,
        max_steps: None,
    });
    for r in selected {
        let check = check_relation(r, common.n_total as usize);
        println!(
            "{}: {} cases, {}",
            check.id,
            check.cases,
            if check.pass { "pass" } else { "FAIL" }
        );
        if let Some(w) = &check.witness {
            println!("  witness: {w}");
        }
        report.relations.push(check);
    }
    emit(&mut report, common, started.elapsed().as_millis())
}

fn run_dual_pairing(common: &CommonArgs) -> Result<i32, ConfigError> {
    validate_common(common)?;
    if common.n != 2 {
        return Err(ConfigError(
            "dual pairings are computed on Grassmannians (n = 2)".into(),
        ));
    }
    let started = Instant::now();
    let n_total = common.n_total as usize;
    let mut report = Report::new(RunConfig {
        command: "dual-pairing".into(),
        n: common.n,
        n_total: common.n_total,
        k: common.k.clone(),
        side: "-".into(),
        jobs: common.jobs,
        max_steps: None,
    });
    for target in targets(common)? {
        let k = target.k(1) as usize;
        let mus = enumerate_p(DiagramBox::new(k as u32, (n_total - k) as u32));
        let lams = enumerate_p(DiagramBox::new((n_total - k) as u32, k as u32));
        let mut seen = vec![false; lams.len()];
        let mut ok = true;
        let mut matches = Vec::new();
        for mu in &mus {
            let mut hits = Vec::new();
            for (j, lam) in lams.iter().enumerate() {
                let t = dual_pairing(mu, lam, k, n_total)?;
                if !t.is_zero() {
                    hits.push((j, lam.clone(), t));
                }
            }
            if hits.len() == 1 && hits[0].2 == GradedDims::singleton(0, 1) && !seen[hits[0].0] {
                seen[hits[0].0] = true;
                matches.push(format!("{mu}↔{}", hits[0].1));
            } else {
                ok = false;
            }
        }
        ok &= seen.iter().all(|&s| s);
        let detail = format!("Gr({k},{n_total}): {}", matches.join(", "));
        println!(
            "{} [{}]",
            detail,
            if ok { "delta pattern" } else { "NOT a bijection" }
        );
        report.crosschecks.push(CrossEntry {
            kind: "dual-pairing".into(),
            detail,
            ok,
        });
    }
    emit(&mut report, common, started.elapsed().as_millis())
}

fn run_cross_check(common: &CommonArgs) -> Result<i32, ConfigError> {
    validate_common(common)?;
    if common.n != 2 {
        return Err(ConfigError(
            "cross-checks are computed on Grassmannians (n = 2)".into(),
        ));
    }
    let started = Instant::now();
    let n_total = common.n_total as usize;
    let mut report = Report::new(RunConfig {
        command: "cross-check".into(),
        n: common.n,
        n_total: common.n_total,
        k: common.k.clone(),
        side: "-".into(),
        jobs: common.jobs,
        max_steps: None,
    });
    for target in targets(common)? {
        let k = target.k(1) as usize;
        let bx = enumerate_p(DiagramBox::new((n_total - k) as u32, k as u32));
        let mut agreed = 0u64;
        let mut incomplete = 0u64;
        for a in &bx {
            for b in &bx {
                let out = cross_check(a, b, k, n_total);
                let claimed = lex_compare(a, b) != std::cmp::Ordering::Greater;
                match out {
                    szero_core::ktheory::CrossCheckOutcome::Agree { .. } => agreed += 1,
                    szero_core::ktheory::CrossCheckOutcome::EngineIncomplete { .. } => {
                        incomplete += 1;
                        if claimed {
                            report.crosschecks.push(CrossEntry {
                                kind: "engine-incomplete".into(),
                                detail: format!("Gr({k},{n_total}): pair ({a},{b}) stuck"),
                                ok: false,
                            });
                        }
                    }
                    szero_core::ktheory::CrossCheckOutcome::Mismatch { verdict, ext } => {
                        report.crosschecks.push(CrossEntry {
                            kind: "mismatch".into(),
                            detail: format!(
                                "Gr({k},{n_total}): pair ({a},{b}): engine {verdict} vs ext {ext}"
                            ),
                            ok: false,
                        });
                    }
                }
            }
        }
        report.crosschecks.push(CrossEntry {
            kind: "cross-check".into(),
            detail: format!(
                "Gr({k},{n_total}): {} of {} pairs agree exactly, {} no-claim pairs left to the oracle",
                agreed,
                bx.len() * bx.len(),
                incomplete
            ),
            ok: true,
        });
        println!("Gr({k},{n_total}): {agreed} agreements, {incomplete} engine-incomplete (no-claim)");
    }
    emit(&mut report, common, started.elapsed().as_millis())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.cmd {
        Cmd::VerifySod {
            common,
            side,
            diagnostic,
        } => run_verify_sod(common, side, *diagnostic),
        Cmd::VerifyKapranov { common } => run_verify_kapranov(common),
        Cmd::EvalWord { word, max_steps } => run_eval_word(word, *max_steps),
        Cmd::CheckRelations { common, rel } => run_check_relations(common, rel),
        Cmd::DualPairing { common } => run_dual_pairing(common),
        Cmd::CrossCheck { common } => run_cross_check(common),
    };
    match result {
        Ok(code) => ExitCode::from(code.clamp(0, 255) as u8),
        Err(ConfigError(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(64)
        }
    }
}
