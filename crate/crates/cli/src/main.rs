//! `kron`: Kronecker coefficients, reduced coefficients and stretching
//! quasipolynomials from the command line.
//!
//! Exit status: 0 success, 1 other failure, 2 bad input, 3 verification
//! mismatch, 4 resource cap exceeded.

mod render;

use std::fs::File;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kronecker::engine::select_method;
use kronecker::hunt::{hunt, HuntConfig, HuntMode, HuntOutcome, SearchBox};
use kronecker::kron2row::length_bound_check;
use kronecker::reduced::murnaghan_littlewood_lr;
use kronecker::selftest::{selftest, Fault, SelftestReport};
use kronecker::stretch::{DEFAULT_CAP, DEFAULT_DEGREE, DEFAULT_PERIOD};
use kronecker::{
    analyze_triple, kostka, kron_with, lr_coeff, rkron_one_row, rkron_stabilized, AnalysisConfig,
    Error, KronTriple, Method, Oracle, Partition, ReducedIndex, Reduction, SaturationDomain,
};
use serde_json::{json, Value};

const DEFAULT_ORACLE_MAX: u64 = 14;
const DEFAULT_RKRON_ORACLE_MAX: u64 = 40;

#[derive(Parser)]
#[command(
    name = "kron",
    version,
    about = "Kronecker coefficients of the symmetric group"
)]
struct Cli {
    /// Print one JSON record on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in the JSON metadata.
    #[arg(long, global = true)]
    timings: bool,
    /// Largest weight the character oracle will handle.
    #[arg(long, global = true, value_name = "N")]
    oracle_max: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TripleArgs {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
}

impl TripleArgs {
    fn triple(&self) -> Result<KronTriple, Failure> {
        Ok(KronTriple::new(
            self.lambda.clone(),
            self.mu.clone(),
            self.nu.clone(),
        )?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Sh,
    Ph2,
}

#[derive(Subcommand)]
enum Command {
    /// Compute g(λ, μ, ν).
    Kron {
        #[command(flatten)]
        triple: TripleArgs,
        /// Force a method: rosas, reduction, reduced or oracle.
        #[arg(long)]
        method: Option<Method>,
        /// Cross-check against a second method.
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether g(λ, μ, ν) is zero.
    Zerokron {
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// Reduced Kronecker coefficient with index γ, α, β.
    Rkron {
        gamma: Partition,
        alpha: Partition,
        beta: Partition,
        /// Count lattice points instead (one-row α and β, γ with at most two rows).
        #[arg(long)]
        polytope: bool,
    },
    /// Kostka number K(λ, μ).
    Kostka { lambda: Partition, mu: Partition },
    /// Littlewood-Richardson coefficient c^λ_{μ,ν}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        /// Also compute it as a reduced Kronecker coefficient and compare.
        #[arg(long)]
        via_rkron: bool,
    },
    /// Fit the stretching quasipolynomial and test the hypotheses.
    Stretch {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, default_value_t = AnalysisConfig::default().n_max)]
        nmax: u64,
        #[arg(long, default_value_t = DEFAULT_PERIOD)]
        period: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        /// Largest shift tried for the saturation and positivity indices.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        /// literal or class.
        #[arg(long, default_value = "literal")]
        saturation_domain: SaturationDomain,
        #[arg(long)]
        method: Option<Method>,
    },
    /// Search two-two-row triples for hypothesis failures.
    Hunt {
        #[arg(long)]
        max_lambda1: u64,
        /// Also bound |λ|.
        #[arg(long)]
        max_weight: Option<u64>,
        #[arg(long, value_enum, default_value = "sh")]
        mode: ModeArg,
        #[arg(long, default_value_t = HuntConfig::default().n_max)]
        nmax: u64,
        #[arg(long, default_value_t = DEFAULT_PERIOD)]
        period: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, default_value = "literal")]
        saturation_domain: SaturationDomain,
        /// rosas or reduced.
        #[arg(long, default_value = "rosas")]
        method: Method,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Worker threads; defaults to one per CPU.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Compare every method on all two-two-row triples up to a weight.
    Selftest {
        #[arg(long, default_value_t = 9)]
        max_weight: u64,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

enum Failure {
    Engine(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Engine(Error::OracleOverflow { .. } | Error::Overflow(_)) => 4,
            Failure::Engine(Error::FitMismatch { .. } | Error::ShapeDecomposition(_)) => 1,
            Failure::Engine(_) => 2,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Engine(e) => write!(f, "{e}"),
            Failure::Io(e) => f.write_str(e),
        }
    }
}

/// What a command produced: the JSON payload, its text rendering and whether
/// every internal check agreed.
struct Outcome {
    inputs: Value,
    result: Value,
    method: Option<String>,
    text: String,
    verified: bool,
}

impl Outcome {
    fn new(inputs: Value, result: Value, text: String) -> Self {
        Outcome {
            inputs,
            result,
            method: None,
            text,
            verified: true,
        }
    }

    fn method(mut self, m: impl ToString) -> Self {
        self.method = Some(m.to_string());
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let mut metadata = json!({
                    "method": out.method,
                    "oracle_max_weight": oracle_max(&cli),
                    "version": env!("CARGO_PKG_VERSION"),
                });
                if cli.timings {
                    metadata["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
                }
                let record = json!({
                    "command": command_name(&cli.command),
                    "argv": argv,
                    "inputs": out.inputs,
                    "result": out.result,
                    "verified": out.verified,
                    "metadata": metadata,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&record).expect("json values serialize")
                );
            } else {
                println!("{}", out.text);
                if cli.timings {
                    println!("elapsed: {} ms", start.elapsed().as_millis());
                }
            }
            if out.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification mismatch");
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Kron { .. } => "kron",
        Command::Zerokron { .. } => "zerokron",
        Command::Rkron { .. } => "rkron",
        Command::Kostka { .. } => "kostka",
        Command::Lr { .. } => "lr",
        Command::Stretch { .. } => "stretch",
        Command::Hunt { .. } => "hunt",
        Command::Selftest { .. } => "selftest",
    }
}

fn oracle_max(cli: &Cli) -> u64 {
    cli.oracle_max.unwrap_or(match &cli.command {
        Command::Rkron { .. } | Command::Lr { .. } => DEFAULT_RKRON_ORACLE_MAX,
        Command::Selftest { max_weight, .. } => (*max_weight).max(DEFAULT_ORACLE_MAX),
        _ => DEFAULT_ORACLE_MAX,
    })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let oracle = Oracle::new(oracle_max(cli));
    match &cli.command {
        Command::Kron {
            triple,
            method,
            verify,
        } => cmd_kron(&triple.triple()?, *method, *verify, &oracle),
        Command::Zerokron { triple } => cmd_zerokron(&triple.triple()?, &oracle),
        Command::Rkron {
            gamma,
            alpha,
            beta,
            polytope,
        } => cmd_rkron(
            ReducedIndex::new(gamma.clone(), alpha.clone(), beta.clone()),
            *polytope,
            &oracle,
        ),
        Command::Kostka { lambda, mu } => cmd_kostka(lambda, mu),
        Command::Lr {
            lambda,
            mu,
            nu,
            via_rkron,
        } => cmd_lr(lambda, mu, nu, *via_rkron, &oracle),
        Command::Stretch {
            triple,
            nmax,
            period,
            degree,
            cap,
            saturation_domain,
            method,
        } => {
            let cfg = AnalysisConfig {
                n_max: *nmax,
                period: *period,
                degree: *degree,
                cap: *cap,
                domain: *saturation_domain,
                method: *method,
            };
            cmd_stretch(&triple.triple()?, &cfg, &oracle)
        }
        Command::Hunt {
            max_lambda1,
            max_weight,
            mode,
            nmax,
            period,
            degree,
            cap,
            saturation_domain,
            method,
            csv,
            threads,
        } => {
            init_threads(*threads)?;
            let mut search = SearchBox::new(*max_lambda1)?;
            if let Some(w) = max_weight {
                search = search.with_max_weight(*w);
            }
            let mode = match mode {
                ModeArg::Sh => HuntMode::Sh,
                ModeArg::Ph2 => HuntMode::Ph2,
            };
            let cfg = HuntConfig {
                n_max: *nmax,
                period: *period,
                degree: *degree,
                cap: *cap,
                domain: *saturation_domain,
                method: *method,
            };
            cmd_hunt(mode, &search, &cfg, csv.as_deref(), &oracle)
        }
        Command::Selftest {
            max_weight,
            csv,
            threads,
            inject_fault,
        } => {
            init_threads(*threads)?;
            let fault = inject_fault.then_some(Fault::RosasOffByOne);
            cmd_selftest(*max_weight, fault, csv.as_deref(), &oracle)
        }
    }
}

fn init_threads(threads: Option<usize>) -> Result<(), Failure> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Io(format!("cannot start {n} worker threads: {e}")))?;
    }
    Ok(())
}

fn second_method(t: &KronTriple, primary: Method, oracle: &Oracle) -> Option<Method> {
    let oracle_fits = t.weight() <= oracle.max_weight();
    let mut candidates: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|&m| m != primary && m.applies_to(t))
        .collect();
    if !oracle_fits {
        candidates.retain(|&m| m != Method::Oracle);
    }
    candidates
        .iter()
        .copied()
        .find(|&m| m == Method::Oracle)
        .or(candidates.first().copied())
}

fn cmd_kron(
    t: &KronTriple,
    method: Option<Method>,
    verify: bool,
    oracle: &Oracle,
) -> Result<Outcome, Failure> {
    let method = method.unwrap_or_else(|| select_method(t));
    let g = kron_with(t, method, oracle)?;
    let mut result = json!({ "g": render::count(g) });
    let mut text = format!("g{t} = {g}  [{method}]");
    let mut verified = true;
    if verify {
        let other = second_method(t, method, oracle).ok_or_else(|| {
            Error::Parameter(format!(
                "no second method applies to {t} within the oracle limit"
            ))
        })?;
        let h = kron_with(t, other, oracle)?;
        verified = g == h;
        result["check"] =
            json!({ "method": other.name(), "g": render::count(h), "agree": verified });
        text += &format!(
            "\n{other}: {h}, {}",
            if verified {
                "methods agree"
            } else {
                "MISMATCH"
            }
        );
    }
    let mut out = Outcome::new(render::triple(t), result, text).method(method);
    out.verified = verified;
    Ok(out)
}

fn cmd_zerokron(t: &KronTriple, oracle: &Oracle) -> Result<Outcome, Failure> {
    let inputs = render::triple(t);
    if !length_bound_check(t) {
        let why = format!(
            "length bound: l(lambda) = {} > l(mu) * l(nu) = {}",
            t.lambda.length(),
            t.mu.length() * t.nu.length()
        );
        let result = json!({ "zero": true, "g": 0, "certificate": why });
        return Ok(Outcome::new(inputs, result, format!("zero ({why})")).method("length-bound"));
    }
    let method = select_method(t);
    if method == Method::Reduction {
        if let Reduction::ZeroCertificate(why) = kronecker::reduce_by_determinants(t, 2, 2)? {
            let result = json!({ "zero": true, "g": 0, "certificate": why });
            return Ok(Outcome::new(inputs, result, format!("zero ({why})")).method(method));
        }
    }
    let g = kron_with(t, method, oracle)?;
    let verdict = if g == 0 { "zero" } else { "positive" };
    let result = json!({ "zero": g == 0, "g": render::count(g), "certificate": Value::Null });
    Ok(Outcome::new(inputs, result, format!("{verdict} (g = {g})")).method(method))
}

fn cmd_rkron(idx: ReducedIndex, polytope: bool, oracle: &Oracle) -> Result<Outcome, Failure> {
    let inputs = json!({
        "gamma": idx.gamma.to_string(),
        "alpha": idx.alpha.to_string(),
        "beta": idx.beta.to_string(),
    });
    let (g, method) = if polytope {
        if idx.alpha.length() > 1 || idx.beta.length() > 1 || idx.gamma.length() > 2 {
            return Err(Error::Shape(format!(
                "--polytope needs one-row alpha and beta and at most two rows in gamma, got ({}; {}, {})",
                idx.gamma, idx.alpha, idx.beta
            ))
            .into());
        }
        let g = rkron_one_row(
            idx.alpha.part(1),
            idx.beta.part(1),
            idx.gamma.part(1),
            idx.gamma.part(2),
        )?;
        (g, "polytope")
    } else {
        (rkron_stabilized(oracle, &idx)?, "oracle")
    };
    let result = json!({ "g": render::count(g), "stable_weight": idx.stable_weight() });
    let text = format!(
        "reduced g({}; {}, {}) = {g}  [{method}]",
        idx.gamma, idx.alpha, idx.beta
    );
    Ok(Outcome::new(inputs, result, text).method(method))
}

fn check_weights(what: &str, left: (&str, &Partition), right: u64) -> Result<(), Failure> {
    if left.1.weight() != right {
        return Err(Error::WeightMismatch(format!(
            "|{}| = {} but {what} = {right}",
            left.0,
            left.1.weight()
        ))
        .into());
    }
    Ok(())
}

fn cmd_kostka(lambda: &Partition, mu: &Partition) -> Result<Outcome, Failure> {
    check_weights("|mu|", ("lambda", lambda), mu.weight())?;
    let k = kostka(lambda, mu)?;
    let inputs = json!({ "lambda": lambda.to_string(), "mu": mu.to_string() });
    Ok(Outcome::new(
        inputs,
        json!({ "k": render::count(k) }),
        format!("K({lambda}; {mu}) = {k}"),
    )
    .method("tableaux"))
}

fn cmd_lr(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    via_rkron: bool,
    oracle: &Oracle,
) -> Result<Outcome, Failure> {
    check_weights("|mu| + |nu|", ("lambda", lambda), mu.weight() + nu.weight())?;
    let c = lr_coeff(lambda, mu, nu)?;
    let inputs =
        json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "nu": nu.to_string() });
    let mut result = json!({ "c": render::count(c) });
    let mut text = format!("c({lambda}; {mu}, {nu}) = {c}");
    let mut verified = true;
    if via_rkron {
        let r = murnaghan_littlewood_lr(oracle, lambda, mu, nu)?;
        verified = r == c;
        result["check"] = json!({ "method": "rkron", "c": render::count(r), "agree": verified });
        text += &format!(
            "\nreduced Kronecker: {r}, {}",
            if verified { "paths agree" } else { "MISMATCH" }
        );
    }
    let mut out = Outcome::new(inputs, result, text).method("tableaux");
    out.verified = verified;
    Ok(out)
}

fn cmd_stretch(t: &KronTriple, cfg: &AnalysisConfig, oracle: &Oracle) -> Result<Outcome, Failure> {
    let report = analyze_triple(t, cfg, oracle)?;
    let mut inputs = render::triple(t);
    inputs["config"] = json!({
        "nmax": cfg.n_max,
        "period": cfg.period,
        "degree": cfg.degree,
        "cap": cfg.cap,
        "saturation_domain": cfg.domain,
    });
    let text = format!("stretching {t}\n{}", render::report_text(&report));
    Ok(Outcome::new(inputs, render::report(&report), text).method(report.samples.method))
}

fn cmd_hunt(
    mode: HuntMode,
    search: &SearchBox,
    cfg: &HuntConfig,
    csv: Option<&Path>,
    oracle: &Oracle,
) -> Result<Outcome, Failure> {
    let out = hunt(mode, search, cfg, oracle)?;
    if let Some(path) = csv {
        write_hunt_csv(path, &out)?;
    }
    let inputs = json!({
        "max_lambda1": search.max_lambda1,
        "max_weight": search.max_weight,
        "mode": mode,
        "nmax": cfg.n_max,
        "period": cfg.period,
        "degree": cfg.degree,
        "cap": cfg.cap,
        "saturation_domain": cfg.domain,
    });
    let mut text = format!(
        "examined {} triples, {} hits\n",
        out.examined,
        out.hits.len()
    );
    for h in &out.hits {
        text += &format!(
            "{:<28} {:<40} SH {:<5} PH2 {:<5} s {:<4} p {}\n",
            h.triple.to_string(),
            h.report.quasipolynomial.to_string(),
            h.report.strong_sh_holds,
            h.report.strong_ph2_holds,
            h.report.saturation_index.to_string(),
            h.report.positivity_index
        );
    }
    let c = &out.classification;
    text += &format!(
        "classification: {} ({} violations, {} missing)",
        if c.holds() { "holds" } else { "FAILS" },
        c.violations.len(),
        c.missing.len()
    );
    let mut outcome = Outcome::new(inputs, render::hunt(&out), text).method(cfg.method);
    outcome.verified = c.holds();
    Ok(outcome)
}

fn csv_error(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("cannot write {}: {e}", path.display()))
}

fn csv_writer(path: &Path) -> Result<csv::Writer<File>, Failure> {
    let file = File::create(path).map_err(|e| csv_error(path, e))?;
    Ok(csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(file))
}

fn write_hunt_csv(path: &Path, out: &HuntOutcome) -> Result<(), Failure> {
    let mut w = csv_writer(path)?;
    let rows = std::iter::once(
        [
            "lambda",
            "mu",
            "nu",
            "quasipolynomial",
            "strong_sh",
            "strong_ph2",
            "saturation_index",
            "positivity_index",
        ]
        .map(String::from),
    )
    .chain(out.hits.iter().map(|h| {
        [
            h.triple.lambda.to_string(),
            h.triple.mu.to_string(),
            h.triple.nu.to_string(),
            h.report.quasipolynomial.to_string(),
            h.report.strong_sh_holds.to_string(),
            h.report.strong_ph2_holds.to_string(),
            h.report.saturation_index.to_string(),
            h.report.positivity_index.to_string(),
        ]
    }));
    for row in rows {
        w.write_record(&row).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| csv_error(path, e))
}

fn write_selftest_csv(path: &Path, report: &SelftestReport) -> Result<(), Failure> {
    let mut w = csv_writer(path)?;
    w.write_record(["lambda", "mu", "nu", "rosas", "reduced", "oracle", "agree"])
        .map_err(|e| csv_error(path, e))?;
    for c in &report.comparisons {
        w.write_record([
            c.triple.lambda.to_string(),
            c.triple.mu.to_string(),
            c.triple.nu.to_string(),
            c.rosas.to_string(),
            c.reduced.to_string(),
            c.oracle.to_string(),
            c.agrees().to_string(),
        ])
        .map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| csv_error(path, e))
}

fn cmd_selftest(
    max_weight: u64,
    fault: Option<Fault>,
    csv: Option<&Path>,
    oracle: &Oracle,
) -> Result<Outcome, Failure> {
    let report = selftest(max_weight, oracle, fault)?;
    if let Some(path) = csv {
        write_selftest_csv(path, &report)?;
    }
    let mismatches: Vec<Value> = report
        .mismatches()
        .map(|c| {
            let mut v = render::triple(&c.triple);
            v["rosas"] = render::count(c.rosas);
            v["reduced"] = render::count(c.reduced);
            v["oracle"] = render::count(c.oracle);
            v
        })
        .collect();
    let mut text = format!(
        "selftest up to weight {max_weight}: {} triples, {} mismatches",
        report.comparisons.len(),
        mismatches.len()
    );
    for c in report.mismatches() {
        text += &format!(
            "\n  {}: rosas {} reduced {} oracle {}",
            c.triple, c.rosas, c.reduced, c.oracle
        );
    }
    let result = json!({
        "triples": report.comparisons.len(),
        "passed": report.passed(),
        "mismatches": mismatches,
    });
    let mut out = Outcome::new(json!({ "max_weight": max_weight }), result, text)
        .method("rosas,reduced,oracle");
    out.verified = report.passed();
    Ok(out)
}
