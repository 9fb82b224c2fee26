//! Command-line surface. Exit codes: 0 success, 1 a mathematical property
//! failed (routes disagree, not bi-gamma-positive, sweep violation), 2 usage.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumeration::{bivariate_brute, default_budget};
use crate::error::Error;
use crate::gamma::{classify_expansion_type, gamma_expansion, GammaVector, PositivityReport};
use crate::macmahon::macmahon_polynomial;
use crate::multiset::MultisetSpec;
use crate::operators::polynomial_via_operators;
use crate::poly::{parse_rational, BiPoly, UniPoly};
use crate::render;
use crate::sweep::{run_verify, VerifyConfig, VerifySummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mseuler",
    version,
    about = "Descent polynomials of multiset permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute A_m(x) (or A_m(x,y)) by one or all routes.
    Compute(ComputeArgs),
    /// Symmetric decomposition and positivity report for one multiset.
    Check(CheckArgs),
    /// Gamma expansion of an explicit polynomial.
    Gamma(GammaArgs),
    /// Sweep every multiset up to a size and cross-check everything.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enum,
    Macmahon,
    Operators,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Multiplicities, "2,1,2" or "1^3 2^4".
    #[arg(long, allow_hyphen_values = true)]
    pub spec: String,
    #[arg(long)]
    pub bivariate: bool,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Enumeration budget in words (default from MSEULER_BUDGET or 2e7).
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub spec: String,
    /// Center parameter: "m", "deg" or an integer.
    #[arg(long, default_value = "m")]
    pub n_param: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    /// Coefficients f_0,f_1,... (integers or fractions like 1/2).
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_m: u32,
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub multiplicities: Vec<u32>,
    #[arg(long)]
    pub budget: Option<u64>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

enum Failure {
    Usage(String),
    Io,
}

impl From<std::io::Error> for Failure {
    fn from(_: std::io::Error) -> Self {
        Failure::Io
    }
}

type CmdResult = Result<i32, Failure>;

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a, out, err),
        Command::Check(a) => cmd_check(a, out),
        Command::Gamma(a) => cmd_gamma(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io) => EXIT_USAGE,
    }
}

fn parse_spec(s: &str) -> Result<MultisetSpec, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    Failure::Usage(format!("format {format:?} is not supported by {cmd}"))
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

fn route_name(m: Method) -> &'static str {
    match m {
        Method::Enum => "enum",
        Method::Macmahon => "macmahon",
        Method::Operators => "operators",
        Method::All => "all",
    }
}

/// Computes one route in bivariate form. An error under `--method all`
/// marks the route as skipped.
fn route(spec: &MultisetSpec, method: Method, budget: u64) -> Result<BiPoly, Error> {
    match method {
        Method::Enum if spec.is_empty() => Ok(BiPoly::x()),
        Method::Enum => bivariate_brute(spec, budget),
        Method::Macmahon => Ok(macmahon_polynomial(spec)
            .homogenize(spec.total() + 1)
            .expect("deg A <= m")),
        Method::Operators => polynomial_via_operators(spec),
        Method::All => unreachable!(),
    }
}

fn cmd_compute(a: &ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let spec = parse_spec(&a.spec)?;
    let budget = a.budget.unwrap_or_else(default_budget);
    let methods = match a.method {
        Method::All => vec![Method::Enum, Method::Macmahon, Method::Operators],
        m => vec![m],
    };

    let mut results: Vec<(&str, BiPoly)> = Vec::new();
    let mut skipped: Vec<(&str, String)> = Vec::new();
    for m in methods {
        match route(&spec, m, budget) {
            Ok(p) => results.push((route_name(m), p)),
            Err(e) if a.method == Method::All => skipped.push((route_name(m), e.to_string())),
            Err(e) => return Err(Failure::Usage(e.to_string())),
        }
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let reference = results[0].1.clone();

    match a.format {
        Format::Text => {
            writeln!(out, "multiset {spec}, m = {}", spec.total())?;
            let names: Vec<&str> = results.iter().map(|r| r.0).collect();
            let verdict = if agree { "agree" } else { "DISAGREE" };
            writeln!(out, "routes: {} ({verdict})", names.join(", "))?;
            for (name, why) in &skipped {
                writeln!(out, "skipped {name}: {why}")?;
            }
            if agree {
                write_poly_line(out, a.bivariate, &reference)?;
            }
        }
        Format::Json => {
            let poly = if a.bivariate {
                serde_json::to_value(&reference)
            } else {
                serde_json::to_value(reference.set_y_to_one())
            }
            .expect("serializable");
            let doc = json!({
                "spec": spec,
                "m": spec.total(),
                "bivariate": a.bivariate,
                "routes": results.iter().map(|r| r.0).collect::<Vec<_>>(),
                "skipped": skipped.iter().map(|(n, why)| json!({"route": n, "reason": why})).collect::<Vec<_>>(),
                "agree": agree,
                "polynomial": poly,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Latex => {
            if a.bivariate {
                writeln!(out, "{}", render::latex_bivariate(&reference))?;
            } else {
                writeln!(
                    out,
                    "{}",
                    render::latex_univariate(&reference.set_y_to_one())
                )?;
            }
        }
        Format::Csv => {
            if a.bivariate {
                write!(out, "{}", render::csv_bivariate(&reference))?;
            } else {
                write!(out, "{}", render::csv_univariate(&reference.set_y_to_one()))?;
            }
        }
    }

    if !agree {
        for (name, p) in &results {
            writeln!(err, "{name}: {p}")?;
        }
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn write_poly_line(out: &mut dyn Write, bivariate: bool, p: &BiPoly) -> std::io::Result<()> {
    if bivariate {
        writeln!(out, "A(x,y) = {p}")?;
        writeln!(out, "       = {}", render::latex_bivariate(p))
    } else {
        writeln!(out, "A(x) = {}", p.set_y_to_one())
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn gamma_text(g: &Option<GammaVector>) -> String {
    match g {
        Some(g) => {
            let parts: Vec<String> = g.gammas.iter().map(|c| c.to_string()).collect();
            format!("[{}] (n = {})", parts.join(", "), g.n)
        }
        None => "none (not symmetric)".into(),
    }
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> CmdResult {
    let spec = parse_spec(&a.spec)?;
    let m = spec.total();
    let (f, bivariate) = match polynomial_via_operators(&spec) {
        Ok(p) => (p.set_y_to_one(), Some(p)),
        Err(_) => (macmahon_polynomial(&spec), None),
    };
    let n = match a.n_param.trim() {
        "m" => m,
        "deg" => f.degree().unwrap_or(0),
        other => other.parse().map_err(|_| {
            Failure::Usage(format!(
                "--n-param must be m, deg or an integer, got {other:?}"
            ))
        })?,
    };
    let report = PositivityReport::build(&f, n).map_err(|e| match e {
        Error::DegreeExceedsN { .. } => Failure::Usage(e.to_string()),
        other => Failure::Usage(format!("internal: {other}")),
    })?;
    let expansion = match (&bivariate, spec.is_empty()) {
        (Some(p), false) => Some(
            classify_expansion_type(&spec, p)
                .map_err(|e| Failure::Usage(format!("internal: {e}")))?,
        ),
        _ => None,
    };

    let poly = |p: &UniPoly| match a.format {
        Format::Latex => render::latex_univariate(p),
        _ => p.to_string(),
    };
    match a.format {
        Format::Text | Format::Latex => {
            let d = &report.witnesses.decomposition;
            writeln!(out, "multiset {spec}, m = {m}, n = {n}")?;
            writeln!(out, "A(x) = {}", poly(&f))?;
            if let Some(t) = expansion {
                writeln!(out, "expansion type: {t}")?;
            }
            writeln!(out, "a(x) = {}", poly(&d.a))?;
            writeln!(out, "b(x) = {}", poly(&d.b))?;
            writeln!(out, "gamma(a) = {}", gamma_text(&report.witnesses.gamma_a))?;
            writeln!(out, "gamma(b) = {}", gamma_text(&report.witnesses.gamma_b))?;
            writeln!(out, "symmetric: {}", report.symmetric)?;
            match report.gamma_positive {
                Some(g) => writeln!(out, "gamma-positive: {g}")?,
                None => writeln!(out, "gamma-positive: n/a")?,
            }
            writeln!(out, "bi-gamma-positive: {}", report.bi_gamma_positive)?;
            writeln!(
                out,
                "alternatingly increasing: {}",
                report.alternatingly_increasing
            )?;
            let modes: Vec<String> = report.modes.iter().map(u32::to_string).collect();
            writeln!(
                out,
                "unimodal: {}, modes {{{}}}",
                report.unimodal,
                modes.join(", ")
            )?;
        }
        Format::Json => {
            let doc = json!({
                "spec": spec,
                "m": m,
                "n": n,
                "expansion_type": expansion,
                "report": report,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Csv => return Err(unsupported(a.format, "check")),
    }
    Ok(if report.bi_gamma_positive {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

fn cmd_gamma(a: &GammaArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let coeffs = a
        .poly
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let f = UniPoly::from_coeffs(coeffs);
    match gamma_expansion(&f, a.n) {
        Ok(g) => {
            match a.format {
                Format::Text => {
                    let parts: Vec<String> = g.gammas.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "n = {}", g.n)?;
                    writeln!(out, "gamma = [{}]", parts.join(", "))?;
                    writeln!(out, "gamma-positive: {}", g.is_nonnegative())?;
                }
                Format::Json => {
                    let doc = json!({"gamma": g, "gamma_positive": g.is_nonnegative()});
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
                }
                Format::Csv => {
                    writeln!(out, "k,num,den")?;
                    for (k, c) in g.gammas.iter().enumerate() {
                        writeln!(out, "{k},{},{}", c.numer(), c.denom())?;
                    }
                }
                Format::Latex => return Err(unsupported(a.format, "gamma")),
            }
            Ok(EXIT_OK)
        }
        Err(e @ Error::NotSymmetric { .. }) => {
            writeln!(err, "{e}")?;
            Ok(EXIT_VIOLATION)
        }
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.multiplicities.is_empty() || a.multiplicities.contains(&0) {
        return Err(Failure::Usage(
            "--multiplicities must list positive integers".into(),
        ));
    }
    let cfg = VerifyConfig {
        max_m: a.max_m,
        multiplicities: a.multiplicities.clone(),
        budget: a.budget.unwrap_or_else(default_budget),
        jobs: a.jobs,
        extra_terms: 8,
    };
    let summary = run_verify(&cfg);
    match a.format {
        Format::Text => write_verify_text(out, &summary)?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&summary).expect("json")
        )?,
        Format::Csv => {
            writeln!(out, "spec,m,words,enumerated,routes_agree,commutator,type,bi_gamma_positive,theorem_holds")?;
            let opt = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
            for o in &summary.outcomes {
                let s: Vec<String> = o.spec.multiplicities().iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{},{},{}",
                    s.join(","),
                    o.m,
                    o.words,
                    o.enumerated,
                    o.routes_agree,
                    opt(o.commutator),
                    o.expansion_type.map(|t| t.to_string()).unwrap_or_default(),
                    opt(o.bi_gamma_positive),
                    opt(o.theorem_holds),
                )?;
            }
        }
        Format::Latex => return Err(unsupported(a.format, "verify")),
    }
    Ok(if summary.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn write_verify_text(out: &mut dyn Write, s: &VerifySummary) -> std::io::Result<()> {
    let mults: Vec<String> = s.multiplicities.iter().map(u32::to_string).collect();
    writeln!(
        out,
        "verify: m <= {}, multiplicities {{{}}}, budget {}",
        s.max_m,
        mults.join(","),
        s.budget
    )?;
    let rows: [(&str, String); 10] = [
        ("multisets", s.specs.to_string()),
        (
            "enumerated",
            format!("{} ({} words)", s.enumerated, s.enumerated_words),
        ),
        ("operator route", s.operator_route.to_string()),
        ("route disagreements", s.route_failures.to_string()),
        (
            "polynomiality failures",
            s.polynomiality_failures.to_string(),
        ),
        ("commutator failures", s.commutator_failures.to_string()),
        ("theorem checked", s.theorem_checked.to_string()),
        ("theorem failures", s.theorem_failures.to_string()),
        (
            "reported only",
            format!(
                "{} ({} not bi-gamma-positive)",
                s.reported_only, s.reported_only_not_bi_gamma
            ),
        ),
        ("violations", s.violations.to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "  {k:<24}{v}")?;
    }
    if let Some(c) = &s.first_counterexample {
        writeln!(out, "first counterexample: {}", c.spec)?;
        for v in &c.violations {
            writeln!(out, "  {v}")?;
        }
    }
    Ok(())
}
