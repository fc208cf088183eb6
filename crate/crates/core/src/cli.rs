//! Command-line front end.
//!
//! [`run`] parses arguments and executes one command, returning the exit
//! code and both output streams so the binary stays a thin wrapper and tests
//! can drive every command in-process. Exit codes: 0 success, 1 domain
//! error, 2 usage error.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::bracket::{bracket, divergence, hamiltonian_field, jacobi_residual};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::grading::{decompose, grade_key, is_homogeneous, max_grade, min_grade};
use crate::ideal::{
    abelian_control, closure_saturate, simplicity_experiment, ClosureConfig, ClosureReport, Stats,
};
use crate::json;
use crate::signature::AlgebraSignature;
use crate::structure::{
    center_probe, check_derivation, find_ad_diagonal, is_ad_diagonal, wplus_automorphism_check,
    LinearMapTable,
};
use crate::text::parse_element;
use crate::window::{TruncationCaps, DEFAULT_MAX_WINDOW};
use crate::Rational;

pub const MAX_WINDOW_ENV: &str = "LIEEXP_MAX_WINDOW";

#[derive(Debug, Parser)]
#[command(
    name = "lieexp",
    version,
    about = "Exact computations in exponential-polynomial Witt and Poisson Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Algebra signature, e.g. "W(1)", "W(2; x1:[1], x2:[1,2])", "Hbar(1,1)".
    #[arg(long, value_parser = parse_signature)]
    pub algebra: AlgebraSignature,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Window {
    /// Largest polynomial power P in the window.
    #[arg(long, default_value_t = 2)]
    pub poly_cap: u32,
    /// Largest absolute exponential coefficient A in the window.
    #[arg(long, default_value_t = 1)]
    pub exp_cap: u32,
}

#[derive(Debug, Args)]
pub struct Saturation {
    #[arg(long, default_value_t = 16)]
    pub max_rounds: usize,
    /// Extra polynomial room for intermediate results.
    #[arg(long, default_value_t = 0)]
    pub margin_poly: u32,
    /// Extra exponential room for intermediate results.
    #[arg(long, default_value_t = 0)]
    pub margin_exp: u32,
    /// Retries with both margins enlarged by one while coverage is below
    /// the certified bound.
    #[arg(long, default_value_t = 2)]
    pub escalations: u32,
    /// Do not seed the span with the tactic chain of the seed.
    #[arg(long)]
    pub no_tactics: bool,
    /// Multiplier search bound for the tactics.
    #[arg(long, default_value_t = crate::ideal::DEFAULT_SEARCH_BOUND)]
    pub search_bound: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket of two elements.
    Bracket {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Grade key of a homogeneous element.
    Grade {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Homogeneous components, ordered by grade key.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Component count, highest power and extreme grades.
    Stats {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Jacobi residual [a,[b,c]] + [b,[c,a]] + [c,[a,b]].
    Jacobi {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Commutant of the window inside the window.
    Center {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
    },
    /// Ad-diagonal test of one element, or a search over window monomials.
    Addiag {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        #[arg(allow_hyphen_values = true)]
        candidate: Option<String>,
    },
    /// Divergence of a Witt-type element.
    Divergence {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Hamiltonian field of an element of H(n), in W(2n).
    Hamiltonian {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Derivation residuals of alpha*S + ad(z), or of the identity map.
    DerivationCheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        /// Element z contributing ad(z).
        #[arg(long, allow_hyphen_values = true)]
        inner: Option<String>,
        /// Coefficient alpha of the scalar derivation S.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        /// Check the identity map instead.
        #[arg(long, conflicts_with_all = ["inner", "alpha"])]
        identity: bool,
    },
    /// Test a candidate automorphism of W+(1) given its values on D1 and x1 D1.
    AutomorphismCheck {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        theta_d: String,
        #[arg(allow_hyphen_values = true)]
        theta_xd: String,
    },
    /// Saturate the ideal generated by one seed inside the window.
    Closure {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        #[command(flatten)]
        saturation: Saturation,
        #[arg(allow_hyphen_values = true)]
        seed: String,
    },
    /// Closure runs from pseudo-random seeds.
    Simplicity {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        #[command(flatten)]
        saturation: Saturation,
        #[arg(long, default_value_t = 20)]
        seeds: usize,
        #[arg(long, default_value_t = 0)]
        rng: u64,
        /// Also run the abelian control.
        #[arg(long)]
        control: bool,
    },
    /// Parse an element and print it canonically.
    ParseCheck {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
}

fn parse_signature(s: &str) -> std::result::Result<AlgebraSignature, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("not a rational number: {s}"))
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn domain(err: &Error) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Run with the window limit taken from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_limit(args, std::env::var(MAX_WINDOW_ENV).ok().as_deref())
}

/// Run with an explicit value for the window limit variable.
pub fn run_with_limit<I, T>(args: I, max_window: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let limit = match max_window {
        None => DEFAULT_MAX_WINDOW,
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => {
                return Outcome::usage(format!(
                    "error: {MAX_WINDOW_ENV} must be a positive integer, got '{v}'\n"
                ))
            }
        },
    };
    match execute(cli.command, limit) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::domain(&e),
    }
}

fn element(src: &str, sig: &Arc<AlgebraSignature>) -> Result<Element> {
    parse_element(src, sig.clone())
}

fn caps(sig: &AlgebraSignature, w: &Window, limit: usize) -> TruncationCaps {
    TruncationCaps::for_signature(sig, w.poly_cap, w.exp_cap).with_max_window(limit)
}

fn config(s: &Saturation) -> ClosureConfig {
    ClosureConfig {
        max_rounds: s.max_rounds,
        margin_poly: s.margin_poly,
        margin_exp: s.margin_exp,
        escalations: s.escalations,
        tactics: !s.no_tactics,
        search_bound: s.search_bound,
    }
}

fn emit(common: &Common, value: Value, text: String) -> String {
    if common.json {
        json::render(&value)
    } else {
        text
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn stats_text(s: &Stats) -> String {
    let (count, power) = if s.poisson { ("h_h", "lp") } else { ("w_h", "hp") };
    let rows = [
        (count, s.components.to_string()),
        (power, opt(s.highest_power)),
        ("max_grade", opt(s.max_grade.as_ref())),
        ("min_grade", opt(s.min_grade.as_ref())),
        ("zero_component", s.has_zero_component.to_string()),
    ];
    table(&rows)
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().fold(String::new(), |mut out, (k, v)| {
        let _ = writeln!(out, "{k:<width$}  {v}");
        out
    })
}

fn closure_text(r: &ClosureReport) -> String {
    let rows = [
        ("seed", r.seed.to_string()),
        ("window", r.caps.to_string()),
        ("working window", r.working_caps.to_string()),
        ("escalations", r.escalations.to_string()),
        ("bracket", r.bracket.to_string()),
        ("multipliers", r.multiplier_budget.clone()),
        ("reached", format!("{}/{}", r.reached_count, r.window_size)),
        ("coverage", r.coverage().to_string()),
        ("coverage bound", r.coverage_bound.to_string()),
        ("rank", r.rank.to_string()),
        ("rounds", r.rounds.to_string()),
        (
            "reached by round",
            r.reached_by_round
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        ),
        ("evaluated", r.evaluated.to_string()),
        ("discarded", r.discarded.to_string()),
        ("fixed point", r.fixed_point.to_string()),
        ("round limit hit", r.round_limit_hit.to_string()),
        (
            "tactic steps",
            opt(r.tactic_trace.as_ref().map(|t| t.steps.len())),
        ),
        ("findings", r.findings.len().to_string()),
    ];
    let mut out = table(&rows);
    for f in &r.findings {
        let _ = writeln!(out, "finding: {f}");
    }
    out
}

fn execute(command: Command, limit: usize) -> Result<String> {
    match command {
        Command::Bracket { common, a, b } => {
            let sig = Arc::new(common.algebra.clone());
            let r = bracket(&element(&a, &sig)?, &element(&b, &sig)?)?;
            Ok(emit(&common, json::element(&r), line(&r)))
        }
        Command::Grade { common, element: src } => {
            let sig = Arc::new(common.algebra.clone());
            let e = element(&src, &sig)?;
            if e.is_zero() {
                return Err(Error::EmptyElement);
            }
            if !is_homogeneous(&e) {
                return Err(Error::Precondition(format!(
                    "{e} is not homogeneous; use decompose"
                )));
            }
            let g = grade_key(&e.terms()[0], &sig)?;
            Ok(emit(&common, json!({"grade": json::grade(&g)}), line(&g)))
        }
        Command::Decompose { common, element: src } => {
            let sig = Arc::new(common.algebra.clone());
            let parts = decompose(&element(&src, &sig)?);
            let value = json!({
                "components": parts
                    .iter()
                    .map(|(g, c)| json!({"grade": json::grade(g), "component": json::element(c)}))
                    .collect::<Vec<_>>(),
            });
            let width = parts.keys().map(|g| g.to_string().len()).max().unwrap_or(0);
            let text = parts.iter().fold(String::new(), |mut out, (g, c)| {
                let _ = writeln!(out, "{:<width$}  {c}", g.to_string());
                out
            });
            Ok(emit(&common, value, text))
        }
        Command::Stats { common, element: src } => {
            let sig = Arc::new(common.algebra.clone());
            let e = element(&src, &sig)?;
            if e.is_zero() {
                return Err(Error::EmptyElement);
            }
            let s = Stats::of(&e);
            Ok(emit(&common, json::stats(&s), stats_text(&s)))
        }
        Command::Jacobi { common, a, b, c } => {
            let sig = Arc::new(common.algebra.clone());
            let r = jacobi_residual(&element(&a, &sig)?, &element(&b, &sig)?, &element(&c, &sig)?)?;
            Ok(emit(&common, json::element(&r), line(&r)))
        }
        Command::Center { common, window } => {
            let sig = Arc::new(common.algebra.clone());
            let caps = caps(&sig, &window, limit);
            let basis = center_probe(&sig, &caps)?;
            let value = json!({
                "caps": json::caps(&caps),
                "basis": basis.iter().map(json::element).collect::<Vec<_>>(),
            });
            let text = if basis.is_empty() {
                line("trivial")
            } else {
                basis.iter().map(line).collect()
            };
            Ok(emit(&common, value, text))
        }
        Command::Addiag {
            common,
            window,
            candidate,
        } => {
            let sig = Arc::new(common.algebra.clone());
            let caps = caps(&sig, &window, limit);
            match candidate {
                Some(src) => {
                    let report = is_ad_diagonal(&element(&src, &sig)?, &caps)?;
                    let mut text = line(format!("diagonal: {}", report.diagonal));
                    for (k, l) in &report.eigenvalues {
                        let _ = writeln!(text, "{l}\t{k}");
                    }
                    if let Some((k, e)) = &report.witness {
                        let _ = writeln!(text, "witness: [{}, {k}] = {e}", report.candidate);
                    }
                    Ok(emit(&common, json::ad_diagonal(&report), text))
                }
                None => {
                    let found = find_ad_diagonal(&sig, &caps)?;
                    let value = json!({
                        "caps": json::caps(&caps),
                        "found": found.iter().map(json::element).collect::<Vec<_>>(),
                    });
                    let text = if found.is_empty() {
                        line("none")
                    } else {
                        found.iter().map(line).collect()
                    };
                    Ok(emit(&common, value, text))
                }
            }
        }
        Command::Divergence { common, element: src } => {
            let sig = Arc::new(common.algebra.clone());
            let d = divergence(&element(&src, &sig)?)?;
            let terms: Vec<Value> = d.terms().iter().map(json::term).collect();
            let value = json!({"divergence": d.to_string(), "terms": terms, "divergence_free": d.is_zero()});
            Ok(emit(&common, value, line(&d)))
        }
        Command::Hamiltonian { common, element: src } => {
            let sig = Arc::new(common.algebra.clone());
            let h = hamiltonian_field(&element(&src, &sig)?)?;
            Ok(emit(&common, json::element(&h), line(&h)))
        }
        Command::DerivationCheck {
            common,
            window,
            inner,
            alpha,
            identity,
        } => {
            let sig = Arc::new(common.algebra.clone());
            let caps = caps(&sig, &window, limit);
            let (map, label) = if identity {
                (LinearMapTable::identity(&sig, &caps)?, "identity".to_string())
            } else {
                let alpha = alpha.unwrap_or_else(Rational::zero);
                let z = match &inner {
                    Some(src) => element(src, &sig)?,
                    None => Element::zero(sig.clone()),
                };
                if alpha.is_zero() && z.is_zero() {
                    return Err(Error::Precondition(
                        "give --inner, a nonzero --alpha, or --identity".into(),
                    ));
                }
                let ad = LinearMapTable::inner(&z, &caps)?;
                let map = if alpha.is_zero() {
                    ad
                } else {
                    LinearMapTable::scalar(&sig, &caps)?.combine(&alpha, &ad, &Rational::one())?
                };
                (map, format!("{alpha}*S + ad({z})"))
            };
            let report = check_derivation(&map, &caps)?;
            let mut value = json::derivation(&report);
            value["map"] = json!(label);
            let mut text = table(&[
                ("map", label.clone()),
                ("derivation", report.is_derivation().to_string()),
                ("pairs checked", report.pairs_checked.to_string()),
                ("pairs skipped", report.pairs_skipped.to_string()),
                ("residuals", report.residuals.len().to_string()),
            ]);
            if let Some(r) = report.residuals.first() {
                let _ = writeln!(text, "first residual at ({}, {}): {}", r.a, r.b, r.residual);
            }
            Ok(emit(&common, value, text))
        }
        Command::AutomorphismCheck {
            common,
            theta_d,
            theta_xd,
        } => {
            let sig = Arc::new(common.algebra.clone());
            let v = wplus_automorphism_check(&element(&theta_d, &sig)?, &element(&theta_xd, &sig)?)?;
            let text = table(&[
                (
                    "verdict",
                    if v.accepted() { "accept" } else { "reject" }.to_string(),
                ),
                ("relation", v.relation_holds.to_string()),
                ("shape", v.shape_holds.to_string()),
                ("alpha", opt(v.alpha.as_ref())),
                ("beta", opt(v.beta.as_ref())),
                ("relation residual", v.relation_residual.to_string()),
            ]);
            Ok(emit(&common, json::automorphism(&v), text))
        }
        Command::Closure {
            common,
            window,
            saturation,
            seed,
        } => {
            let sig = Arc::new(common.algebra.clone());
            let caps = caps(&sig, &window, limit);
            let report = closure_saturate(&element(&seed, &sig)?, &caps, &config(&saturation))?;
            Ok(emit(&common, json::closure(&report), closure_text(&report)))
        }
        Command::Simplicity {
            common,
            window,
            saturation,
            seeds,
            rng,
            control,
        } => {
            if seeds == 0 {
                return Err(Error::Precondition("--seeds must be at least 1".into()));
            }
            let sig = Arc::new(common.algebra.clone());
            let caps = caps(&sig, &window, limit);
            let summary = simplicity_experiment(&sig, &caps, seeds, rng, &config(&saturation))?;
            let control_report = if control {
                Some(abelian_control(&sig, &caps)?)
            } else {
                None
            };
            let mut value = json::experiment(&summary);
            value["control"] = control_report.as_ref().map_or(Value::Null, json::closure);
            let mut text = table(&[
                ("algebra", summary.algebra.clone()),
                ("window", caps.to_string()),
                ("seeds", seeds.to_string()),
                ("rng", rng.to_string()),
                ("min coverage", summary.min_coverage().to_string()),
                ("corroborated", summary.corroborated().to_string()),
                ("attains bounds", summary.attains_bounds().to_string()),
            ]);
            let _ = writeln!(text, "seed  coverage  bound  rounds  seed element");
            for (i, r) in summary.reports.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "{i:>4}  {:>8}  {:>5}  {:>6}  {}",
                    r.coverage().to_string(),
                    r.coverage_bound.to_string(),
                    r.rounds,
                    r.seed
                );
            }
            if let Some(c) = &control_report {
                let _ = writeln!(text, "control coverage  {}", c.coverage());
            }
            Ok(emit(&common, value, text))
        }
        Command::ParseCheck { common, element: src } => {
            let sig = Arc::new(common.algebra.clone());
            let e = element(&src, &sig)?;
            let printed = e.to_string();
            let reparsed = element(&printed, &sig)?;
            if reparsed != e {
                return Err(Error::Precondition(format!(
                    "canonical text {printed} does not parse back to the same element"
                )));
            }
            let mut value = json::element(&e);
            value["meta"] = json!({"round_trip": true, "max_grade": max_grade(&e).as_ref().map(json::grade), "min_grade": min_grade(&e).as_ref().map(json::grade)});
            Ok(emit(&common, value, line(printed)))
        }
    }
}
