//! `ringbuckle`: buckling loads, post-buckling paths, rigid-motion effects
//! and inextensibility diagnostics for thin rings under external pressure.

mod table;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;
use serde_json::{Map, Value};

use ringbuckle::analytic::{self, CRITICAL_MODE};
use ringbuckle::galerkin::{self, HarmonicOutcome};
use ringbuckle::postbuckling;
use ringbuckle::rigid::{self, RigidMotion};
use ringbuckle::ring::check_slenderness;
use ringbuckle::{inextensible, report, verify, LoadCase, LoadState, QuadratureRule, Ring};

use table::{Cell, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "ringbuckle", version, about = "Buckling of thin rings under external pressure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Critical multipliers per harmonic, closed form next to the Galerkin oracle
    Critical(CriticalArgs),
    /// Initial post-buckling paths with stability flags
    Postbuckle(PostbuckleArgs),
    /// Critical multipliers and energy balances with rigid motions
    Rigid(RigidArgs),
    /// Naive vs corrected inextensible analysis
    Inextensible(OutputArgs),
    /// Run the self-check suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum LoadSelection {
    All,
    One(LoadCase),
}

impl LoadSelection {
    fn loads(self) -> Vec<LoadCase> {
        match self {
            LoadSelection::All => LoadCase::ALL.to_vec(),
            LoadSelection::One(l) => vec![l],
        }
    }
}

impl FromStr for LoadSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            Ok(LoadSelection::All)
        } else {
            s.parse().map(LoadSelection::One).map_err(|e: ringbuckle::Error| e.to_string())
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CriticalArgs {
    /// dead, hydrostatic, central, inverse_square or all
    #[arg(long, default_value = "all")]
    load: LoadSelection,
    /// Highest harmonic to evaluate
    #[arg(long, default_value_t = 8)]
    m_max: u32,
    /// Slenderness H = I/(AR²) for the Galerkin values
    #[arg(long, default_value_t = 1e-4, allow_hyphen_values = true)]
    h: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct PostbuckleArgs {
    #[arg(long, default_value = "all")]
    load: LoadSelection,
    /// Slenderness H
    #[arg(long, default_value_t = 1e-4, allow_hyphen_values = true)]
    h: f64,
    /// Largest amplitude C/ρ
    #[arg(long, default_value_t = 0.2, allow_hyphen_values = true)]
    cmax: f64,
    /// Number of evenly spaced amplitudes
    #[arg(long, default_value_t = 41)]
    samples: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct RigidArgs {
    #[arg(long, default_value = "all")]
    load: LoadSelection,
    /// Translation along x, relative to the mode amplitude
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    a1: f64,
    /// Translation along y, relative to the mode amplitude
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    a2: f64,
    /// Rotation times radius, relative to the mode amplitude
    #[arg(long = "beta-R", default_value_t = 0.0, allow_hyphen_values = true)]
    beta_r: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Print the results as JSON
    #[arg(long)]
    json: bool,
    /// Multiply every tolerance by this factor
    #[arg(long, default_value_t = 1.0)]
    tolerance_scale: f64,
}

#[derive(Debug)]
enum CliError {
    /// Bad arguments or environment.
    Config(Vec<String>),
    /// The library rejected the inputs.
    Domain(ringbuckle::Error),
    /// A self-check failed; the report has already been written.
    Check(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(problems) => {
                writeln!(f, "invalid configuration:")?;
                for p in problems {
                    writeln!(f, "  - {p}")?;
                }
                Ok(())
            }
            CliError::Domain(e) => writeln!(f, "error: {e}"),
            CliError::Check(msg) => writeln!(f, "check failed: {msg}"),
        }
    }
}

impl From<ringbuckle::Error> for CliError {
    fn from(e: ringbuckle::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Config(_) | CliError::Domain(_) => 2,
        }
    }
}

/// Collects every configuration problem before failing.
#[derive(Default)]
struct Problems(Vec<String>);

impl Problems {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.0.push(msg());
        }
    }

    fn slenderness(&mut self, h: f64) {
        if let Err(e) = check_slenderness(h, false) {
            self.0.push(e.to_string());
        }
    }

    fn finish(self) -> Result<(), CliError> {
        if self.0.is_empty() {
            Ok(())
        } else {
            Err(CliError::Config(self.0))
        }
    }
}

fn quadrature() -> Result<QuadratureRule, CliError> {
    QuadratureRule::from_env().map_err(|e| CliError::Config(vec![e.to_string()]))
}

fn emit(text: &str, out: &OutputArgs) -> Result<(), CliError> {
    match &out.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Config(vec![format!("cannot write {}: {e}", path.display())]))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_critical(args: &CriticalArgs) -> Result<(), CliError> {
    let mut problems = Problems::default();
    problems.check(args.m_max >= 4, || format!("--m-max must be at least 4, got {}", args.m_max));
    problems.slenderness(args.h);
    problems.finish()?;

    let mut rows = Table::new(vec![
        "load",
        "m",
        "analytic",
        "analytic_fraction",
        "admissibility",
        "numeric",
        "numeric_limit",
        "critical",
        "mode",
    ]);
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for load in args.load.loads() {
        let crit = analytic::critical(load);
        let spectrum = galerkin::critical_numeric(load, args.h, args.m_max)?;
        let mut harmonics = Table::new(rows.header[1..8].to_vec());
        for entry in &spectrum.entries {
            let m = entry.m;
            let value = analytic::harmonic_value(load, m);
            let limit = if entry.outcome == HarmonicOutcome::Rigid {
                None
            } else {
                galerkin::lambda_limit(load, m)?
            };
            if value.admissibility.is_admissible() {
                let ok = limit.is_some_and(|l| ((l - value.lambda_f64()) / value.lambda_f64()).abs() <= 1e-9);
                if !ok {
                    mismatches.push(format!("{load} m={m}"));
                }
            }
            let is_critical = m == crit.harmonic;
            let status = match entry.outcome {
                HarmonicOutcome::Rigid => "rigid",
                HarmonicOutcome::NoBifurcation => "no bifurcation",
                HarmonicOutcome::Bifurcation { .. } if is_critical => "yes",
                HarmonicOutcome::Bifurcation { .. } => "",
            };
            let row = vec![
                Cell::Int(m as u64),
                Cell::Num(value.lambda_f64()),
                Cell::Exact(value.lambda),
                Cell::Text(admissibility_name(value.admissibility).to_string()),
                entry.outcome.lambda().into(),
                limit.into(),
                status.into(),
            ];
            harmonics.push(row.clone());
            let mut full = vec![Cell::Text(load.name().to_string())];
            full.extend(row);
            full.push(if is_critical { CRITICAL_MODE.into() } else { Cell::Missing });
            rows.push(full);
        }
        records.push(critical_record(load, crit.lambda, &spectrum, &harmonics)?);
    }
    let text = match args.out.format {
        Format::Json => report::to_json(&records)?,
        other => rows.render(other)?,
    };
    emit(&text, &args.out)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "closed form and Galerkin limit disagree at {}",
            mismatches.join(", ")
        )))
    }
}

fn admissibility_name(a: analytic::Admissibility) -> &'static str {
    use analytic::Admissibility::*;
    match a {
        Admissible => "admissible",
        Uniform => "uniform",
        RigidTranslation => "rigid_translation",
        Unbuckled => "unbuckled",
        NonPositive => "non_positive",
    }
}

/// One JSON record per load: the critical values and the per-harmonic rows.
fn critical_record(
    load: LoadCase,
    lambda: Rational64,
    spectrum: &galerkin::BucklingSpectrum,
    harmonics: &Table,
) -> Result<Value, CliError> {
    let per_harmonic: Value =
        serde_json::from_str(&harmonics.render(Format::Json)?).map_err(|e| ringbuckle::Error::Serialize(e.to_string()))?;
    let mut map = Map::new();
    map.insert("load".into(), load.name().into());
    map.insert("critical_lambda".into(), report::round_sig(analytic::to_f64(lambda)).into());
    map.insert("critical_fraction".into(), report::format_fraction(lambda).into());
    map.insert("slenderness".into(), args_number(spectrum.slenderness));
    map.insert("numeric_m".into(), spectrum.min_m.into());
    map.insert("numeric_lambda".into(), args_number(spectrum.min_lambda));
    map.insert("mode".into(), CRITICAL_MODE.into());
    map.insert("harmonics".into(), per_harmonic);
    Ok(Value::Object(map))
}

fn args_number(x: f64) -> Value {
    serde_json::Number::from_f64(report::round_sig(x)).map_or(Value::Null, Value::Number)
}

fn cmd_postbuckle(args: &PostbuckleArgs) -> Result<(), CliError> {
    let mut problems = Problems::default();
    problems.check(args.samples >= 2, || format!("--samples must be at least 2, got {}", args.samples));
    problems.check(args.cmax > 0.0 && args.cmax.is_finite(), || {
        format!("--cmax must be positive, got {}", args.cmax)
    });
    if let Err(e) = check_slenderness(args.h, true) {
        problems.0.push(e.to_string());
    }
    problems.finish()?;

    let rule = quadrature()?;
    let mut t = Table::new(vec!["load", "case_H", "C_over_rho", "lambda", "stability"]);
    for load in args.load.loads() {
        let path = postbuckling::path_sweep(load, args.h, args.cmax, args.samples, &rule)?;
        for s in &path.samples {
            t.push(vec![
                load.name().into(),
                Cell::Num(args.h),
                Cell::Num(s.c_over_rho),
                Cell::Num(s.lambda),
                s.stability.name().into(),
            ]);
        }
    }
    emit(&t.render(args.out.format)?, &args.out)
}

fn cmd_rigid(args: &RigidArgs) -> Result<(), CliError> {
    let mut problems = Problems::default();
    for (name, v) in [("--a1", args.a1), ("--a2", args.a2), ("--beta-R", args.beta_r)] {
        problems.check(v.is_finite(), || format!("{name} must be finite, got {v}"));
    }
    problems.finish()?;

    let rule = quadrature()?;
    let motion = RigidMotion::relative(args.a1, args.a2, args.beta_r);
    let state = LoadState::from_pressure(Ring::default(), 1.0)?;
    let unit_translation = RigidMotion::translation(1.0, 0.0);
    let beta = 0.1;
    let small_rotation = RigidMotion::new(0.0, 0.0, beta)?;
    let mut t = Table::new(vec![
        "load",
        "alpha1",
        "alpha2",
        "beta_R",
        "modified_lambda",
        "critical_lambda",
        "unchanged",
        "translation_balance_per_p_alpha2",
        "rotation_balance_per_p_beta2_R2",
    ]);
    for load in args.load.loads() {
        let modified = rigid::modified_multiplier(load, &motion, 1.0)?;
        let crit = analytic::critical(load);
        let translation = rigid::rigid_energy_balance(load, &unit_translation, &state, &rule).value;
        let rotation = rigid::rigid_energy_balance(load, &small_rotation, &state, &rule).value / (beta * beta);
        t.push(vec![
            load.name().into(),
            Cell::Num(args.a1),
            Cell::Num(args.a2),
            Cell::Num(args.beta_r),
            Cell::Num(modified),
            Cell::Exact(crit.lambda),
            if rigid::leaves_critical_unchanged(load, &motion) {
                "yes"
            } else {
                "no"
            }
            .into(),
            Cell::Num(clean_zero(translation)),
            Cell::Num(clean_zero(rotation)),
        ]);
    }
    emit(&t.render(args.out.format)?, &args.out)
}

/// Quadrature zeros print as `0` rather than as rounding noise.
fn clean_zero(x: f64) -> f64 {
    if x.abs() < 1e-13 {
        0.0
    } else {
        x
    }
}

fn cmd_inextensible(out: &OutputArgs) -> Result<(), CliError> {
    let rule = quadrature()?;
    let mut t = Table::new(vec![
        "load",
        "naive_lambda",
        "corrected_lambda",
        "extensible_lambda",
        "identity_residual",
    ]);
    let mut bad = Vec::new();
    for load in LoadCase::ALL {
        let c = inextensible::compare(load, &rule);
        let scale = c.u01.abs().max(c.w1.abs());
        if c.identity_residual.abs() > 1e-10 * scale {
            bad.push(load.name());
        }
        t.push(vec![
            load.name().into(),
            c.naive_lambda.into(),
            Cell::Num(c.corrected_lambda),
            Cell::Num(c.extensible_lambda),
            Cell::Num(c.identity_residual),
        ]);
    }
    emit(&t.render(out.format)?, out)?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(format!("identity residual too large for {}", bad.join(", "))))
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let mut problems = Problems::default();
    problems.check(args.tolerance_scale >= 0.0 && args.tolerance_scale.is_finite(), || {
        format!("--tolerance-scale must be non-negative, got {}", args.tolerance_scale)
    });
    problems.finish()?;

    let rule = quadrature()?;
    let result = verify::run(args.tolerance_scale, &rule);
    if args.json {
        print!("{}", report::to_json(&result)?);
    } else {
        let mut t = Table::new(vec!["status", "criterion", "id", "error", "tolerance", "description", "detail"]);
        for c in &result.checks {
            t.push(vec![
                if c.passed { "PASS" } else { "FAIL" }.into(),
                Cell::Int(c.criterion as u64),
                c.id.into(),
                Cell::Num(c.error),
                Cell::Num(c.tolerance),
                c.description.into(),
                c.detail.clone().into(),
            ]);
        }
        print!("{}", t.render(Format::Table)?);
        println!("{} checks: {} passed, {} failed", result.checks.len(), result.passed, result.failed);
    }
    if result.all_passed() {
        Ok(())
    } else {
        let failed: Vec<_> = result.checks.iter().filter(|c| !c.passed).map(|c| c.id).collect();
        Err(CliError::Check(failed.join(", ")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Critical(a) => cmd_critical(a),
        Command::Postbuckle(a) => cmd_postbuckle(a),
        Command::Rigid(a) => cmd_rigid(a),
        Command::Inextensible(a) => cmd_inextensible(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprint!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
