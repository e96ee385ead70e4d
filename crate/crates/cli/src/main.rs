//! Command-line front end: generates triangles from the four families as
//! readable text or JSON-line records, lists the integer points of the angle
//! curve, prints the recomputed reference tables, and re-verifies record
//! streams from standard input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigUint;
use std::collections::HashSet;
use std::io::{self, BufRead, Write};
use std::process::ExitCode;
use taucong::exact::SternBrocot;
use taucong::excircle::ExcircleKind;
use taucong::record::OutputRecord;
use taucong::tables;
use taucong::tau_curve::{self, Tau};
use taucong::{Error, FactorConfig, Rat};

#[derive(Parser)]
#[command(
    name = "taucong",
    version,
    about = "Rational triangles with a prescribed angle, incircle, circumcircle, or \
             excircle, and their congruent-number classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Triangles with angle 2·atan(tau) circumscribing the unit circle
    Tau(TauArgs),
    /// Integer points of the curve xy = tau(x+y) + 1
    IntegerPoints(IntegerPointsArgs),
    /// Right triangles circumscribing an ellipse of area pi
    Ellipse(EllipseArgs),
    /// Right triangles inscribed in a circle of given radius
    Circumcircle(CircumcircleArgs),
    /// Right triangles whose chosen excircle has radius one
    Excircle(ExcircleArgs),
    /// The recomputed reference tables, errata annotated
    Tables,
    /// Re-check a record stream from standard input, one JSON object per line
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One readable line per triangle
    Text,
    /// One self-describing JSON object per triangle
    Records,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("abscissas").required(true).args(["xs", "count"]))]
struct TauArgs {
    /// Tangent of the half angle, a positive rational
    #[arg(long)]
    tau: Rat,
    /// Abscissa on the curve (repeatable); points off the positive branch
    /// come back flagged as degenerate
    #[arg(long = "x", value_name = "RAT")]
    xs: Vec<Rat>,
    /// Enumerate the first N abscissas over the positive rationals instead
    #[arg(long, value_name = "N")]
    count: Option<usize>,
    /// Emit only the first triangle of each class
    #[arg(long)]
    dedup_class: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct IntegerPointsArgs {
    /// Reciprocal of a positive integer
    #[arg(long)]
    tau: Rat,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("parameters")
    .required(true)
    .args(["ts", "count", "consecutive"]))]
struct EllipseArgs {
    /// Horizontal semi-axis of the ellipse (the area stays pi)
    #[arg(long, default_value = "1")]
    axis: Rat,
    /// Curve parameter t > 0 (repeatable)
    #[arg(long = "t", value_name = "RAT")]
    ts: Vec<Rat>,
    /// Enumerate the first N parameters over the positive rationals instead
    #[arg(long, value_name = "N")]
    count: Option<usize>,
    /// Integer parameters 1..=N, each scaled to realize the area t(t+1)(t+2)
    /// on the nose
    #[arg(long, value_name = "N", conflicts_with_all = ["axis", "scale"])]
    consecutive: Option<u64>,
    /// Scale every side by this positive factor
    #[arg(long, default_value = "1")]
    scale: Rat,
    /// Emit only the first triangle of each class
    #[arg(long)]
    dedup_class: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("parameters").required(true).args(["ts", "count"]))]
struct CircumcircleArgs {
    /// Radius of the circle the hypotenuse spans as a diameter
    #[arg(long, default_value = "1")]
    radius: Rat,
    /// Curve parameter strictly between 0 and 1 (repeatable)
    #[arg(long = "t", value_name = "RAT")]
    ts: Vec<Rat>,
    /// Enumerate the first N parameters over the open unit interval instead
    #[arg(long, value_name = "N")]
    count: Option<usize>,
    /// Emit only the first triangle of each class
    #[arg(long)]
    dedup_class: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("parameters").required(true).args(["xs", "count"]))]
struct ExcircleArgs {
    /// Which excircle is pinned at radius one: a, b, or c (the hypotenuse)
    #[arg(long)]
    kind: ExcircleKind,
    /// Curve parameter strictly between 0 and 1 (repeatable)
    #[arg(long = "x", value_name = "RAT")]
    xs: Vec<Rat>,
    /// Enumerate the first N parameters over the open unit interval instead
    #[arg(long, value_name = "N")]
    count: Option<usize>,
    /// Emit only the first triangle of each class
    #[arg(long)]
    dedup_class: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Usage(String),
    Runtime(String),
    Quiet,
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
            Failure::Runtime(message) => {
                eprintln!("error: {message}");
                ExitCode::from(1)
            }
            Failure::Quiet => ExitCode::SUCCESS,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        match err {
            Error::FactorizationLimitExceeded { .. } => Failure::Runtime(err.to_string()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Failure {
        if err.kind() == io::ErrorKind::BrokenPipe {
            Failure::Quiet
        } else {
            Failure::Runtime(err.to_string())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let config = factor_config()?;
    match cli.command {
        Command::Tau(args) => cmd_tau(args, &config),
        Command::IntegerPoints(args) => cmd_integer_points(args, &config),
        Command::Ellipse(args) => cmd_ellipse(args, &config),
        Command::Circumcircle(args) => cmd_circumcircle(args, &config),
        Command::Excircle(args) => cmd_excircle(args, &config),
        Command::Tables => cmd_tables(),
        Command::Verify => cmd_verify(&config),
    }
}

/// The factorization effort limit, honoring a `FACTOR_LIMIT` override of the
/// trial-division bound.
fn factor_config() -> Result<FactorConfig, Failure> {
    match std::env::var("FACTOR_LIMIT") {
        Ok(raw) => raw.parse().map(FactorConfig::with_trial_bound).map_err(|_| {
            Failure::Usage(format!("FACTOR_LIMIT must be an unsigned integer, got {raw:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(FactorConfig::default()),
        Err(err) => Err(Failure::Usage(format!("FACTOR_LIMIT: {err}"))),
    }
}

/// Writes verified records in the chosen format, optionally deduplicated by
/// class.
struct Emitter<'a> {
    out: io::StdoutLock<'static>,
    format: Format,
    dedup: bool,
    seen: HashSet<BigUint>,
    config: &'a FactorConfig,
}

impl<'a> Emitter<'a> {
    fn new(format: Format, dedup: bool, config: &'a FactorConfig) -> Emitter<'a> {
        Emitter {
            out: io::stdout().lock(),
            format,
            dedup,
            seen: HashSet::new(),
            config,
        }
    }

    fn emit(&mut self, record: OutputRecord) -> Result<(), Failure> {
        let problems = record.check_with(self.config);
        if !problems.is_empty() {
            return Err(Failure::Runtime(format!(
                "generated record failed verification: {}",
                problems.join("; ")
            )));
        }
        if self.dedup {
            if let Some(class) = &record.class {
                if !self.seen.insert(class.clone()) {
                    return Ok(());
                }
            }
        }
        match self.format {
            Format::Text => writeln!(self.out, "{}", text_line(&record))?,
            Format::Records => writeln!(self.out, "{}", record.to_json_line())?,
        }
        Ok(())
    }
}

fn text_line(record: &OutputRecord) -> String {
    let mut parts = Vec::new();
    if let Some(kind) = record.kind {
        parts.push(format!("kind={kind}"));
    }
    for (name, value) in &record.parameters {
        parts.push(format!("{name}={value}"));
    }
    if record.degenerate {
        parts.push("degenerate".into());
    } else {
        if let Some([a, b, c]) = &record.sides {
            parts.push(format!("sides=({a}, {b}, {c})"));
        }
        if let Some(area) = &record.area {
            parts.push(format!("area={area}"));
        }
        if let Some(class) = &record.class {
            parts.push(format!("class={class}"));
        }
    }
    parts.join(" ")
}

fn cmd_tau(args: TauArgs, config: &FactorConfig) -> Result<ExitCode, Failure> {
    let TauArgs {
        tau,
        xs,
        count,
        dedup_class,
        format,
    } = args;
    let mut emitter = Emitter::new(format, dedup_class, config);
    let pole = tau.clone();
    let xs: Box<dyn Iterator<Item = Rat>> = match count {
        Some(count) => Box::new(
            SternBrocot::positive()
                .filter(move |x| x != &pole)
                .take(count),
        ),
        None => Box::new(xs.into_iter()),
    };
    for x in xs {
        emitter.emit(OutputRecord::tau_with(&tau, &x, config)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_integer_points(args: IntegerPointsArgs, config: &FactorConfig) -> Result<ExitCode, Failure> {
    let angle = Tau::new(args.tau)?;
    let points = tau_curve::integer_points_with(&angle, config)?;
    let line: Vec<String> = points.iter().map(|(x, y)| format!("({x},{y})")).collect();
    writeln!(io::stdout().lock(), "{}", line.join(" "))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_ellipse(args: EllipseArgs, config: &FactorConfig) -> Result<ExitCode, Failure> {
    let EllipseArgs {
        axis,
        ts,
        count,
        consecutive,
        scale,
        dedup_class,
        format,
    } = args;
    let mut emitter = Emitter::new(format, dedup_class, config);
    if let Some(limit) = consecutive {
        for t in 1..=limit {
            let t = Rat::from(t);
            emitter.emit(OutputRecord::ellipse_with(&Rat::one(), &t, &t, config)?)?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let ts: Box<dyn Iterator<Item = Rat>> = match count {
        Some(count) => Box::new(SternBrocot::positive().take(count)),
        None => Box::new(ts.into_iter()),
    };
    for t in ts {
        emitter.emit(OutputRecord::ellipse_with(&axis, &t, &scale, config)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_circumcircle(args: CircumcircleArgs, config: &FactorConfig) -> Result<ExitCode, Failure> {
    let CircumcircleArgs {
        radius,
        ts,
        count,
        dedup_class,
        format,
    } = args;
    let mut emitter = Emitter::new(format, dedup_class, config);
    let ts: Box<dyn Iterator<Item = Rat>> = match count {
        Some(count) => Box::new(SternBrocot::unit_interval().take(count)),
        None => Box::new(ts.into_iter()),
    };
    for t in ts {
        emitter.emit(OutputRecord::circumcircle_with(&radius, &t, config)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_excircle(args: ExcircleArgs, config: &FactorConfig) -> Result<ExitCode, Failure> {
    let ExcircleArgs {
        kind,
        xs,
        count,
        dedup_class,
        format,
    } = args;
    let mut emitter = Emitter::new(format, dedup_class, config);
    let xs: Box<dyn Iterator<Item = Rat>> = match count {
        Some(count) => Box::new(SternBrocot::unit_interval().take(count)),
        None => Box::new(xs.into_iter()),
    };
    for x in xs {
        emitter.emit(OutputRecord::excircle_with(kind, &x, config)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tables() -> Result<ExitCode, Failure> {
    let mut out = io::stdout().lock();

    writeln!(out, "Sampled tau-congruent numbers")?;
    writeln!(out, "{:<7}{:<5}{:<7}{:<7}class", "tau", "x", "y", "n")?;
    for row in tables::tau_number_rows()? {
        writeln!(
            out,
            "{:<7}{:<5}{:<7}{:<7}{}{}",
            row.tau.to_string(),
            row.x.to_string(),
            row.y.to_string(),
            row.n.to_string(),
            row.class,
            annotate(row.erratum()),
        )?;
    }

    writeln!(out)?;
    writeln!(out, "Consecutive-product areas t(t+1)(t+2)")?;
    writeln!(out, "{:<4}{:<9}class", "t", "area")?;
    for row in tables::ellipse_area_rows()? {
        writeln!(
            out,
            "{:<4}{:<9}{}{}",
            row.t,
            row.factored_area(),
            row.class,
            annotate(row.erratum()),
        )?;
    }

    writeln!(out)?;
    writeln!(out, "Unit-exradius right-triangle families")?;
    writeln!(
        out,
        "{:<10}{:<22}{:<21}area",
        "excircle", "sides", "defining curve"
    )?;
    for row in tables::excircle_summary_rows() {
        let [a, b, c] = row.sides;
        writeln!(
            out,
            "{:<10}{:<22}{:<21}{}",
            row.kind.to_string(),
            format!("({a}, {b}, {c})"),
            row.defining_curve,
            row.area,
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn annotate(erratum: Option<String>) -> String {
    match erratum {
        Some(note) => format!(" [erratum: {note}]"),
        None => String::new(),
    }
}

fn cmd_verify(config: &FactorConfig) -> Result<ExitCode, Failure> {
    let stdin = io::stdin().lock();
    let mut out = io::stdout().lock();
    let mut records = 0usize;
    let mut failures = 0usize;
    for (index, line) in stdin.lines().enumerate() {
        let line = line?;
        let number = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        match OutputRecord::from_json_line(&line) {
            Err(err) => {
                failures += 1;
                writeln!(out, "line {number}: parse error: {err}")?;
            }
            Ok(record) => {
                records += 1;
                let problems = record.check_with(config);
                if !problems.is_empty() {
                    failures += 1;
                    writeln!(out, "line {number}: {}", problems.join("; "))?;
                }
            }
        }
    }
    writeln!(out, "checked {records} records, {failures} failures")?;
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
