//! Command-line surface. `main` only parses arguments and maps the outcome to
//! an exit code; everything else lives here so it can be driven from tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bigfixed::FixedDec;
use crate::chronology::venvaroha_epoch_check;
use crate::error::Error;
use crate::geometry::{circumradius, QuadSides};
use crate::par::Execution;
use crate::pi_series::{terms_for_digits, Correction, SeriesId, SeriesSpec, GUARD_DIGITS};
use crate::report::{convergence_rows, run_verify, write_csv};
use crate::trig::{
    angle_add, build_sine_table, cos_series, sin_series, sin_sq_series, taylor_shift,
    terms_for_accuracy, Angle, AngleRule, Purpose,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Lib(_) => 2,
            _ => 1,
        }
    }
}

/// How a successful run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    ChecksFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::ChecksFailed => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Corrections {
    #[default]
    None,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Sin,
    Cos,
    Sin2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShiftFunction {
    Sin,
    Cos,
}

fn parse_series(s: &str) -> Result<SeriesId, String> {
    s.parse()
        .map_err(|_| format!("unknown series '{s}' (leibniz, aux-a, aux-b, aux-c, aux-d, sqrt12)"))
}

fn parse_correction(s: &str) -> Result<Correction, String> {
    s.parse()
        .map_err(|_| format!("unknown correction '{s}' (none, f1, f2, f3)"))
}

fn parse_rule(s: &str) -> Result<AngleRule, String> {
    s.parse()
        .map_err(|_| format!("unknown rule '{s}' (sin-sum, sin-diff, cos-sum, cos-diff)"))
}

fn parse_dec(s: &str) -> Result<FixedDec, String> {
    s.parse().map_err(|_| format!("not a decimal: '{s}'"))
}

#[derive(Debug, Parser)]
#[command(
    name = "madhava",
    version,
    about = "Kerala-school series in exact fixed-point arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximate pi with one of the series.
    Pi(PiArgs),
    /// Run the reproduction checks.
    Verify(VerifyArgs),
    /// Convergence sweep as CSV.
    Converge(ConvergeArgs),
    /// Sine and cosine series, the sine table, shifts and addition rules.
    #[command(subcommand)]
    Trig(TrigCommand),
    /// Cyclic quadrilaterals.
    #[command(subcommand)]
    Quad(QuadCommand),
    /// Kali-day chronology.
    #[command(subcommand)]
    Chrono(ChronoCommand),
}

#[derive(Debug, Args)]
pub struct PiArgs {
    /// leibniz, aux-a, aux-b, aux-c, aux-d or sqrt12.
    #[arg(long, value_parser = parse_series)]
    pub series: SeriesId,
    /// Terms to sum; by default enough for the requested digits.
    #[arg(long)]
    pub terms: Option<u64>,
    /// End correction (leibniz only): none, f1, f2, f3.
    #[arg(long, value_parser = parse_correction, default_value = "none")]
    pub correction: Correction,
    /// Digits after the decimal point.
    #[arg(long, visible_alias = "scale", default_value_t = 20)]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    /// Comma-separated series, in output order.
    #[arg(long, value_parser = parse_series, value_delimiter = ',', required = true)]
    pub series: Vec<SeriesId>,
    #[arg(long)]
    pub n_max: u64,
    /// `all` adds the three end corrections for leibniz.
    #[arg(long, value_enum, default_value_t = Corrections::None)]
    pub corrections: Corrections,
    #[arg(long, default_value_t = 20)]
    pub scale: u32,
    /// Evaluate rows on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, default_value_t = 20)]
    pub scale: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum TrigCommand {
    /// Evaluate sin, cos or sin^2 by series.
    Eval {
        #[arg(long, value_enum)]
        function: Function,
        /// Angle, in radians unless --degrees is given.
        #[arg(long, value_parser = parse_dec, allow_hyphen_values = true)]
        angle: FixedDec,
        #[arg(long)]
        degrees: bool,
        /// Series terms; by default enough for the scale.
        #[arg(long)]
        terms: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// The 24-entry sine table at 3.75 degree steps.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Second-order shift from u to u + h, next to the series value at u + h.
    Shift {
        #[arg(long, value_enum)]
        function: ShiftFunction,
        #[arg(long, value_parser = parse_dec, allow_hyphen_values = true)]
        u: FixedDec,
        /// Shift in radians.
        #[arg(long, value_parser = parse_dec, allow_hyphen_values = true)]
        h: FixedDec,
        /// Read u in degrees.
        #[arg(long)]
        degrees: bool,
        #[command(flatten)]
        common: Common,
    },
    /// One addition rule against the direct series value.
    Addrule {
        #[arg(long, value_parser = parse_rule)]
        rule: AngleRule,
        #[arg(long, value_parser = parse_dec, allow_hyphen_values = true)]
        x: FixedDec,
        #[arg(long, value_parser = parse_dec, allow_hyphen_values = true)]
        y: FixedDec,
        #[arg(long)]
        degrees: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuadCommand {
    /// Circumradius from four sides in cyclic order.
    Radius {
        #[arg(long, value_parser = parse_dec, value_delimiter = ',', num_args = 1.., required = true)]
        sides: Vec<FixedDec>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChronoCommand {
    /// Date of kali day 1502008 plus 5180 anomalistic months.
    Check {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn json_line<W: Write>(out: &mut W, value: &serde_json::Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn to_angle(value: &FixedDec, degrees: bool, scale: u32) -> Angle {
    if degrees {
        Angle::from_degrees(value, scale + GUARD_DIGITS)
    } else {
        Angle::from_radians(value.clone())
    }
}

/// Runs one parsed command, writing its output to `out`.
pub fn execute<W: Write>(cli: &Cli, out: &mut W) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Pi(args) => cmd_pi(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Converge(args) => cmd_converge(args, out),
        Command::Trig(cmd) => cmd_trig(cmd, out),
        Command::Quad(cmd) => cmd_quad(cmd, out),
        Command::Chrono(cmd) => cmd_chrono(cmd, out),
    }
}

fn cmd_pi<W: Write>(args: &PiArgs, out: &mut W) -> Result<Outcome, CliError> {
    if args.correction != Correction::None && args.series != SeriesId::Leibniz {
        return Err(CliError::Usage(format!(
            "--correction {} needs --series leibniz",
            args.correction
        )));
    }
    let terms = match args.terms {
        Some(0) => return Err(CliError::Usage("--terms must be at least 1".into())),
        Some(n) => n,
        None => terms_for_digits(args.series, args.digits)?,
    };
    let spec = SeriesSpec::new(args.series, terms, args.correction, args.digits)?;
    let result = spec.evaluate()?;
    let bound = result.error_bound.as_ref().map(ToString::to_string);
    match args.format {
        Format::Text => {
            writeln!(out, "{}", result.value)?;
            writeln!(out, "series: {}", spec.series)?;
            writeln!(out, "correction: {}", spec.correction)?;
            writeln!(out, "terms: {}", result.terms_used)?;
            writeln!(out, "error_bound: {}", bound.as_deref().unwrap_or("n/a"))?;
        }
        Format::Json => json_line(
            out,
            &json!({
                "series": spec.series.name(),
                "correction": spec.correction.name(),
                "terms": result.terms_used,
                "scale": spec.scale,
                "value": result.value.to_string(),
                "error_bound": bound,
            }),
        )?,
    }
    Ok(Outcome::Success)
}

fn cmd_verify<W: Write>(args: &VerifyArgs, out: &mut W) -> Result<Outcome, CliError> {
    let report = run_verify()?;
    match args.format {
        Format::Text => write!(out, "{}", report.to_text())?,
        Format::Json => writeln!(out, "{}", report.to_json())?,
    }
    Ok(if report.pass {
        Outcome::Success
    } else {
        Outcome::ChecksFailed
    })
}

fn cmd_converge<W: Write>(args: &ConvergeArgs, out: &mut W) -> Result<Outcome, CliError> {
    if args.n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let rows = convergence_rows(
        &args.series,
        args.corrections == Corrections::All,
        args.n_max,
        args.scale,
        exec,
    )?;
    write_csv(&rows, &mut *out)?;
    Ok(Outcome::Success)
}

fn cmd_trig<W: Write>(cmd: &TrigCommand, out: &mut W) -> Result<Outcome, CliError> {
    match cmd {
        TrigCommand::Eval {
            function,
            angle,
            degrees,
            terms,
            common,
        } => {
            let theta = to_angle(angle, *degrees, common.scale);
            let terms = match terms {
                Some(0) => return Err(CliError::Usage("--terms must be at least 1".into())),
                Some(n) => *n,
                None => terms_for_accuracy(&theta, common.scale + 1),
            };
            let value = match function {
                Function::Sin => sin_series(&theta, terms, common.scale)?,
                Function::Cos => cos_series(&theta, terms, common.scale)?,
                Function::Sin2 => sin_sq_series(&theta, terms, common.scale)?,
            };
            match common.format {
                Format::Text => {
                    writeln!(out, "{value}")?;
                    writeln!(out, "radians: {}", theta.radians())?;
                    writeln!(out, "terms: {terms}")?;
                }
                Format::Json => json_line(
                    out,
                    &json!({
                        "function": format!("{function:?}").to_lowercase(),
                        "radians": theta.radians().to_string(),
                        "terms": terms,
                        "value": value.to_string(),
                    }),
                )?,
            }
        }
        TrigCommand::Table { common } => {
            let table = build_sine_table(common.scale)?;
            match common.format {
                Format::Text => {
                    writeln!(out, "# terms {}", table.terms)?;
                    for e in &table.entries {
                        writeln!(
                            out,
                            "{:>2} {:>5} {}",
                            e.index,
                            e.degrees.to_string(),
                            e.value
                        )?;
                    }
                }
                Format::Json => {
                    let entries: Vec<_> = table
                        .entries
                        .iter()
                        .map(|e| {
                            json!({
                                "index": e.index,
                                "degrees": e.degrees.to_string(),
                                "value": e.value.to_string(),
                            })
                        })
                        .collect();
                    json_line(
                        out,
                        &json!({"scale": table.scale, "terms": table.terms, "entries": entries}),
                    )?
                }
            }
        }
        TrigCommand::Shift {
            function,
            u,
            h,
            degrees,
            common,
        } => {
            let purpose = match function {
                ShiftFunction::Sin => Purpose::Sin,
                ShiftFunction::Cos => Purpose::Cos,
            };
            let w = common.scale + GUARD_DIGITS;
            let base = to_angle(u, *degrees, common.scale);
            let approx = taylor_shift(purpose, &base, h, common.scale)?;
            let r = base.radians().rescale(w);
            let target = Angle::from_radians(&r + &h.rescale(w));
            let terms = terms_for_accuracy(&target, w);
            let exact = match purpose {
                Purpose::Sin => sin_series(&target, terms, common.scale)?,
                Purpose::Cos => cos_series(&target, terms, common.scale)?,
            };
            let error = approx.abs_diff(&exact);
            match common.format {
                Format::Text => {
                    writeln!(out, "{approx}")?;
                    writeln!(out, "series: {exact}")?;
                    writeln!(out, "abs_error: {error}")?;
                }
                Format::Json => json_line(
                    out,
                    &json!({
                        "approx": approx.to_string(),
                        "series": exact.to_string(),
                        "abs_error": error.to_string(),
                    }),
                )?,
            }
        }
        TrigCommand::Addrule {
            rule,
            x,
            y,
            degrees,
            common,
        } => {
            let w = common.scale + GUARD_DIGITS;
            let xa = to_angle(x, *degrees, common.scale);
            let ya = to_angle(y, *degrees, common.scale);
            let rhs = angle_add(&xa, &ya, *rule, common.scale)?;
            let (xr, yr) = (xa.radians().rescale(w), ya.radians().rescale(w));
            let combined = Angle::from_radians(match rule {
                AngleRule::SinSum | AngleRule::CosSum => &xr + &yr,
                AngleRule::SinDiff | AngleRule::CosDiff => &xr - &yr,
            });
            let terms = terms_for_accuracy(&combined, w);
            let lhs = match rule {
                AngleRule::SinSum | AngleRule::SinDiff => {
                    sin_series(&combined, terms, common.scale)?
                }
                AngleRule::CosSum | AngleRule::CosDiff => {
                    cos_series(&combined, terms, common.scale)?
                }
            };
            let gap = rhs.abs_diff(&lhs);
            match common.format {
                Format::Text => {
                    writeln!(out, "{rhs}")?;
                    writeln!(out, "direct: {lhs}")?;
                    writeln!(out, "abs_diff: {gap}")?;
                }
                Format::Json => json_line(
                    out,
                    &json!({
                        "rule": rule.name(),
                        "rule_value": rhs.to_string(),
                        "direct": lhs.to_string(),
                        "abs_diff": gap.to_string(),
                    }),
                )?,
            }
        }
    }
    Ok(Outcome::Success)
}

fn cmd_quad<W: Write>(cmd: &QuadCommand, out: &mut W) -> Result<Outcome, CliError> {
    let QuadCommand::Radius { sides, common } = cmd;
    let [a, b, c, d]: [FixedDec; 4] = sides.clone().try_into().map_err(|v: Vec<FixedDec>| {
        CliError::Usage(format!("--sides needs 4 values, got {}", v.len()))
    })?;
    let q = QuadSides::new(a, b, c, d)?;
    let r = circumradius(&q, common.scale)?;
    match common.format {
        Format::Text => writeln!(out, "{r}")?,
        Format::Json => json_line(out, &json!({"circumradius": r.to_string()}))?,
    }
    Ok(Outcome::Success)
}

fn cmd_chrono<W: Write>(cmd: &ChronoCommand, out: &mut W) -> Result<Outcome, CliError> {
    let ChronoCommand::Check { format } = cmd;
    let r = venvaroha_epoch_check();
    match format {
        Format::Text => {
            writeln!(out, "kali_day: {}", r.kali_day)?;
            writeln!(out, "jd: {}", r.jd)?;
            writeln!(out, "date: {}", r.date)?;
            writeln!(out, "expected: {}", r.expected)?;
            writeln!(out, "offset_days: {}", r.offset_days)?;
            writeln!(out, "match: {}", r.within_tolerance)?;
        }
        Format::Json => json_line(
            out,
            &json!({
                "kali_day": r.kali_day.to_string(),
                "jd": r.jd.to_string(),
                "date": r.date.to_string(),
                "expected": r.expected.to_string(),
                "offset_days": r.offset_days,
                "pass": r.within_tolerance,
            }),
        )?,
    }
    Ok(if r.within_tolerance {
        Outcome::Success
    } else {
        Outcome::ChecksFailed
    })
}
