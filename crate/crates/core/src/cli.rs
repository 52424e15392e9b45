//! Command-line surface. [`dispatch`] never touches the process: it takes
//! argv and returns the exit code and output, so it can be tested directly.

use std::cmp::Ordering;
use std::num::NonZeroU64;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::bijection::{self, DigitMatrix, Newcomers, SubsetTable};
use crate::expr::{self, OrdinalExpr};
use crate::hyper::{self, DigitGuard, HyperResult};
use crate::ordinal::{self, ExtOrdinal};
use crate::realline::{self, ContinuedFraction};
use crate::tower::{self, TowerKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

/// Grid used for `tower --fig1` in addition to `X` itself.
const FIG1_GRID: (f64, f64, usize) = (0.02, 1.50, 149);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "transfinite", version, about = "Ordinals, big numbers, power towers and countability")]
struct Cli {
    /// Emit {command, inputs, result} as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinal arithmetic in Cantor normal form.
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Hyperoperation a[n]b.
    Hyper {
        a: BigUint,
        n: u64,
        b: BigUint,
        /// Print only the number of decimal digits.
        #[arg(long)]
        digits_only: bool,
        /// Largest exact result, in decimal digits.
        #[arg(long, env = "TRANSFINITE_GUARD_DIGITS")]
        guard: Option<u64>,
    },
    /// Symbolic term of Graham's sequence.
    Graham { k: u64 },
    /// Infinite power tower x^x^x^...
    Tower {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = tower::FIGURE_MAX_ITER)]
        iters: usize,
        #[arg(long, default_value_t = tower::FIGURE_TOL)]
        tol: f64,
        /// Follow x -> y(x) -> y(y(x)) for D steps.
        #[arg(long, value_name = "D")]
        chain: Option<usize>,
        /// Write the fixed-point table to a CSV file.
        #[arg(long, value_name = "CSVPATH")]
        fig1: Option<PathBuf>,
    },
    /// Cantor pairing (p, q) -> n.
    Pair { p: BigUint, q: BigUint },
    /// Inverse pairing n -> (p, q).
    Unpair { n: BigUint },
    /// Enumerations of countable sets.
    #[command(subcommand)]
    Enum(EnumCommand),
    /// Diagonal constructions.
    #[command(subcommand)]
    Diag(DiagCommand),
    /// All subsets of a comma-separated list.
    Powerset { elements: String },
    /// Continued fractions.
    Cf {
        #[command(subcommand)]
        command: CfCommand,
        /// Also print the convergent table as CSV.
        #[arg(long, global = true)]
        csv: bool,
    },
    /// Repeating decimal expansion of P/Q.
    Decimal { fraction: String },
    /// Digits of sum_{n>=A} B / C^(n!).
    Liouville { a: u64, b: u64, c: u64, n: usize },
    /// Digits of 0.START (START+1) (START+2) ...
    Champernowne { start: u64, n: usize },
    /// Interval cover of the rationals in [0, 1].
    Cover { eps: String, n: usize },
}

#[derive(Subcommand, Debug)]
enum OrdCommand {
    /// Normalize an expression.
    Eval { expr: String },
    /// Compare two expressions (e0 allowed alone).
    Cmp { a: String, b: String },
    /// zero, successor or limit.
    Classify { expr: String },
    /// N-th element of the fundamental sequence (e0 allowed alone).
    Fs { expr: String, n: u64 },
    /// Cardinality.
    Card { expr: String },
}

#[derive(Subcommand, Debug)]
enum EnumCommand {
    /// First N pairs p/q along the diagonals.
    Rationals { n: usize },
    /// First N integers in hotel order.
    Integers { n: usize },
    /// Room changes when guests arrive at a full hotel.
    Hotel {
        newcomers: HotelArrivals,
        #[arg(long, default_value_t = 10)]
        window: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum HotelArrivals {
    One,
    Omega,
}

#[derive(Subcommand, Debug)]
enum DiagCommand {
    /// Diagonal of a digit matrix, one row per line.
    Digits { file: PathBuf },
    /// Diagonal complement of a Y/N subset table, one row per line.
    Subsets { file: PathBuf },
    /// Binary-counting subset table of size N and its diagonal complement.
    DemoBinary { n: usize },
}

#[derive(Subcommand, Debug)]
enum CfCommand {
    /// Expansion of P/Q.
    Of { fraction: String },
    /// Exact value of "[a0; a1, ...]".
    Eval { cf: String },
    /// First K quotients of sqrt2 or phi.
    Approx { constant: Irrational, k: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Irrational {
    Sqrt2,
    Phi,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn parse(message: impl ToString) -> Self {
        CliError { code: EXIT_PARSE, message: message.to_string() }
    }

    fn domain(message: impl ToString) -> Self {
        CliError { code: EXIT_DOMAIN, message: message.to_string() }
    }
}

struct Output {
    text: String,
    result: Value,
}

impl Output {
    fn plain(text: impl Into<String>) -> Self {
        let text = text.into();
        Output { result: Value::String(text.clone()), text }
    }
}

pub fn dispatch<I, S>(argv: I) -> CliResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliResult {
                    exit_code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliResult { exit_code: EXIT_PARSE, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let (name, inputs) = describe(&cli.command);
    let outcome = run(&cli.command);
    match (outcome, cli.json) {
        (Ok(out), false) => CliResult { exit_code: EXIT_OK, stdout: line(out.text), stderr: String::new() },
        (Ok(out), true) => CliResult {
            exit_code: EXIT_OK,
            stdout: line(json!({"command": name, "inputs": inputs, "result": out.result}).to_string()),
            stderr: String::new(),
        },
        (Err(e), false) => CliResult { exit_code: e.code, stdout: String::new(), stderr: line(format!("error: {}", e.message)) },
        (Err(e), true) => CliResult {
            exit_code: e.code,
            stdout: line(json!({"command": name, "inputs": inputs, "error": e.message}).to_string()),
            stderr: String::new(),
        },
    }
}

fn line(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn describe(cmd: &Command) -> (&'static str, Value) {
    match cmd {
        Command::Ord(o) => match o {
            OrdCommand::Eval { expr } => ("ord eval", json!({"expr": expr})),
            OrdCommand::Cmp { a, b } => ("ord cmp", json!({"a": a, "b": b})),
            OrdCommand::Classify { expr } => ("ord classify", json!({"expr": expr})),
            OrdCommand::Fs { expr, n } => ("ord fs", json!({"expr": expr, "n": n})),
            OrdCommand::Card { expr } => ("ord card", json!({"expr": expr})),
        },
        Command::Hyper { a, n, b, digits_only, guard } => (
            "hyper",
            json!({"a": a.to_string(), "n": n, "b": b.to_string(), "digits_only": digits_only,
                   "guard": guard.unwrap_or(hyper::DEFAULT_GUARD_DIGITS)}),
        ),
        Command::Graham { k } => ("graham", json!({"k": k})),
        Command::Tower { x, iters, tol, chain, fig1 } => (
            "tower",
            json!({"x": x, "iters": iters, "tol": tol, "chain": chain,
                   "fig1": fig1.as_ref().map(|p| p.display().to_string())}),
        ),
        Command::Pair { p, q } => ("pair", json!({"p": p.to_string(), "q": q.to_string()})),
        Command::Unpair { n } => ("unpair", json!({"n": n.to_string()})),
        Command::Enum(e) => match e {
            EnumCommand::Rationals { n } => ("enum rationals", json!({"n": n})),
            EnumCommand::Integers { n } => ("enum integers", json!({"n": n})),
            EnumCommand::Hotel { newcomers, window } => (
                "enum hotel",
                json!({"newcomers": format!("{newcomers:?}").to_lowercase(), "window": window}),
            ),
        },
        Command::Diag(d) => match d {
            DiagCommand::Digits { file } => ("diag digits", json!({"file": file.display().to_string()})),
            DiagCommand::Subsets { file } => ("diag subsets", json!({"file": file.display().to_string()})),
            DiagCommand::DemoBinary { n } => ("diag demo-binary", json!({"n": n})),
        },
        Command::Powerset { elements } => ("powerset", json!({"elements": elements})),
        Command::Cf { command, csv } => match command {
            CfCommand::Of { fraction } => ("cf of", json!({"fraction": fraction, "csv": csv})),
            CfCommand::Eval { cf } => ("cf eval", json!({"cf": cf, "csv": csv})),
            CfCommand::Approx { constant, k } => (
                "cf approx",
                json!({"constant": format!("{constant:?}").to_lowercase(), "k": k, "csv": csv}),
            ),
        },
        Command::Decimal { fraction } => ("decimal", json!({"fraction": fraction})),
        Command::Liouville { a, b, c, n } => ("liouville", json!({"a": a, "b": b, "c": c, "n": n})),
        Command::Champernowne { start, n } => ("champernowne", json!({"start": start, "n": n})),
        Command::Cover { eps, n } => ("cover", json!({"eps": eps, "n": n})),
    }
}

fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Ord(o) => run_ord(o),
        Command::Hyper { a, n, b, digits_only, guard } => run_hyper(a, *n, b, *digits_only, *guard),
        Command::Graham { k } => {
            let g = hyper::graham(*k).map_err(CliError::domain)?;
            Ok(Output {
                text: format!("{}\n{}", g.symbolic(), g.describe()),
                result: json!({"level": g.level(), "symbolic": g.symbolic(), "description": g.describe()}),
            })
        }
        Command::Tower { x, iters, tol, chain, fig1 } => run_tower(*x, *iters, *tol, *chain, fig1.as_ref()),
        Command::Pair { p, q } => Ok(Output::plain(bijection::cantor_pair(p, q).to_string())),
        Command::Unpair { n } => {
            let (p, q) = bijection::cantor_unpair(n);
            Ok(Output {
                text: format!("{p} {q}"),
                result: json!({"p": p.to_string(), "q": q.to_string()}),
            })
        }
        Command::Enum(e) => Ok(run_enum(e)),
        Command::Diag(d) => run_diag(d),
        Command::Powerset { elements } => {
            let items: Vec<&str> = if elements.trim().is_empty() {
                Vec::new()
            } else {
                elements.split(',').map(str::trim).collect()
            };
            let subsets = bijection::power_set(&items, bijection::POWER_SET_GUARD).map_err(CliError::domain)?;
            let text = subsets
                .iter()
                .map(|s| format!("{{{}}}", s.join(", ")))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output { text, result: json!(subsets) })
        }
        Command::Cf { command, csv } => run_cf(command, *csv),
        Command::Decimal { fraction } => {
            let (p, q) = parse_fraction(fraction)?;
            let p = p.to_u64().filter(|_| !p.is_negative()).ok_or_else(|| {
                CliError::parse(format!("numerator must be a natural number below 2^64, got {p}"))
            })?;
            let q = q
                .to_u64()
                .and_then(NonZeroU64::new)
                .ok_or_else(|| CliError::domain("denominator must be positive and below 2^64"))?;
            let d = realline::decimal_expansion(p, q);
            Ok(Output {
                text: d.to_string(),
                result: json!({"integer_part": d.integer_part, "preperiod": d.preperiod,
                               "period": d.period, "display": d.to_string()}),
            })
        }
        Command::Liouville { a, b, c, n } => realline::liouville_digits(*a, *b, *c, *n)
            .map(Output::plain)
            .map_err(CliError::domain),
        Command::Champernowne { start, n } => {
            if *start == 0 {
                return Err(CliError::domain("START must be at least 1"));
            }
            Ok(Output::plain(realline::champernowne_digits(*start, *n)))
        }
        Command::Cover { eps, n } => {
            let (p, q) = parse_fraction(eps)?;
            if q.is_zero() {
                return Err(CliError::domain("epsilon has a zero denominator"));
            }
            let eps = BigRational::new(p, q);
            let m = realline::cover_measure(&eps, *n).map_err(CliError::domain)?;
            let approx = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
            // Exact when short, otherwise a float.
            let show = |r: &BigRational| {
                if r.denom().bits() <= 64 {
                    format!("{r} (~{:.15})", approx(r))
                } else {
                    format!("~{:.15}", approx(r))
                }
            };
            Ok(Output {
                text: format!(
                    "nominal_total {}\nunion_measure {}",
                    show(&m.nominal_total),
                    show(&m.union_measure)
                ),
                result: json!({
                    "nominal_total": m.nominal_total.to_string(),
                    "union_measure": m.union_measure.to_string(),
                    "nominal_total_approx": approx(&m.nominal_total),
                    "union_measure_approx": approx(&m.union_measure),
                }),
            })
        }
    }
}

fn parse_expr(src: &str) -> Result<OrdinalExpr, CliError> {
    expr::parse_ordinal(src).map_err(CliError::parse)
}

fn extended_of(src: &str) -> Result<ExtOrdinal, CliError> {
    expr::eval_extended(&parse_expr(src)?).map_err(CliError::domain)
}

fn run_ord(cmd: &OrdCommand) -> Result<Output, CliError> {
    match cmd {
        OrdCommand::Eval { expr } => Ok(Output::plain(extended_of(expr)?.to_string())),
        OrdCommand::Cmp { a, b } => {
            let (a, b) = (extended_of(a)?, extended_of(b)?);
            let word = match a.cmp(&b) {
                Ordering::Less => "LT",
                Ordering::Equal => "EQ",
                Ordering::Greater => "GT",
            };
            Ok(Output::plain(word))
        }
        OrdCommand::Classify { expr } => Ok(Output::plain(extended_of(expr)?.classify().to_string())),
        OrdCommand::Fs { expr, n } => {
            let a = extended_of(expr)?;
            let v = ordinal::fundamental_sequence(&a, *n).map_err(CliError::domain)?;
            Ok(Output::plain(v.to_string()))
        }
        OrdCommand::Card { expr } => Ok(Output::plain(extended_of(expr)?.cardinality().to_string())),
    }
}

fn run_hyper(a: &BigUint, n: u64, b: &BigUint, digits_only: bool, guard: Option<u64>) -> Result<Output, CliError> {
    let guard = match guard {
        Some(d) => DigitGuard::new(d).map_err(CliError::parse)?,
        None => DigitGuard::default(),
    };
    let r = hyper::hyper(a, n, b, guard).map_err(CliError::domain)?;
    Ok(match r {
        HyperResult::Exact(v) => {
            let digits = hyper::decimal_digits(&v);
            Output {
                text: if digits_only { digits.to_string() } else { v.to_string() },
                result: if digits_only {
                    json!({"kind": "exact", "digits": digits})
                } else {
                    json!({"kind": "exact", "value": v.to_string(), "digits": digits})
                },
            }
        }
        HyperResult::DigitEstimate { log10_digits } => {
            let digits = 10f64.powf(log10_digits);
            let text = if digits.is_finite() {
                format!("~{digits:.6e} digits")
            } else {
                format!("~10^{log10_digits:.6} digits")
            };
            Output {
                text,
                result: json!({"kind": "digit_estimate", "log10_digits": log10_digits,
                               "digits": digits.is_finite().then_some(digits)}),
            }
        }
        HyperResult::Symbolic(call) => Output {
            text: format!("{call} (too large to estimate)"),
            result: json!({"kind": "symbolic", "expr": call.to_string()}),
        },
    })
}

fn run_tower(x: f64, iters: usize, tol: f64, chain: Option<usize>, fig1: Option<&PathBuf>) -> Result<Output, CliError> {
    if let Some(path) = fig1 {
        let (lo, hi, count) = FIG1_GRID;
        let mut grid: Vec<f64> = (0..count)
            .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
            .collect();
        grid.push(x);
        let rows = tower::figure1_data(&grid);
        std::fs::write(path, tower::figure1_csv(&rows))
            .map_err(|e| CliError::domain(format!("cannot write {}: {e}", path.display())))?;
        return Ok(Output {
            text: format!("wrote {} rows to {}", rows.len(), path.display()),
            result: json!({"rows": rows.len(), "path": path.display().to_string()}),
        });
    }
    if let Some(depth) = chain {
        let values = tower::tower_chain(x, depth).map_err(CliError::domain)?;
        let text = values.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>().join(" ");
        return Ok(Output { text, result: json!(values) });
    }
    let outcome = tower::iterate_tower(x, iters, tol).map_err(CliError::domain)?;
    let (mut text, kind) = match outcome.kind {
        TowerKind::Converged(y) => (format!("converged {y:.9}"), json!({"kind": "converged", "value": y})),
        TowerKind::Diverged => ("diverged".to_string(), json!({"kind": "diverged"})),
        TowerKind::Oscillating { lo, hi } => (
            format!("oscillating {lo:.9} {hi:.9}"),
            json!({"kind": "oscillating", "lo": lo, "hi": hi}),
        ),
    };
    let mut result = json!({"outcome": kind, "iterations": outcome.iterates.len()});
    if let Some(fp) = outcome.fixed_points {
        text.push_str(&format!("\nstable {:.9}", fp.stable));
        if let Some(u) = fp.unstable {
            text.push_str(&format!("\nunstable {u:.9}"));
        }
        result["fixed_points"] = json!({"stable": fp.stable, "unstable": fp.unstable});
    }
    Ok(Output { text, result })
}

fn run_enum(cmd: &EnumCommand) -> Output {
    match cmd {
        EnumCommand::Rationals { n } => {
            let pairs = bijection::enumerate_rationals(*n);
            let text = pairs
                .iter()
                .enumerate()
                .map(|(room, (p, q))| format!("{room} {p}/{q}"))
                .collect::<Vec<_>>()
                .join("\n");
            Output { text, result: json!(pairs.iter().map(|(p, q)| [p, q]).collect::<Vec<_>>()) }
        }
        EnumCommand::Integers { n } => {
            let ints = bijection::enumerate_integers(*n);
            let text = ints.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
            Output { text, result: json!(ints) }
        }
        EnumCommand::Hotel { newcomers, window } => {
            let newcomers = match newcomers {
                HotelArrivals::One => Newcomers::One,
                HotelArrivals::Omega => Newcomers::Omega,
            };
            let m = bijection::hotel_shift(*window, newcomers);
            let mut lines: Vec<String> = m.old.iter().map(|(g, r)| format!("guest {g}: room {g} -> {r}")).collect();
            lines.extend(m.new.iter().map(|(g, r)| format!("newcomer {g}: room {r}")));
            Output {
                text: lines.join("\n"),
                result: json!({
                    "old": m.old.iter().map(|(g, r)| [g, r]).collect::<Vec<_>>(),
                    "new": m.new.iter().map(|(g, r)| [g, r]).collect::<Vec<_>>(),
                    "bijective_on_window": m.is_bijective_on_window(),
                }),
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::domain(format!("cannot read {}: {e}", path.display())))
}

fn run_diag(cmd: &DiagCommand) -> Result<Output, CliError> {
    match cmd {
        DiagCommand::Digits { file } => {
            let m = DigitMatrix::parse(&read(file)?).map_err(CliError::parse)?;
            Ok(Output::plain(bijection::diagonalize_digits(&m)))
        }
        DiagCommand::Subsets { file } => {
            let t = SubsetTable::parse(&read(file)?).map_err(CliError::parse)?;
            Ok(Output::plain(bijection::yes_no(&bijection::diagonalize_subsets(&t))))
        }
        DiagCommand::DemoBinary { n } => {
            let t = SubsetTable::binary_counting(*n);
            let rows: Vec<String> = t.rows().iter().map(|r| bijection::yes_no(r)).collect();
            let complement = bijection::yes_no(&bijection::diagonalize_subsets(&t));
            let mut text = rows.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&format!("complement {complement}"));
            Ok(Output { text, result: json!({"rows": rows, "complement": complement}) })
        }
    }
}

fn run_cf(cmd: &CfCommand, csv: bool) -> Result<Output, CliError> {
    let (cf, value) = match cmd {
        CfCommand::Of { fraction } => {
            let (p, q) = parse_fraction(fraction)?;
            let cf = realline::cf_of_rational(&p, &q).map_err(CliError::domain)?;
            (cf, None)
        }
        CfCommand::Eval { cf } => {
            let cf: ContinuedFraction = cf.parse().map_err(CliError::parse)?;
            let v = realline::cf_eval(&cf);
            (cf, Some(v))
        }
        CfCommand::Approx { constant, k } => {
            let x = match constant {
                Irrational::Sqrt2 => std::f64::consts::SQRT_2,
                Irrational::Phi => (1.0 + 5f64.sqrt()) / 2.0,
            };
            (realline::cf_approx_irrational(x, *k).map_err(CliError::domain)?, None)
        }
    };
    let mut text = match &value {
        Some(v) => v.to_string(),
        None => cf.to_string(),
    };
    let mut result = json!({
        "quotients": cf.quotients().iter().map(BigInt::to_string).collect::<Vec<_>>(),
        "display": cf.to_string(),
    });
    if let Some(v) = &value {
        result["value"] = json!(v.to_string());
    }
    if csv {
        let convergents = realline::cf_convergents(&cf, cf.len());
        let mut table = String::from("k,a_k,p_k,q_k");
        for (k, (a, c)) in cf.quotients().iter().zip(&convergents).enumerate() {
            table.push_str(&format!("\n{k},{a},{},{}", c.numer(), c.denom()));
        }
        text.push('\n');
        text.push_str(&table);
        result["convergents"] = json!(convergents.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    Ok(Output { text, result })
}

/// `P/Q` or a bare integer `P`.
fn parse_fraction(s: &str) -> Result<(BigInt, BigInt), CliError> {
    let bad = || CliError::parse(format!("expected P/Q, got {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    Ok((p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?))
}
