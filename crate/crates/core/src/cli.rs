//! The `pcrank` command line: argument parsing, command execution and output
//! rendering. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: `0` success, `1` validation or other domain failure, `2` I/O,
//! syntax or usage error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::Error;
use crate::gm::complete_matrix;
use crate::metrics::{compare_rankings, format_ordinal, method_report, Diagnostics, Method, MethodReport};
use crate::pcmatrix::{
    format_g17, parse_matrix, serialize_matrix, validate, IncompletePcMatrix, ValidationReport,
    DEFAULT_RECIPROCITY_TOL,
};
use crate::priority::Normalization;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_IO: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pcrank", version, about = "Rank alternatives from (incomplete) pairwise comparison matrices")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Compute a priority vector with one method.
    Rank {
        #[arg(long, value_enum, default_value_t = MethodArg::Gm)]
        method: MethodArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check diagonal, positivity, reciprocity and connectivity.
    Validate(CommonArgs),
    /// Fill missing comparisons with geometric mean weight ratios.
    Complete(CommonArgs),
    /// Run gm, lls and harker side by side.
    Compare(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long = "normalize", value_enum, default_value_t = NormArg::Sum)]
    normalize: NormArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
    /// Relative tolerance for c_ij * c_ji = 1 (0 demands exact reciprocals).
    #[arg(long, default_value_t = DEFAULT_RECIPROCITY_TOL)]
    tol: f64,
    /// Fill c_ji := 1/c_ij where only one side of a pair is given.
    #[arg(long)]
    repair_reciprocal: bool,
    /// Matrix file, or `-` for standard input.
    input: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Gm,
    Lls,
    Harker,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NormArg {
    Sum,
    Max,
    None,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Rank,
    Validate,
    Complete,
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    /// One JSON object per run, on a single line.
    Structured,
}

/// Fully resolved command line.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    /// Path, or `-` for standard input.
    pub input: String,
    pub method: Method,
    pub normalization: Normalization,
    pub format: OutputFormat,
    pub tol: f64,
    pub repair_reciprocal: bool,
}

impl CliConfig {
    pub fn new(command: Command, input: impl Into<String>) -> Self {
        Self {
            command,
            input: input.into(),
            method: Method::Gm,
            normalization: Normalization::SumToOne,
            format: OutputFormat::Plain,
            tol: DEFAULT_RECIPROCITY_TOL,
            repair_reciprocal: false,
        }
    }
}

impl From<Cli> for CliConfig {
    fn from(cli: Cli) -> Self {
        let (command, method, common) = match cli.command {
            CommandArgs::Rank { method, common } => (Command::Rank, method, common),
            CommandArgs::Validate(c) => (Command::Validate, MethodArg::Gm, c),
            CommandArgs::Complete(c) => (Command::Complete, MethodArg::Gm, c),
            CommandArgs::Compare(c) => (Command::Compare, MethodArg::Gm, c),
        };
        CliConfig {
            command,
            input: common.input,
            method: match method {
                MethodArg::Gm => Method::Gm,
                MethodArg::Lls => Method::Lls,
                MethodArg::Harker => Method::Harker,
            },
            normalization: match common.normalize {
                NormArg::Sum => Normalization::SumToOne,
                NormArg::Max => Normalization::MaxToOne,
                NormArg::None => Normalization::Unscaled,
            },
            format: match common.format {
                FormatArg::Plain => OutputFormat::Plain,
                FormatArg::Structured => OutputFormat::Structured,
            },
            tol: common.tol,
            repair_reciprocal: common.repair_reciprocal,
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_IO
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let config = CliConfig::from(cli);
    if !(config.tol >= 0.0) {
        let _ = writeln!(err, "error: --tol must be a non-negative number");
        return EXIT_IO;
    }
    execute(&config, stdin, out, err)
}

/// Runs a resolved command. Returns the process exit code.
pub fn execute(config: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute_inner(config, stdin, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }
}

fn domain_error(m: &IncompletePcMatrix, e: Error) -> Failure {
    match e {
        Error::DisconnectedGraph { components } => Failure::domain(format!(
            "disconnected comparison graph: components {}",
            crate::pcmatrix::describe_components(m.labels(), &components)
        )),
        other => Failure::domain(other.to_string()),
    }
}

fn execute_inner(config: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = read_input(&config.input, stdin)?;
    let mut matrix = parse_matrix(&text).map_err(|e| Failure::io(e.to_string()))?;
    if config.repair_reciprocal {
        matrix = matrix.repair_reciprocal();
    }
    let report = validate(&matrix, config.tol);

    let written = match config.command {
        Command::Validate => {
            write_validation(out, config.format, &matrix, &report)?;
            return Ok(if report.ok { EXIT_OK } else { EXIT_DOMAIN });
        }
        _ if !report.ok => {
            return Err(Failure::domain(format!("invalid comparison matrix\n{report}")));
        }
        Command::Rank => {
            let r = method_report(&matrix, config.method, config.normalization)
                .map_err(|e| domain_error(&matrix, e))?;
            write_rank(out, config, &matrix, &r)
        }
        Command::Complete => {
            let completed = complete_matrix(&matrix).map_err(|e| domain_error(&matrix, e))?;
            write_complete(out, config.format, &completed)
        }
        Command::Compare => {
            let results: Vec<(Method, Result<MethodReport, Error>)> = Method::ALL
                .iter()
                .map(|&m| (m, method_report(&matrix, m, config.normalization)))
                .collect();
            // The linear methods cannot fail on validated input short of an
            // internal error; a harker convergence failure is only reported.
            for (method, res) in &results {
                if let (Method::Gm | Method::Lls, Err(e)) = (method, res) {
                    return Err(domain_error(&matrix, e.clone()));
                }
            }
            write_compare(out, config, &matrix, &results)
        }
    };
    written.map_err(|e| Failure::io(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::io(format!("cannot read standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::io(format!("cannot read {path}: {e}")))
    }
}

fn raw(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() { format_g17(v) } else { "null".to_string() };
    RawValue::from_string(text).expect("g17 output is a valid JSON number")
}

fn labelled_groups<'a>(groups: &[Vec<usize>], labels: &'a [String]) -> Vec<Vec<&'a str>> {
    groups
        .iter()
        .map(|g| g.iter().map(|&i| labels[i].as_str()).collect())
        .collect()
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    let line = serde_json::to_string(value).map_err(std::io::Error::other)?;
    writeln!(out, "{line}")
}

#[derive(Serialize)]
struct ValidateRecord<'a> {
    command: &'static str,
    ok: bool,
    present_pairs: usize,
    total_pairs: usize,
    violations: Vec<ViolationRecord<'a>>,
}

#[derive(Serialize)]
struct ViolationRecord<'a> {
    kind: String,
    i: usize,
    j: usize,
    detail: &'a str,
}

fn write_validation(
    out: &mut dyn Write,
    format: OutputFormat,
    m: &IncompletePcMatrix,
    report: &ValidationReport,
) -> Result<(), Failure> {
    let n = m.n();
    let total = n * (n - 1) / 2;
    let res = match format {
        OutputFormat::Plain if report.ok => writeln!(
            out,
            "OK: reciprocal, connected, {} of {total} comparisons present",
            m.present_pairs()
        ),
        OutputFormat::Plain => report
            .violations
            .iter()
            .try_for_each(|v| writeln!(out, "{v}")),
        OutputFormat::Structured => write_json(
            out,
            &ValidateRecord {
                command: "validate",
                ok: report.ok,
                present_pairs: m.present_pairs(),
                total_pairs: total,
                violations: report
                    .violations
                    .iter()
                    .map(|v| ViolationRecord {
                        kind: v.kind.to_string(),
                        i: v.i + 1,
                        j: v.j + 1,
                        detail: &v.detail,
                    })
                    .collect(),
            },
        ),
    };
    res.map_err(|e| Failure::io(format!("cannot write output: {e}")))
}

#[derive(Serialize)]
struct MethodRecord<'a> {
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Box<RawValue>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_star: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordinal_ranking: Option<Vec<Vec<&'a str>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostics: Option<&'a Diagnostics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl<'a> MethodRecord<'a> {
    fn ok(r: &'a MethodReport, labels: &'a [String]) -> Self {
        Self {
            method: r.method,
            weights: Some(r.priorities.weights().iter().map(|&w| raw(w)).collect()),
            s_star: Some(raw(r.s_star)),
            ordinal_ranking: Some(labelled_groups(&r.ordinal_ranking, labels)),
            diagnostics: Some(&r.diagnostics),
            error: None,
        }
    }

    fn failed(method: Method, e: &Error) -> Self {
        Self {
            method,
            weights: None,
            s_star: None,
            ordinal_ranking: None,
            diagnostics: None,
            error: Some(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct RankRecord<'a> {
    command: &'static str,
    normalization: Normalization,
    labels: &'a [String],
    #[serde(flatten)]
    result: MethodRecord<'a>,
}

fn write_rank(
    out: &mut dyn Write,
    config: &CliConfig,
    m: &IncompletePcMatrix,
    r: &MethodReport,
) -> std::io::Result<()> {
    let labels = m.labels();
    match config.format {
        OutputFormat::Structured => write_json(
            out,
            &RankRecord {
                command: "rank",
                normalization: config.normalization,
                labels,
                result: MethodRecord::ok(r, labels),
            },
        ),
        OutputFormat::Plain => {
            let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
            writeln!(out, "method: {} (normalization: {})", r.method, config.normalization)?;
            for (label, w) in labels.iter().zip(r.priorities.weights()) {
                writeln!(out, "  {label:<width$}  {w:.4}")?;
            }
            writeln!(out, "ranking: {}", format_ordinal(&r.ordinal_ranking, labels))?;
            writeln!(out, "S*(C): {:.6e}", r.s_star)
        }
    }
}

#[derive(Serialize)]
struct CompleteRecord<'a> {
    command: &'static str,
    labels: &'a [String],
    matrix: Vec<Vec<Box<RawValue>>>,
}

fn write_complete(out: &mut dyn Write, format: OutputFormat, m: &IncompletePcMatrix) -> std::io::Result<()> {
    match format {
        OutputFormat::Plain => out.write_all(serialize_matrix(m).as_bytes()),
        OutputFormat::Structured => write_json(
            out,
            &CompleteRecord {
                command: "complete",
                labels: m.labels(),
                matrix: (0..m.n())
                    .map(|i| {
                        m.row(i)
                            .iter()
                            .map(|e| raw(e.value().expect("completed matrix has no gaps")))
                            .collect()
                    })
                    .collect(),
            },
        ),
    }
}

#[derive(Serialize)]
struct PairDiff {
    a: Method,
    b: Method,
    max_abs_diff: Box<RawValue>,
    ordinal_equal: bool,
}

#[derive(Serialize)]
struct CompareRecord<'a> {
    command: &'static str,
    normalization: Normalization,
    labels: &'a [String],
    methods: Vec<MethodRecord<'a>>,
    differences: Vec<PairDiff>,
}

fn pair_diffs(results: &[(Method, Result<MethodReport, Error>)]) -> Vec<(Method, Method, f64, bool)> {
    let ok: Vec<&MethodReport> = results.iter().filter_map(|(_, r)| r.as_ref().ok()).collect();
    let mut diffs = Vec::new();
    for (k, a) in ok.iter().enumerate() {
        for b in &ok[k + 1..] {
            let cmp = compare_rankings(&a.priorities, &b.priorities).expect("same length");
            diffs.push((a.method, b.method, cmp.max_abs_diff, cmp.ordinal_equal));
        }
    }
    diffs
}

fn write_compare(
    out: &mut dyn Write,
    config: &CliConfig,
    m: &IncompletePcMatrix,
    results: &[(Method, Result<MethodReport, Error>)],
) -> std::io::Result<()> {
    let labels = m.labels();
    let diffs = pair_diffs(results);
    match config.format {
        OutputFormat::Structured => write_json(
            out,
            &CompareRecord {
                command: "compare",
                normalization: config.normalization,
                labels,
                methods: results
                    .iter()
                    .map(|(method, r)| match r {
                        Ok(r) => MethodRecord::ok(r, labels),
                        Err(e) => MethodRecord::failed(*method, e),
                    })
                    .collect(),
                differences: diffs
                    .iter()
                    .map(|&(a, b, d, eq)| PairDiff {
                        a,
                        b,
                        max_abs_diff: raw(d),
                        ordinal_equal: eq,
                    })
                    .collect(),
            },
        ),
        OutputFormat::Plain => {
            let col = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0).max(6);
            write!(out, "{:<8}", "method")?;
            for l in labels {
                write!(out, " {l:>col$}")?;
            }
            writeln!(out, " {:>12}  ranking", "S*(C)")?;
            for (method, r) in results {
                write!(out, "{:<8}", method.to_string())?;
                match r {
                    Ok(r) => {
                        for w in r.priorities.weights() {
                            write!(out, " {w:>col$.4}")?;
                        }
                        writeln!(
                            out,
                            " {:>12.4e}  {}",
                            r.s_star,
                            format_ordinal(&r.ordinal_ranking, labels)
                        )?;
                    }
                    Err(e) => writeln!(out, " failed: {e}")?,
                }
            }
            for (a, b, d, eq) in diffs {
                writeln!(
                    out,
                    "max |w_{a} - w_{b}| = {d:.3e}, same order: {}",
                    if eq { "yes" } else { "no" }
                )?;
            }
            Ok(())
        }
    }
}
