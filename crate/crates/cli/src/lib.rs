//! Command-line front end for the `vecsim` library.
//!
//! Four subcommands cover the library's surface: `table` renders pairwise
//! measure comparisons, `rank` turns a comparison into polarity-aware
//! competition ranks, `audit` samples a distance against the four metric
//! axioms, and `identity` checks the squared-norm decomposition on a
//! dataset pair or a batch of random pairs.
//!
//! Dispatch is single threaded; the library calls it delegates to carry
//! the parallel/sequential contract. Output for a given invocation is
//! byte-identical across runs and thread counts, every diagnostic goes to
//! the error stream, and no environment variables are consulted.
//!
//! Exit codes: 0 on success (including a NotAMetric audit verdict, which
//! is a successful audit), 1 for domain errors such as unreadable input
//! or an unknown vector id, 2 for usage errors.

pub mod dataset;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use vecsim::audit::{self, AuditConfig};
use vecsim::norm_identity;
use vecsim::ranking::{self, OutputStyle};
use vecsim::{measures, MeasureKind, Vector};

use dataset::{load_dataset, DatasetError, Format};

/// Everything a finished invocation produced: both streams plus the code
/// the process would exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "vecsim",
    version,
    about = "Vector similarity tables, rankings, metric audits, and norm-identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Render a measure-by-measure comparison table for vector pairs
    Table(TableArgs),
    /// Rank dataset vectors by closeness to an index vector
    Rank(RankArgs),
    /// Sample a distance measure against the four metric axioms
    Audit(AuditArgs),
    /// Check that the squared l1 norm splits into the squared l2 norm
    /// plus a doubled cross term
    Identity(IdentityArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Dataset file holding the vectors
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Dataset encoding; inferred from the extension when omitted
    #[arg(long, value_enum, value_name = "FMT")]
    format: Option<FormatArg>,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    /// Comma-separated measure columns (e.g. cosine, dot, cityblock,
    /// euclidean, minkowski3, jdm1, jdm2, jsm2, pearson)
    #[arg(
        long,
        value_name = "LIST",
        default_value = "cosine,dot,cityblock,euclidean,jdm1,jdm2"
    )]
    measures: String,
    /// Orders expanded when a measure token omits one (plain `jdm`,
    /// `jsm`, or `minkowski`)
    #[arg(
        long,
        value_name = "P",
        value_delimiter = ',',
        default_value = "1,2",
        value_parser = clap::value_parser!(u32).range(1..)
    )]
    p: Vec<u32>,
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("selection").required(true).args(["index", "pair"]))]
struct TableArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Compare this vector against every dataset vector, in file order
    #[arg(long, value_name = "ID")]
    index: Option<String>,
    /// Compare one explicit id pair; repeat the flag for more rows
    #[arg(long, value_name = "A,B")]
    pair: Vec<String>,
    #[command(flatten)]
    measures: MeasureArgs,
    /// Output style
    #[arg(long, value_enum, value_name = "STYLE", default_value_t = OutputArg::Text)]
    output: OutputArg,
    /// Decimal places for rounded table cells
    #[arg(long, value_name = "N", default_value_t = 3)]
    decimals: usize,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Rank every dataset vector by closeness to this one
    #[arg(long, value_name = "ID")]
    index: String,
    #[command(flatten)]
    measures: MeasureArgs,
    /// Output style
    #[arg(long, value_enum, value_name = "STYLE", default_value_t = OutputArg::Text)]
    output: OutputArg,
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("target").required(true).args(["measure_token", "measure"]))]
struct AuditArgs {
    /// Distance to audit (e.g. jdm2, euclidean, cityblock, hamming, or
    /// minkowski with --p)
    #[arg(value_name = "MEASURE")]
    measure_token: Option<String>,
    /// Flag spelling of the measure argument
    #[arg(long, value_name = "MEASURE")]
    measure: Option<String>,
    /// Order for measure tokens without a digit suffix
    #[arg(long, value_name = "P", value_parser = clap::value_parser!(u32).range(1..))]
    p: Option<u32>,
    /// Generator seed for the sampled trials
    #[arg(long, value_name = "SEED", default_value_t = 42)]
    seed: u64,
    /// Sampled trials per axiom
    #[arg(long, value_name = "N", default_value_t = 10_000)]
    trials: usize,
    /// Dimension of the sampled vectors
    #[arg(long, value_name = "D", default_value_t = 3)]
    dim: usize,
    /// Slack granted to the right side of each axiom comparison
    #[arg(long, value_name = "TOL", default_value_t = 1e-9)]
    tolerance: f64,
    /// Output style (text or json)
    #[arg(long, value_enum, value_name = "STYLE", default_value_t = OutputArg::Text)]
    output: OutputArg,
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("mode").required(true).args(["pair", "random"]))]
struct IdentityArgs {
    /// Dataset file holding the pair
    #[arg(long, value_name = "PATH", requires = "pair")]
    input: Option<PathBuf>,
    /// Dataset encoding; inferred from the extension when omitted
    #[arg(long, value_enum, value_name = "FMT", requires = "input")]
    format: Option<FormatArg>,
    /// Ids of the two vectors to check, comma separated
    #[arg(long, value_name = "A,B", requires = "input")]
    pair: Option<String>,
    /// Check this many random pairs instead of a dataset pair
    #[arg(
        long,
        value_name = "N",
        conflicts_with_all = ["input", "pair"],
        value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..)
    )]
    random: Option<usize>,
    /// Dimension of random vectors (random mode)
    #[arg(long, value_name = "D", default_value_t = 3)]
    dim: usize,
    /// Generator seed (random mode)
    #[arg(long, value_name = "SEED", default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Csv,
    Json,
}

impl From<OutputArg> for OutputStyle {
    fn from(arg: OutputArg) -> OutputStyle {
        match arg {
            OutputArg::Text => OutputStyle::Text,
            OutputArg::Csv => OutputStyle::Csv,
            OutputArg::Json => OutputStyle::Json,
        }
    }
}

/// Why a structurally valid invocation still failed.
#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Core(#[from] vecsim::Error),
    #[error("unknown measure {token:?}")]
    UnknownMeasure { token: String },
    #[error("no measures requested")]
    EmptyMeasures,
    #[error("measure {token:?} needs an order; pass --p or a digit suffix like jdm2")]
    MissingOrder { token: String },
    #[error("measure {token:?} already carries an order; drop --p")]
    ConflictingOrder { token: String },
    #[error("measure {token:?} does not take --p")]
    OrderNotApplicable { token: String },
    #[error("--pair expects two comma-separated ids, got {got:?}")]
    MalformedPair { got: String },
    #[error("audit reports render as text or json; csv has no row shape for them")]
    AuditCsv,
    #[error("{failures} of {total} identity checks failed")]
    IdentityFailed { failures: usize, total: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Usage-level mistakes (bad flag values, impossible combinations)
    /// exit 2; everything discovered while doing the work exits 1.
    fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownMeasure { .. }
            | CliError::EmptyMeasures
            | CliError::MissingOrder { .. }
            | CliError::ConflictingOrder { .. }
            | CliError::OrderNotApplicable { .. }
            | CliError::MalformedPair { .. }
            | CliError::AuditCsv => 2,
            _ => 1,
        }
    }
}

/// Parse and execute one invocation, writing only to the given streams.
/// Returns the process exit code. `args` must include the binary name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            if err.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                return 2;
            }
            let _ = stdout.write_all(rendered.as_bytes());
            return 0;
        }
    };
    match dispatch(cli, stdout) {
        Ok(()) => 0,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            err.exit_code()
        }
    }
}

/// [`run`] with captured in-memory streams, for tests and embedding.
pub fn run_capture<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let exit_code = run(args, &mut out, &mut err);
    CommandOutcome {
        exit_code,
        stdout: String::from_utf8_lossy(&out).into_owned(),
        stderr: String::from_utf8_lossy(&err).into_owned(),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Table(args) => cmd_table(&args, out),
        Command::Rank(args) => cmd_rank(&args, out),
        Command::Audit(args) => cmd_audit(&args, out),
        Command::Identity(args) => cmd_identity(&args, out),
    }
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let measure_list = parse_measures_list(&args.measures.measures, &args.measures.p)?;
    let data = load_dataset(&args.input.input, args.input.format.map(Format::from))?;
    let rows = if let Some(index_id) = &args.index {
        let index = data.get(index_id)?;
        ranking::comparison_table(index, data.vectors(), &measure_list)?
    } else {
        let mut pairs = Vec::with_capacity(args.pair.len());
        for pair_text in &args.pair {
            let (a, b) = split_pair(pair_text)?;
            pairs.push((data.get(a)?.clone(), data.get(b)?.clone()));
        }
        ranking::pair_comparison_table(&pairs, &measure_list)?
    };
    let rendered = ranking::format_table(&rows, args.output.into(), args.decimals);
    out.write_all(rendered.as_bytes())?;
    Ok(())
}

fn cmd_rank(args: &RankArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let measure_list = parse_measures_list(&args.measures.measures, &args.measures.p)?;
    let data = load_dataset(&args.input.input, args.input.format.map(Format::from))?;
    let index = data.get(&args.index)?;
    let rows = ranking::comparison_table(index, data.vectors(), &measure_list)?;
    let table = ranking::rank_table(rows)?;
    let rendered = ranking::format_rank_table(&table, args.output.into());
    out.write_all(rendered.as_bytes())?;
    Ok(())
}

fn cmd_audit(args: &AuditArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let token = args
        .measure_token
        .as_deref()
        .or(args.measure.as_deref())
        .expect("clap requires exactly one measure argument");
    let kind = parse_audit_measure(token, args.p)?;
    let config = AuditConfig {
        seed: args.seed,
        trials: args.trials,
        dimension: args.dim,
        component_range: (-10.0, 10.0),
        tolerance: args.tolerance,
    };
    let report = audit::check_axioms(kind, &config)?;
    let rendered = match args.output {
        OutputArg::Text => report.render_text(),
        OutputArg::Json => format!("{}\n", report.to_json()),
        OutputArg::Csv => return Err(CliError::AuditCsv),
    };
    out.write_all(rendered.as_bytes())?;
    Ok(())
}

fn cmd_identity(args: &IdentityArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(count) = args.random {
        return identity_random(count, args.dim, args.seed, out);
    }
    let pair_text = args.pair.as_deref().expect("clap requires a mode");
    let input = args.input.as_deref().expect("--pair requires --input");
    let (a, b) = split_pair(pair_text)?;
    let data = load_dataset(input, args.format.map(Format::from))?;
    identity_pair(data.get(a)?, data.get(b)?, out)
}

fn identity_pair(u: &Vector, v: &Vector, out: &mut dyn Write) -> Result<(), CliError> {
    let breakdown = norm_identity::identity_breakdown(u, v)?;
    let direct_pass = vecsim::approx_eq(
        breakdown.l1_square,
        breakdown.l2_square + breakdown.cross_term,
    );
    writeln!(
        out,
        "identity check: {} and {} (dimension {})",
        u.id(),
        v.id(),
        u.dim()
    )?;
    writeln!(out, "l1_square  = {}", breakdown.l1_square)?;
    writeln!(out, "l2_square  = {}", breakdown.l2_square)?;
    writeln!(out, "cross_term = {}", breakdown.cross_term)?;
    writeln!(
        out,
        "{} = {} + {} {}",
        breakdown.l1_square,
        breakdown.l2_square,
        breakdown.cross_term,
        verdict(direct_pass)
    )?;
    let matrix_pass = match norm_identity::rank_one_matrix(u, v) {
        Ok(matrix) => {
            let trace = matrix.trace();
            let upper = matrix.upper_triangle_sum();
            let pass = vecsim::approx_eq(trace + 2.0 * upper, breakdown.l1_square);
            writeln!(
                out,
                "matrix route: trace = {trace}, upper-triangle sum = {upper} {}",
                verdict(pass)
            )?;
            pass
        }
        Err(vecsim::Error::MatrixTooLarge { dim, max }) => {
            writeln!(
                out,
                "matrix route skipped: dimension {dim} exceeds the {max} cap"
            )?;
            true
        }
        Err(other) => return Err(other.into()),
    };
    if direct_pass && matrix_pass {
        Ok(())
    } else {
        Err(CliError::IdentityFailed {
            failures: 1,
            total: 1,
        })
    }
}

fn identity_random(
    count: usize,
    dim: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let config = AuditConfig {
        seed,
        trials: 1,
        dimension: dim,
        component_range: (-10.0, 10.0),
        tolerance: 1e-9,
    };
    let samples = audit::sample_vectors(&config, 2 * count)?;
    writeln!(
        out,
        "identity check: {count} random pairs, dimension {dim}, seed {seed}"
    )?;
    let mut failures = 0;
    let mut first_failure = None;
    for pair in samples.chunks(2) {
        let (u, v) = (&pair[0], &pair[1]);
        let breakdown = norm_identity::identity_breakdown(u, v)?;
        let direct = measures::minkowski_distance(u, v, 1)?;
        let holds = vecsim::approx_eq(
            breakdown.l1_square,
            breakdown.l2_square + breakdown.cross_term,
        ) && vecsim::approx_eq(breakdown.l1_square.sqrt(), direct);
        if !holds {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(format!(
                    "first failure: {} and {}: l1_square = {}, l2_square = {}, cross_term = {}",
                    u.id(),
                    v.id(),
                    breakdown.l1_square,
                    breakdown.l2_square,
                    breakdown.cross_term
                ));
            }
        }
    }
    writeln!(out, "{}/{} PASS", count - failures, count)?;
    if failures == 0 {
        return Ok(());
    }
    if let Some(detail) = first_failure {
        writeln!(out, "{detail}")?;
    }
    Err(CliError::IdentityFailed {
        failures,
        total: count,
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Split an `A,B` id selector into its two trimmed halves.
fn split_pair(text: &str) -> Result<(&str, &str), CliError> {
    let mut parts = text.split(',');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) if !a.trim().is_empty() && !b.trim().is_empty() => {
            Ok((a.trim(), b.trim()))
        }
        _ => Err(CliError::MalformedPair {
            got: text.to_string(),
        }),
    }
}

/// Expand a comma-separated measure list into concrete column kinds,
/// dropping duplicates while keeping first-appearance order.
fn parse_measures_list(list: &str, p_values: &[u32]) -> Result<Vec<MeasureKind>, CliError> {
    let mut kinds = Vec::new();
    for token in list.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        for kind in parse_measure_token(token, p_values)? {
            if !kinds.contains(&kind) {
                kinds.push(kind);
            }
        }
    }
    if kinds.is_empty() {
        return Err(CliError::EmptyMeasures);
    }
    Ok(kinds)
}

/// Translate one measure token. Tokens either name a fixed measure
/// (`cosine`, `dot`, `cityblock`, `euclidean`, `pearson`, plus common
/// abbreviations), carry their order as a digit suffix (`jdm2`,
/// `minkowski3`), or name a parameterized family that expands over
/// `p_values`.
fn parse_measure_token(token: &str, p_values: &[u32]) -> Result<Vec<MeasureKind>, CliError> {
    let lower = token.to_ascii_lowercase();
    if let Some(kind) = fixed_vector_measure(&lower) {
        return Ok(vec![kind]);
    }
    let (family, suffix) = split_order_suffix(&lower);
    let build = parameterized_family(family).ok_or_else(|| CliError::UnknownMeasure {
        token: token.to_string(),
    })?;
    if suffix.is_empty() {
        return Ok(p_values.iter().map(|&p| build(p)).collect());
    }
    match suffix.parse::<u32>() {
        Ok(p) if p >= 1 => Ok(vec![build(p)]),
        _ => Err(CliError::UnknownMeasure {
            token: token.to_string(),
        }),
    }
}

/// Translate the single measure argument of an audit. Unlike table
/// columns, an audit wants exactly one measure, so a bare family token
/// takes its order from `--p` instead of expanding. `hamming` is
/// accepted here; it has distance polarity even though it is not a
/// table column.
fn parse_audit_measure(token: &str, p: Option<u32>) -> Result<MeasureKind, CliError> {
    let lower = token.to_ascii_lowercase();
    let fixed = fixed_vector_measure(&lower).or(match lower.as_str() {
        "hamming" => Some(MeasureKind::Hamming),
        _ => None,
    });
    if let Some(kind) = fixed {
        if p.is_some() {
            return Err(CliError::OrderNotApplicable {
                token: token.to_string(),
            });
        }
        return Ok(kind);
    }
    let (family, suffix) = split_order_suffix(&lower);
    let build = parameterized_family(family).ok_or_else(|| CliError::UnknownMeasure {
        token: token.to_string(),
    })?;
    match (suffix, p) {
        ("", Some(order)) => Ok(build(order)),
        ("", None) => Err(CliError::MissingOrder {
            token: token.to_string(),
        }),
        (_, Some(_)) => Err(CliError::ConflictingOrder {
            token: token.to_string(),
        }),
        (digits, None) => match digits.parse::<u32>() {
            Ok(order) if order >= 1 => Ok(build(order)),
            _ => Err(CliError::UnknownMeasure {
                token: token.to_string(),
            }),
        },
    }
}

fn fixed_vector_measure(lower: &str) -> Option<MeasureKind> {
    match lower {
        "cosine" | "cos" | "csm" => Some(MeasureKind::Cosine),
        "dot" | "dotproduct" | "dpsm" => Some(MeasureKind::DotProduct),
        "cityblock" | "manhattan" | "cbdm" | "l1" => Some(MeasureKind::CityBlock),
        "euclidean" | "edm" | "l2" => Some(MeasureKind::Euclidean),
        "pearson" | "pcc" => Some(MeasureKind::Pearson),
        _ => None,
    }
}

fn parameterized_family(family: &str) -> Option<fn(u32) -> MeasureKind> {
    match family {
        "jdm" => Some(MeasureKind::Jdm),
        "jsm" => Some(MeasureKind::Jsm),
        "minkowski" | "mdm" => Some(MeasureKind::Minkowski),
        _ => None,
    }
}

/// Split a token at its first digit: `jdm2` becomes (`jdm`, `2`).
fn split_order_suffix(lower: &str) -> (&str, &str) {
    match lower.find(|c: char| c.is_ascii_digit()) {
        Some(at) => lower.split_at(at),
        None => (lower, ""),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_list_expands_aliases_suffixes_and_families() {
        let kinds = parse_measures_list("cosine,dot,cityblock,euclidean,jdm1,jdm2", &[1, 2])
            .unwrap();
        assert_eq!(
            kinds,
            vec![
                MeasureKind::Cosine,
                MeasureKind::DotProduct,
                MeasureKind::CityBlock,
                MeasureKind::Euclidean,
                MeasureKind::Jdm(1),
                MeasureKind::Jdm(2),
            ]
        );

        let kinds = parse_measures_list("jdm,jsm3,minkowski", &[1, 2]).unwrap();
        assert_eq!(
            kinds,
            vec![
                MeasureKind::Jdm(1),
                MeasureKind::Jdm(2),
                MeasureKind::Jsm(3),
                MeasureKind::Minkowski(1),
                MeasureKind::Minkowski(2),
            ]
        );
    }

    #[test]
    fn measure_list_is_case_insensitive_and_deduplicated() {
        let kinds = parse_measures_list("CSM,cosine,L2,euclidean", &[2]).unwrap();
        assert_eq!(kinds, vec![MeasureKind::Cosine, MeasureKind::Euclidean]);
    }

    #[test]
    fn unknown_and_empty_measure_lists_are_rejected() {
        assert!(matches!(
            parse_measures_list("jaccard", &[1]),
            Err(CliError::UnknownMeasure { token }) if token == "jaccard"
        ));
        assert!(matches!(
            parse_measures_list("hamming", &[1]),
            Err(CliError::UnknownMeasure { .. })
        ));
        assert!(matches!(
            parse_measures_list(" , ", &[1]),
            Err(CliError::EmptyMeasures)
        ));
        assert!(matches!(
            parse_measures_list("jdm0", &[1]),
            Err(CliError::UnknownMeasure { .. })
        ));
    }

    #[test]
    fn audit_token_resolves_order_from_suffix_or_flag() {
        assert_eq!(
            parse_audit_measure("jdm2", None).unwrap(),
            MeasureKind::Jdm(2)
        );
        assert_eq!(
            parse_audit_measure("minkowski", Some(1)).unwrap(),
            MeasureKind::Minkowski(1)
        );
        assert_eq!(
            parse_audit_measure("hamming", None).unwrap(),
            MeasureKind::Hamming
        );
        assert!(matches!(
            parse_audit_measure("jdm", None),
            Err(CliError::MissingOrder { .. })
        ));
        assert!(matches!(
            parse_audit_measure("jdm2", Some(1)),
            Err(CliError::ConflictingOrder { .. })
        ));
        assert!(matches!(
            parse_audit_measure("euclidean", Some(3)),
            Err(CliError::OrderNotApplicable { .. })
        ));
    }

    #[test]
    fn pair_selector_requires_exactly_two_ids() {
        assert_eq!(split_pair("r,s").unwrap(), ("r", "s"));
        assert_eq!(split_pair(" r , s ").unwrap(), ("r", "s"));
        assert!(split_pair("r").is_err());
        assert!(split_pair("r,s,t").is_err());
        assert!(split_pair("r,").is_err());
    }

    #[test]
    fn usage_errors_exit_two_and_domain_errors_exit_one() {
        assert_eq!(
            CliError::UnknownMeasure {
                token: "x".into()
            }
            .exit_code(),
            2
        );
        assert_eq!(CliError::AuditCsv.exit_code(), 2);
        assert_eq!(
            CliError::IdentityFailed {
                failures: 1,
                total: 2
            }
            .exit_code(),
            1
        );
        assert_eq!(
            CliError::Core(vecsim::Error::InvalidOrder).exit_code(),
            1
        );
    }
}
