//! Command-line front end for `chain-endo`.
//!
//! [`run_command`] does all the work and returns the exit code together with
//! everything that would be printed, so the binary is a thin wrapper and the
//! commands can be tested in-process.
//!
//! Exit codes: 0 when the command succeeds or the checked identity holds,
//! 1 when a claim or identity is violated, 2 on usage or input errors.

pub mod notation;
mod report;

use std::fmt::Write as _;

use chain_endo::{
    count, enumerate_subset, verify, verify_all, Bounds, ChainError, Claim, Endo, ProjectionSpec,
    SimplexSpec, SubsetSelector, VerifyOptions, VertexFilter, VertexSet,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use notation::{parse_endo, NotationError};
pub use report::{render_report, REPORT_SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "chain-endo",
    version,
    about = "Endomorphisms of a finite chain: run-length calculus, projections and exhaustive verification"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an endomorphism at a point
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        endo: String,
        #[arg(long)]
        point: usize,
    },
    /// Pointwise join of two endomorphisms
    Add(Pair),
    /// Left-to-right product: apply alpha, then beta
    Compose(Pair),
    /// Project onto the sub-simplex on vertices a_l..a_m
    Project {
        #[command(flatten)]
        projection: ProjectionArgs,
        #[arg(long)]
        endo: String,
    },
    /// Report membership in S, R and D
    Classify {
        #[command(flatten)]
        projection: ProjectionArgs,
        #[arg(long)]
        endo: String,
    },
    /// Evaluate both sides of the Leibniz identity for a pair
    Leibniz {
        #[command(flatten)]
        projection: ProjectionArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Exhaustively check a claim (or `all`)
    Verify(VerifyArgs),
    /// Count the elements of a subset
    Count(SetArgs),
    /// List the elements of a subset
    Enumerate(SetArgs),
}

#[derive(Debug, Args)]
struct Pair {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
}

#[derive(Debug, Args)]
struct ProjectionArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated vertex set; defaults to the whole chain
    #[arg(long = "A", value_name = "A")]
    vertices: Option<String>,
    #[arg(long = "l")]
    lower: usize,
    #[arg(long = "m")]
    upper: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Claim identifier, e.g. theorem-leibniz, or `all`
    #[arg(long)]
    claim: String,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Comma-separated points, `all` for every vertex set; defaults to the whole chain
    #[arg(long = "A", value_name = "A")]
    vertices: Option<String>,
    #[arg(long = "l")]
    lower: Option<usize>,
    #[arg(long = "m")]
    upper: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, default_value_t = chain_endo::verify::DEFAULT_MAX_WITNESSES)]
    max_witnesses: usize,
    /// Maximum estimated number of elementary checks
    #[arg(long, env = "CHAIN_ENDO_CEILING")]
    ceiling: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetKind {
    Simplex,
    S,
    R,
    D,
    DCap,
    On,
    N,
    #[value(alias = "s5")]
    TopRuns,
}

#[derive(Debug, Args)]
struct SetArgs {
    #[arg(value_enum)]
    set: SetKind,
    #[arg(long)]
    n: usize,
    /// Comma-separated vertex set; defaults to the whole chain
    #[arg(long = "A", value_name = "A")]
    vertices: Option<String>,
    #[arg(long = "l")]
    lower: Option<usize>,
    #[arg(long = "m")]
    upper: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, env = "CHAIN_ENDO_CEILING")]
    ceiling: Option<u128>,
}

/// Everything a command printed, and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("cannot parse `{text}`: {source}")]
    Notation { text: String, source: NotationError },
    #[error("{0}")]
    Usage(String),
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                CommandOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandOutput::ok(rendered)
            };
        }
    };
    match execute(cli.command, cli.format) {
        Ok(out) => out,
        Err(err) => CommandOutput::usage(err),
    }
}

fn endo_arg(text: &str, n: usize) -> Result<Endo, CliError> {
    parse_endo(text, n).map_err(|source| CliError::Notation {
        text: text.to_owned(),
        source,
    })
}

fn parse_points(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("`{part}` in --A is not a chain point")))
        })
        .collect()
}

/// `--A` for single operations: omitted means the whole chain.
fn vertex_set(n: usize, text: Option<&str>) -> Result<VertexSet, CliError> {
    Ok(match text {
        None => VertexSet::full(n)?,
        Some(t) if t.trim() == "full" => VertexSet::full(n)?,
        Some(t) => VertexSet::new(n, parse_points(t)?)?,
    })
}

fn projection(args: &ProjectionArgs) -> Result<ProjectionSpec, CliError> {
    let vertices = vertex_set(args.n, args.vertices.as_deref())?;
    Ok(ProjectionSpec::new(
        SimplexSpec::new(vertices),
        args.lower,
        args.upper,
    )?)
}

fn endo_json(endo: &Endo) -> serde_json::Value {
    json!({ "table": endo.values(), "notation": endo.notation() })
}

fn table(endo: &Endo) -> String {
    let cells: Vec<String> = endo.values().iter().map(ToString::to_string).collect();
    format!("[{}]", cells.join(","))
}

fn print_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn endo_output(n: usize, endo: &Endo, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", endo.notation()),
        Format::Json => {
            let mut value = endo_json(endo);
            value["n"] = json!(n);
            print_json(&value)
        }
    }
}

fn execute(command: Command, format: Format) -> Result<CommandOutput, CliError> {
    match command {
        Command::Eval { n, endo, point } => {
            let alpha = endo_arg(&endo, n)?;
            let value = alpha.eval(point)?;
            Ok(CommandOutput::ok(match format {
                Format::Text => format!("{value}\n"),
                Format::Json => print_json(&json!({ "n": n, "point": point, "value": value })),
            }))
        }
        Command::Add(pair) => {
            let (a, b) = (
                endo_arg(&pair.alpha, pair.n)?,
                endo_arg(&pair.beta, pair.n)?,
            );
            Ok(CommandOutput::ok(endo_output(pair.n, &a.add(&b)?, format)))
        }
        Command::Compose(pair) => {
            let (a, b) = (
                endo_arg(&pair.alpha, pair.n)?,
                endo_arg(&pair.beta, pair.n)?,
            );
            Ok(CommandOutput::ok(endo_output(
                pair.n,
                &a.compose(&b)?,
                format,
            )))
        }
        Command::Project {
            projection: p,
            endo,
        } => {
            let d = projection(&p)?;
            let alpha = endo_arg(&endo, p.n)?;
            Ok(CommandOutput::ok(endo_output(
                p.n,
                &d.project(&alpha)?,
                format,
            )))
        }
        Command::Classify {
            projection: p,
            endo,
        } => {
            let d = projection(&p)?;
            let m = d.membership(&endo_arg(&endo, p.n)?)?;
            Ok(CommandOutput::ok(match format {
                Format::Text => format!("S: {}\nR: {}\nD: {}\n", m.in_s, m.in_r, m.in_d()),
                Format::Json => {
                    print_json(&json!({ "in_s": m.in_s, "in_r": m.in_r, "in_d": m.in_d() }))
                }
            }))
        }
        Command::Leibniz {
            projection: p,
            alpha,
            beta,
        } => {
            let d = projection(&p)?;
            let (a, b) = (endo_arg(&alpha, p.n)?, endo_arg(&beta, p.n)?);
            let out = d.leibniz(&a, &b)?;
            let code = if out.holds { EXIT_OK } else { EXIT_VIOLATED };
            let stdout = match format {
                Format::Text => {
                    let mut s = String::new();
                    let width = table(&out.lhs).len();
                    let _ = writeln!(
                        s,
                        "lhs  ∂(αβ)         {:width$}  {}",
                        table(&out.lhs),
                        out.lhs
                    );
                    let _ = writeln!(
                        s,
                        "rhs  ∂(α)β + α∂(β) {:width$}  {}",
                        table(&out.rhs),
                        out.rhs
                    );
                    let _ = writeln!(s, "holds: {}", out.holds);
                    s
                }
                Format::Json => print_json(&json!({
                    "lhs": endo_json(&out.lhs),
                    "rhs": endo_json(&out.rhs),
                    "holds": out.holds,
                })),
            };
            Ok(CommandOutput::with_code(code, stdout))
        }
        Command::Verify(args) => run_verify(args, format),
        Command::Count(args) => {
            let sel = selector(&args)?;
            let ceiling = args.ceiling.unwrap_or(chain_endo::verify::DEFAULT_CEILING);
            let total = count(&sel, ceiling)?;
            Ok(CommandOutput::ok(match format {
                Format::Text => format!("{total}\n"),
                Format::Json => print_json(&json!({ "set": sel.label(), "count": total as u64 })),
            }))
        }
        Command::Enumerate(args) => {
            let sel = selector(&args)?;
            let ceiling = args.ceiling.unwrap_or(chain_endo::verify::DEFAULT_CEILING);
            // enforce the ceiling before listing anything
            count(&sel, ceiling)?;
            let members: Vec<Endo> = enumerate_subset(&sel)?.collect();
            Ok(CommandOutput::ok(match format {
                Format::Text => members
                    .iter()
                    .map(|e| format!("{}  {}\n", table(e), e))
                    .collect(),
                Format::Json => print_json(&json!({
                    "set": sel.label(),
                    "count": members.len(),
                    "elements": members.iter().map(endo_json).collect::<Vec<_>>(),
                })),
            }))
        }
    }
}

fn selector(args: &SetArgs) -> Result<SubsetSelector, CliError> {
    let simplex = || -> Result<SimplexSpec, CliError> {
        Ok(SimplexSpec::new(vertex_set(
            args.n,
            args.vertices.as_deref(),
        )?))
    };
    let projection = || -> Result<ProjectionSpec, CliError> {
        let (Some(l), Some(m)) = (args.lower, args.upper) else {
            return Err(CliError::Usage("this set needs --l and --m".into()));
        };
        Ok(ProjectionSpec::new(simplex()?, l, m)?)
    };
    let sel = match args.set {
        SetKind::Simplex => SubsetSelector::Simplex {
            simplex: simplex()?,
        },
        SetKind::S => SubsetSelector::S {
            projection: projection()?,
        },
        SetKind::R => SubsetSelector::R {
            projection: projection()?,
        },
        SetKind::D => SubsetSelector::D {
            projection: projection()?,
        },
        SetKind::DCap => SubsetSelector::DCap {
            simplex: simplex()?,
        },
        SetKind::On => SubsetSelector::On { n: args.n },
        SetKind::N => SubsetSelector::N { n: args.n },
        SetKind::TopRuns => {
            let p = args
                .p
                .ok_or_else(|| CliError::Usage("top-runs needs --p".into()))?;
            SubsetSelector::top_runs(args.n, p)?
        }
    };
    sel.validate()?;
    Ok(sel)
}

fn run_verify(args: VerifyArgs, format: Format) -> Result<CommandOutput, CliError> {
    let vertices = match args.vertices.as_deref().map(str::trim) {
        None | Some("full") => VertexFilter::Full,
        Some("all") => VertexFilter::All,
        Some(text) => VertexFilter::Exact(parse_points(text)?),
    };
    let bounds = Bounds {
        n_min: args.n_min,
        n_max: args.n_max,
        vertices,
        lower: args.lower,
        upper: args.upper,
        p: args.p,
    };
    let options = VerifyOptions {
        max_witnesses: args.max_witnesses,
        ceiling: args.ceiling.unwrap_or(chain_endo::verify::DEFAULT_CEILING),
    };
    let reports = if args.claim.trim().eq_ignore_ascii_case("all") {
        verify_all(&bounds, &options)?
    } else {
        let claim: Claim = args.claim.parse()?;
        vec![verify(claim, &bounds, &options)?]
    };
    let all_hold = reports.iter().all(|r| r.holds());
    let code = if all_hold { EXIT_OK } else { EXIT_VIOLATED };
    let stdout = match format {
        Format::Json if reports.len() == 1 => print_json(&json!(reports[0])),
        Format::Json => {
            let violated: Vec<&str> = reports
                .iter()
                .filter(|r| !r.holds())
                .map(|r| r.claim.as_str())
                .collect();
            print_json(&json!({
                "claims": reports.len(),
                "violated": violated,
                "reports": reports,
            }))
        }
        Format::Text => {
            let mut s: String = reports.iter().map(render_report).collect();
            if reports.len() > 1 {
                let bad = reports.iter().filter(|r| !r.holds()).count();
                let _ = writeln!(
                    s,
                    "{} claims checked: {} hold, {} violated",
                    reports.len(),
                    reports.len() - bad,
                    bad
                );
            }
            s
        }
    };
    Ok(CommandOutput::with_code(code, stdout))
}
