//! Command-line front end.
//!
//! Subcommands share one analysis pipeline and differ only in which part of
//! the report they print. Exit codes: 0 success, 1 usage or parse error,
//! 2 hypothesis failure, 3 genericity exhaustion, 4 internal invariant
//! violation.

use crate::invariants::AnalysisError;
use crate::parse::{parse_rational, FamilyMode, FamilySpec};
use crate::report::{analyze, AnalysisOptions, AnalysisReport};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const SEED_ENV: &str = "EQUISING_SEED";

#[derive(Parser)]
#[command(
    name = "equising",
    about = "Exact equisingularity-at-infinity invariants of one-parameter families of affine hypersurfaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: hypothesis, gamma profile, special values, fibers,
    /// verdicts.
    Analyze(RunArgs),
    /// Gamma profile only (generic values and verified special values).
    Gamma(RunArgs),
    /// Atypical set only: parameter values where some gamma level jumps.
    Atypical(RunArgs),
    /// Fiber report (Milnor number, Euler characteristic, cells) at the
    /// requested values.
    Euler(RunArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Expression is f(x); the family is f(x) - parameter.
    Fiber,
    /// Expression is F(parameter, x) itself.
    General,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct RunArgs {
    /// How to read the expression.
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Polynomial expression, e.g. "x + x^2*y".
    #[arg(long)]
    poly: String,
    /// Comma-separated space variables, e.g. "x,y".
    #[arg(long)]
    vars: String,
    /// Parameter variable name.
    #[arg(long)]
    param: String,
    /// Parameter values to analyze (rational, e.g. "0", "-3/2"); repeatable.
    #[arg(long = "at")]
    at: Vec<String>,
    /// Seed for the generic choices (EQUISING_SEED overrides the default).
    #[arg(long)]
    seed: Option<u64>,
    /// Bound on resampled generic choices.
    #[arg(long, default_value_t = 8)]
    retries: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Analyze even if the bounded-singularity hypothesis fails; defects are
    /// then raw differences and verdict tags are suppressed.
    #[arg(long)]
    force: bool,
}

impl RunArgs {
    fn spec(&self) -> FamilySpec {
        FamilySpec {
            mode: match self.mode {
                ModeArg::Fiber => FamilyMode::Fiber,
                ModeArg::General => FamilyMode::General,
            },
            expression: self.poly.clone(),
            space_vars: self
                .vars
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
            parameter: self.param.trim().to_string(),
        }
    }

    fn options(&self) -> Result<AnalysisOptions, String> {
        let mut at = Vec::new();
        for a in &self.at {
            match parse_rational(a) {
                Ok(c) => at.push(c),
                Err(e) => return Err(format!("invalid --at value `{a}`: {e}")),
            }
        }
        let seed = match self.seed {
            Some(s) => s,
            None => match std::env::var(SEED_ENV) {
                Ok(v) => v
                    .parse::<u64>()
                    .map_err(|_| format!("invalid {SEED_ENV} value `{v}`"))?,
                Err(_) => 0,
            },
        };
        Ok(AnalysisOptions {
            seed,
            retry_limit: self.retries,
            at,
            force: self.force,
        })
    }
}

fn exit_code(err: &AnalysisError) -> i32 {
    match err {
        AnalysisError::Parse(_)
        | AnalysisError::ParameterCount
        | AnalysisError::ConstantInSpace => 1,
        AnalysisError::HypothesisFailed(_) | AnalysisError::NonSquarefreeFamily => 2,
        AnalysisError::RetriesExhausted(_) | AnalysisError::Genericity(_) => 3,
        _ => 4,
    }
}

fn emit_error(err: &AnalysisError, format: FormatArg) -> i32 {
    let code = exit_code(err);
    match format {
        FormatArg::Text => eprintln!("error: {err}"),
        FormatArg::Json => {
            let obj = serde_json::json!({
                "error": { "code": code, "message": err.to_string() }
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
    }
    code
}

fn render(report: &AnalysisReport, command: &Command, format: FormatArg) -> String {
    match format {
        FormatArg::Json => report.to_json(),
        FormatArg::Text => match command {
            Command::Analyze(_) => report.to_text(),
            Command::Gamma(args) => {
                let mut s = String::new();
                for lvl in report.profile.levels.iter().rev() {
                    s.push_str(&format!(
                        "gamma^{} generic = {}\n",
                        lvl.level, lvl.generic_value
                    ));
                    for e in lvl.entries.iter().filter(|e| e.defect != 0) {
                        s.push_str(&format!(
                            "gamma^{} at roots of {} = {} (defect {})\n",
                            lvl.level, e.min_poly, e.per_root, e.defect
                        ));
                    }
                }
                for a in &args.at {
                    if let Ok(c) = parse_rational(a) {
                        let gamma: Vec<String> = report
                            .gamma_vector_at(&c)
                            .iter()
                            .map(|g| g.to_string())
                            .collect();
                        s.push_str(&format!("gamma at {c}: [{}]\n", gamma.join(", ")));
                    }
                }
                s
            }
            Command::Atypical(_) => {
                let atypical = report.atypical_set();
                if atypical.is_empty() {
                    "atypical set: empty\n".to_string()
                } else {
                    format!("atypical set: {{ {} }}\n", atypical.join(", "))
                }
            }
            Command::Euler(args) => {
                let requested: Vec<_> =
                    args.at.iter().filter_map(|a| parse_rational(a).ok()).collect();
                let mut s = String::new();
                for f in report
                    .fibers
                    .iter()
                    .filter(|f| requested.is_empty() || requested.contains(&f.c))
                {
                    let cells: Vec<String> = f.cells.iter().map(|x| x.to_string()).collect();
                    s.push_str(&format!(
                        "fiber c = {}: mu = {}, chi = {}, cells = [{}]{}\n",
                        f.c,
                        f.mu,
                        f.chi,
                        cells.join(", "),
                        if f.singular { " (singular)" } else { "" }
                    ));
                }
                s
            }
        },
    }
}

/// Run the CLI against explicit arguments; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version through errors with success status
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let args = match &cli.command {
        Command::Analyze(a) | Command::Gamma(a) | Command::Atypical(a) | Command::Euler(a) => a,
    };
    let format = args.format;
    let opts = match args.options() {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let spec = args.spec();
    match analyze(&spec, &opts) {
        Ok(report) => {
            print!("{}", render(&report, &cli.command, format));
            0
        }
        Err(e) => emit_error(&e, format),
    }
}

/// Entry point for the binary.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}
