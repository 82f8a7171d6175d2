//! Command-line front end for liftlog.
//!
//! Every command yields a [`Report`]; [`run`] renders it and picks the exit
//! code (0 success, 1 usage error, 2 verification failure).

pub mod commands;
pub mod corpus;
pub mod encode;
pub mod error;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liftlog_core::closures::{DEFAULT_N_MAX, DEFAULT_WINDOW};
use liftlog_core::derivation::{GradedOptions, DEFAULT_MAX_DEGREE};

pub use error::{CliError, CliResult};
pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

/// Caps degree boxes when set.
pub const MAX_DEGREE_ENV: &str = "LIFTLOG_MAX_DEGREE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "liftlog", version, about = "Liftable derivations, closures and derivation modules of monomial ideals")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Run the independent oracles for the touched operations.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Seed for randomized probes during verification.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Extra degrees past the generation bound of graded computations.
    #[arg(long, default_value_t = 1, global = true)]
    pub box_margin: i64,
    /// Largest power tried by the Ratliff-Rush iteration.
    #[arg(long, default_value_t = DEFAULT_N_MAX, global = true)]
    pub n_max: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monomial ideal arithmetic.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Ratliff-Rush and integral closures.
    Closure {
        #[command(subcommand)]
        op: ClosureOp,
    },
    /// Newton polyhedron of an ideal.
    Newton {
        #[command(subcommand)]
        op: NewtonOp,
    },
    /// Derivation modules.
    Der {
        #[command(subcommand)]
        op: DerOp,
    },
    /// Liftable derivations along blow-ups and monomial charts.
    Lift {
        #[command(subcommand)]
        op: LiftOp,
    },
    /// Numerical semigroup rings.
    Sgr(SgrArgs),
    /// Run every bundled fixture with verification on.
    VerifyCorpus {
        /// Read fixtures from this directory instead of the bundled set.
        #[arg(long)]
        dir: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal with ring header, e.g. "ring x,y; x^2, y".
    #[arg(short = 'I', long = "ideal")]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub i: IdealArg,
    /// Second ideal, over the same ring; the ring header may be omitted.
    #[arg(short = 'J', long = "other")]
    pub j: String,
}

#[derive(Debug, Subcommand)]
pub enum IdealOp {
    /// Canonical form.
    Show(IdealArg),
    Sum(PairArgs),
    Product(PairArgs),
    /// `[I : J]`.
    Quotient(PairArgs),
    Intersect(PairArgs),
    Power {
        #[command(flatten)]
        i: IdealArg,
        #[arg(short = 'k', long)]
        k: u32,
    },
    Radical(IdealArg),
    Member {
        #[command(flatten)]
        i: IdealArg,
        /// Monomial such as "x^2*y".
        #[arg(long)]
        monomial: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClosureOp {
    Rr {
        #[command(flatten)]
        i: IdealArg,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    Integral(IdealArg),
}

#[derive(Debug, Subcommand)]
pub enum NewtonOp {
    /// Compact facets with their normals and right-hand sides.
    Facets(IdealArg),
}

#[derive(Debug, Subcommand)]
pub enum DerOp {
    /// `T(I)`, derivations preserving the ideal.
    Module(IdealArg),
    /// Closed form of `T(I)` for two-variable m-primary ideals.
    Staircase(IdealArg),
    /// Logarithmic derivations along a weight valuation.
    Log {
        #[command(flatten)]
        i: IdealArg,
        /// Comma-separated weight, e.g. "4,9".
        #[arg(short = 'w', long)]
        weight: String,
        /// Monomial map used to certify generators, e.g. "x=x; y=x^2*s".
        #[arg(long)]
        chart_map: Option<String>,
        /// Weight on the chart target for the valuation-ring check.
        #[arg(long)]
        target_weight: Option<String>,
        /// Derivation to test against the module.
        #[arg(long)]
        check: Option<String>,
    },
    /// Membership of a derivation in `T(I)`.
    Check {
        #[command(flatten)]
        i: IdealArg,
        #[arg(short = 'd', long)]
        derivation: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum LiftOp {
    /// Sandwich of closures around the derivations liftable to the blow-up.
    Blowup(IdealArg),
    /// Derivations liftable along a monomial chart.
    Chart {
        /// Bindings such as "y1=x1; y2=x1^2*x2".
        #[arg(long)]
        map: String,
        /// Comma-separated target variables cutting out the critical divisors.
        #[arg(long)]
        critical: String,
        /// Derivation of the source ring to test.
        #[arg(long)]
        check: Option<String>,
        /// Weight on the target for the valuation-ring check.
        #[arg(long)]
        target_weight: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct SgrArgs {
    /// Semigroup generators, e.g. "4,5,6,7".
    #[arg(long)]
    pub gens: String,
    #[command(subcommand)]
    pub op: SgrOp,
}

#[derive(Debug, Subcommand)]
pub enum SgrOp {
    Rr {
        /// Ideal shifts, e.g. "4,5".
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Derivation orders preserving an ideal, or the ring when no ideal is given.
    Tangent {
        #[arg(long)]
        ideal: Option<String>,
    },
    /// `[E : F]`.
    Quotient {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    Power {
        #[arg(long)]
        ideal: String,
        #[arg(short = 'k', long)]
        k: u32,
    },
    Regular,
}

/// Settings shared by all commands.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub opts: GradedOptions,
    pub n_max: usize,
    pub seed: u64,
    pub verify: bool,
}

impl Settings {
    pub fn from_cli(cli: &Cli) -> CliResult<Self> {
        let max_degree = match std::env::var(MAX_DEGREE_ENV) {
            Ok(v) => v
                .trim()
                .parse::<i64>()
                .ok()
                .filter(|&d| d > 0)
                .ok_or_else(|| error::usage(format!("{MAX_DEGREE_ENV} must be a positive integer, got `{v}`")))?,
            Err(_) => DEFAULT_MAX_DEGREE,
        };
        if cli.box_margin < 0 {
            return Err(error::usage("--box-margin must be nonnegative"));
        }
        Ok(Self {
            opts: GradedOptions {
                margin: cli.box_margin,
                max_degree,
            },
            n_max: cli.n_max,
            seed: cli.seed,
            verify: cli.verify,
        })
    }
}

/// What `main` prints and returns.
#[derive(Debug)]
pub struct Outcome {
    pub report: Option<Report>,
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    report: None,
                    stdout: text,
                    stderr: String::new(),
                    exit_code: EXIT_OK,
                },
                _ => Outcome {
                    report: None,
                    stdout: String::new(),
                    stderr: text,
                    exit_code: EXIT_USAGE,
                },
            };
        }
    };
    let result = Settings::from_cli(&cli).and_then(|s| commands::dispatch(&cli.command, s));
    match result {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            let exit_code = if report.verification_failed() { EXIT_VERIFY } else { EXIT_OK };
            Outcome {
                report: Some(report),
                stdout,
                stderr: String::new(),
                exit_code,
            }
        }
        Err(e) => Outcome {
            report: None,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            exit_code: EXIT_USAGE,
        },
    }
}
