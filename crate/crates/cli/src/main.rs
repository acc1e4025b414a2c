use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use defkt_core::dsl::ParseError;
use defkt_core::groups::GroupError;
use defkt_core::kdef::KdefError;
use defkt_core::monoid::{MonoidError, DEFAULT_SEARCH_BOUND};
use defkt_core::rep_monoid::RepMonoidError;
use defkt_core::variety::VarietyError;

mod commands;

/// Deformation K-theory and representation spaces of discrete groups.
#[derive(Parser, Debug)]
#[command(name = "defkt", version)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Highest homotopy degree reported.
    #[arg(long, global = true, default_value_t = 10)]
    pub max_degree: u32,
    /// Bound on the total exponent explored by monoid searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BOUND,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    /// Directory for cached character degrees (defaults to $DEFKT_CACHE).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Largest finite group order accepted.
    #[arg(long, global = true, default_value_t = 1024)]
    pub order_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shifts and homotopy ranks of the deformation K-theory of a group.
    Kdef { expr: String },
    /// Components of the space of n-dimensional unitary representations.
    Pi0 {
        expr: String,
        #[arg(long)]
        dim: u64,
    },
    /// K^0 as the group completion of the component monoid.
    K0 { expr: String },
    /// Class count and irreducible degrees of a finite group.
    Irreps { expr: String },
    /// Commutative monoids read from a file.
    Monoid {
        #[command(subcommand)]
        action: MonoidAction,
    },
    /// Polynomial system for a representation variety.
    Variety(VarietyArgs),
}

#[derive(Subcommand, Debug)]
pub enum MonoidAction {
    /// Group completion.
    Complete { file: PathBuf },
    /// Stable group-likeness, telescope components and equality tests.
    Check {
        file: PathBuf,
        /// Anchor element, e.g. `1,1,1` (default: sum of generators).
        #[arg(long)]
        anchor: Option<String>,
        /// Decide `a = b` in the monoid, given as `a=b`, e.g. `2,0=1,2`.
        #[arg(long)]
        equal: Option<String>,
        /// Stable inverse of an element of a free monoid.
        #[arg(long)]
        inverse: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct VarietyArgs {
    /// Presentation such as `<a, b | a^2, (ab)^3>`.
    pub presentation: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = FlavorArg::Unitary)]
    pub flavor: FlavorArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    #[arg(long)]
    pub full_redundant: bool,
    #[arg(long)]
    pub prefix_vars: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FlavorArg {
    Unitary,
    Gl,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Text,
    Json,
}

/// A leaf outside the scope of a command.
#[derive(Debug)]
pub struct Unsupported(pub String);

/// A decision procedure ran out of search bound.
#[derive(Debug)]
pub struct BoundExhausted(pub String);

impl std::fmt::Display for Unsupported {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Unsupported {}

impl std::fmt::Display for BoundExhausted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for BoundExhausted {}

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_BOUND: u8 = 4;

fn group_code(e: &GroupError) -> u8 {
    match e {
        GroupError::NotFinite(_) | GroupError::OrderExceedsCap { .. } | GroupError::DegreesUnavailable { .. } => {
            EXIT_UNSUPPORTED
        }
        GroupError::Io { .. } => EXIT_OTHER,
        _ => EXIT_PARSE,
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<ParseError>() || cause.is::<commands::Unparsable>() {
            return EXIT_PARSE;
        }
        if cause.is::<Unsupported>() {
            return EXIT_UNSUPPORTED;
        }
        if cause.is::<BoundExhausted>() {
            return EXIT_BOUND;
        }
        if let Some(e) = cause.downcast_ref::<GroupError>() {
            return group_code(e);
        }
        if let Some(e) = cause.downcast_ref::<KdefError>() {
            return match e {
                KdefError::Group(g) => group_code(g),
                _ => EXIT_UNSUPPORTED,
            };
        }
        if let Some(e) = cause.downcast_ref::<MonoidError>() {
            return match e {
                MonoidError::NotStablyGroupLike(defkt_core::Decision::Unknown) => EXIT_BOUND,
                MonoidError::NotStablyGroupLike(_) | MonoidError::NotFree | MonoidError::AnchorNotAllOnes => {
                    EXIT_UNSUPPORTED
                }
                _ => EXIT_PARSE,
            };
        }
        if let Some(e) = cause.downcast_ref::<VarietyError>() {
            return match e {
                VarietyError::TermCapExceeded { .. } => EXIT_BOUND,
                VarietyError::ZeroDimension => EXIT_PARSE,
                _ => EXIT_OTHER,
            };
        }
        if cause.is::<RepMonoidError>() {
            return EXIT_OTHER;
        }
    }
    EXIT_OTHER
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Kdef { expr } => commands::kdef(&expr, &cli.config),
        Command::Pi0 { expr, dim } => commands::pi0(&expr, dim, &cli.config),
        Command::K0 { expr } => commands::k0(&expr, &cli.config),
        Command::Irreps { expr } => commands::irreps(&expr, &cli.config),
        Command::Monoid { action } => commands::monoid(action, &cli.config),
        Command::Variety(args) => commands::variety(&args, &cli.config),
    };
    match result {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.status)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
