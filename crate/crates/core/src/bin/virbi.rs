use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use virbi::algebra::MapAlgebra;
use virbi::commands::{self, Config, Output, WitnessQuery};
use virbi::error::Result;
use virbi::suites::DEFAULT_SEED;

/// Exact computations in loop and map Virasoro algebras.
#[derive(Parser, Debug)]
#[command(name = "virbi", version)]
struct Cli {
    /// Number of Laurent variables in the coefficient algebra.
    #[arg(long, global = true, conflicts_with = "table")]
    k: Option<usize>,
    /// Coefficient algebra given by a structure-table JSON file.
    #[arg(long, global = true)]
    table: Option<PathBuf>,
    /// Degree set for sampling and witness search, e.g. "-1,-1/2,0,1/2,1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Exponent bound for sampling and search windows.
    #[arg(long, global = true, default_value_t = 2)]
    exp_bound: i64,
    #[arg(long, global = true, env = "VIRBI_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON reports.
    #[arg(long, global = true)]
    json: bool,
    /// Trial count override for suites.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Worker threads for suites (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of two elements.
    Bracket { x: String, y: String },
    /// Diagonal action of an element on a two- or three-fold tensor.
    Act { a: String, w: String },
    /// The classical Yang-Baxter element c(r).
    Cybe { r: String },
    /// The modified Yang-Baxter residual x·c(r).
    Mybe { r: String, x: String },
    /// The co-Jacobi residual of the cobracket x ↦ x·r.
    Cojacobi { r: String, x: String },
    /// Certifies the coboundary bialgebra of r on random samples.
    Certify {
        r: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Checks the cocycle condition of a derivation table.
    CocycleCheck {
        #[arg(value_name = "TABLE")]
        file: PathBuf,
    },
    /// Solves x·v = D(x) for a derivation table, or certifies that no v exists.
    InnerSolve {
        #[arg(value_name = "TABLE")]
        file: PathBuf,
    },
    /// Searches for a skewness or annihilator witness.
    #[command(group(ArgGroup::new("query").required(true)))]
    Witness {
        #[arg(long, group = "query", allow_hyphen_values = true)]
        skew: Option<String>,
        #[arg(long, group = "query", allow_hyphen_values = true)]
        annihilator: Option<String>,
    },
    /// Runs a named property suite.
    Suite { name: String },
}

fn config(cli: &Cli) -> Result<Config> {
    let algebra = match (&cli.table, cli.k) {
        (Some(path), _) => MapAlgebra::new(commands::load_table(path)?),
        (None, k) => MapAlgebra::laurent(k.unwrap_or(1)),
    };
    let gamma = cli.gamma.as_deref().map(commands::parse_gamma).transpose()?;
    let cfg = Config {
        algebra,
        gamma,
        exp_bound: cli.exp_bound,
        seed: cli.seed,
        json: cli.json,
        trials: cli.trials,
        threads: cli.threads,
    };
    cfg.window()?;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<Output> {
    let cfg = config(cli)?;
    match &cli.command {
        Command::Bracket { x, y } => commands::cmd_bracket(&cfg, x, y),
        Command::Act { a, w } => commands::cmd_act(&cfg, a, w),
        Command::Cybe { r } => commands::cmd_cybe(&cfg, r),
        Command::Mybe { r, x } => commands::cmd_mybe(&cfg, r, x),
        Command::Cojacobi { r, x } => commands::cmd_cojacobi(&cfg, r, x),
        Command::Certify { r, samples } => commands::cmd_certify(&cfg, r, *samples),
        Command::CocycleCheck { file } => commands::cmd_cocycle_check(&cfg, file),
        Command::InnerSolve { file } => commands::cmd_inner_solve(&cfg, file),
        Command::Witness { skew, annihilator } => {
            let query = match (skew, annihilator) {
                (Some(r), _) => WitnessQuery::Skew(r),
                (None, Some(c)) => WitnessQuery::Annihilator(c),
                (None, None) => unreachable!("clap requires one query"),
            };
            commands::cmd_witness(&cfg, query)
        }
        Command::Suite { name } => commands::cmd_suite(&cfg, name, cli.k.is_some() || cli.table.is_some()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("virbi: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
