use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wbasis::cli::{self, Format, RunConfig, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "wbasis", version, about = "Level-one t-analogs, W-algebra generators and the Brylinski filtration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lusztig polynomials of Lambda_0 - n delta next to the product side
    Lusztig(Common),
    /// Pass/fail per n for the level-one identity
    VerifyIdentity(Common),
    /// Compute or load the W-algebra generators
    Wgen {
        #[command(flatten)]
        common: Common,
        /// Compare kernel dimensions with the PBW count up to this degree
        #[arg(long)]
        check_degree: Option<usize>,
    },
    /// Graded dimensions of the Brylinski filtration on Z
    VerifyMain(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    rank: usize,
    #[arg(long, default_value_t = 3)]
    nmax: usize,
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Structured,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            rank: self.rank,
            n_max: self.nmax,
            d_max: self.dmax,
            cache: self.cache.clone(),
            jobs: self.jobs,
            format: match self.format {
                FormatArg::Table => Format::Table,
                FormatArg::Structured => Format::Structured,
            },
        }
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let (common, check_degree) = match &args.command {
        Command::Lusztig(c) | Command::VerifyIdentity(c) | Command::VerifyMain(c) => (c, None),
        Command::Wgen { common, check_degree } => (common, *check_degree),
    };
    let config = common.config();
    if let Err(msg) = config.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    let _ = rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build_global();
    let result = match &args.command {
        Command::Lusztig(_) => cli::cmd_lusztig(&config),
        Command::VerifyIdentity(_) => cli::cmd_verify_identity(&config),
        Command::Wgen { .. } => cli::cmd_wgen(&config, check_degree),
        Command::VerifyMain(_) => cli::cmd_verify_main(&config),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.render(config.format));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::EXIT_FAIL as u8)
        }
    }
}
