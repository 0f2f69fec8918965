use std::path::PathBuf;
use std::process::ExitCode;

use attainable_cli::{
    cmd_cantor, cmd_check, cmd_prime_powers, cmd_scan, cmd_spike, cmd_verify, exit_code, output_path, CliError, Output,
    Parity, EXIT_OK,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Fourier points of lattice-point measures on circles and the region they fill.
#[derive(Parser, Debug)]
#[command(name = "attainable", version, about)]
struct Cli {
    /// Write results here instead of stdout ("-" is stdout)
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Tolerance for region queries
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Seed for sampled checks and spike interior points
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ParityArg {
    Even,
    Odd,
    All,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
            ParityArg::All => Parity::All,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// CSV of (n, r2, x, y) for every sum of two squares n <= max-n
    Scan {
        #[arg(long)]
        max_n: u64,
        /// Keep square-free n only
        #[arg(long)]
        squarefree: bool,
    },
    /// CSV of (p, M, x, y) for split primes p and exponents M
    PrimePowers {
        #[arg(long)]
        max_exp: u32,
        #[arg(long)]
        max_prime: u64,
        #[arg(long, value_enum, default_value_t = ParityArg::All)]
        parity: ParityArg,
    },
    /// Classify a point; exit 0 attainable, 1 not, 2 invalid input
    #[command(allow_negative_numbers = true)]
    Check {
        x: f64,
        y: f64,
        /// Use the square-free region (no spikes)
        #[arg(long)]
        squarefree: bool,
    },
    /// CSV of the spike boundaries for index k plus interior samples
    Spike {
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Run the inequality checks: "all" or a single check name
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// CSV of Fourier coefficients of a Cantor-type measure
    Cantor {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 16)]
        k: usize,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let mut out = Output::open(output_path(&cli.output))?;
    let code = match cli.command {
        Command::Scan { max_n, squarefree } => cmd_scan(max_n, squarefree, &mut out).map(|_| EXIT_OK),
        Command::PrimePowers {
            max_exp,
            max_prime,
            parity,
        } => cmd_prime_powers(max_exp, max_prime, parity.into(), &mut out).map(|_| EXIT_OK),
        Command::Check { x, y, squarefree } => cmd_check(x, y, squarefree, cli.tol, &mut out),
        Command::Spike { k, samples } => cmd_spike(k, samples, cli.seed, &mut out).map(|_| EXIT_OK),
        Command::Verify { suite } => cmd_verify(&suite, cli.seed, &mut out),
        Command::Cantor { theta, level, k } => cmd_cantor(theta, level, k, &mut out).map(|_| EXIT_OK),
    }?;
    out.finish()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("attainable: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("attainable: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
