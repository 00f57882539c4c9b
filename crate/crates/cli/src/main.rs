//! `antipal`: searches, constructions and verifiers for antipalindromic
//! numbers.
//!
//! Exit status is 0 on success (including empty results), 1 on usage errors
//! and rejected inputs, 2 when a value leaves the 64-bit range.

mod commands;
mod numeric;
mod output;
mod parallel;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use numeric::{parse_inclusive, parse_u32, parse_u64};
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "antipal", version, about = "Searches and checks for antipalindromic numbers")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for scans. Output is identical for every value.
    #[arg(long, default_value_t = 1, value_parser = parse_workers, global = true)]
    pub workers: usize,
    /// Suppress progress messages on standard error.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

fn parse_workers(s: &str) -> Result<usize, String> {
    match parse_u64(s)? {
        0 => Err("at least one worker is required".into()),
        n if n > 1024 => Err("at most 1024 workers are supported".into()),
        n => Ok(n as usize),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the base-b expansion of m.
    Expand {
        #[arg(value_parser = parse_u64)]
        m: u64,
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
    },
    /// Test whether m is antipalindromic in base b.
    Check {
        #[arg(value_parser = parse_u64)]
        m: u64,
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
    },
    /// List antipalindromes in [from, below) in ascending order.
    Enumerate {
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
        #[arg(long, default_value = "1", value_parser = parse_u64)]
        from: u64,
        #[arg(long, value_parser = parse_u64)]
        below: u64,
    },
    /// Smallest antipalindrome strictly greater than m.
    Next {
        #[arg(value_parser = parse_u64)]
        m: u64,
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
    },
    /// Antipalindromic primes in [from, below).
    Primes {
        #[arg(long, short, default_value = "3", value_parser = parse_u64)]
        base: u64,
        #[arg(long, default_value = "1", value_parser = parse_u64)]
        from: u64,
        #[arg(long, value_parser = parse_u64)]
        below: u64,
        /// Print only the number of primes found.
        #[arg(long)]
        count: bool,
    },
    /// Antipalindromic k-th powers strictly below a limit.
    Powers {
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
        #[arg(long, short = 'k', value_parser = parse_u32)]
        exponent: u32,
        #[arg(long, value_parser = parse_u64)]
        limit: u64,
        /// Print only the number of powers found.
        #[arg(long)]
        count: bool,
    },
    /// Explicit constructions of antipalindromes.
    #[command(subcommand)]
    Construct(Construct),
    /// Every base in which m is antipalindromic.
    Multibase {
        #[arg(value_parser = parse_u64)]
        m: u64,
    },
    /// Numbers below a limit antipalindromic in two bases at once.
    Common {
        #[arg(long, value_parser = parse_u64)]
        b1: u64,
        #[arg(long, value_parser = parse_u64)]
        b2: u64,
        #[arg(long, value_parser = parse_u64)]
        limit: u64,
    },
    /// Sums of at most three antipalindromes.
    #[command(subcommand)]
    Sums(Sums),
    /// Count tables of antipalindromic powers in bases n^k, n^k+1, n^k+2.
    Tables(TablesArgs),
    /// Run the property suites; `all` runs every suite at its default bound.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        /// Scan bound for a single named suite.
        #[arg(long, value_parser = parse_u64)]
        limit: Option<u64>,
        /// List suite names and default bounds.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// (m*n)^k as a two-digit antipalindrome in base n^k + 1.
    Family {
        #[arg(long, value_parser = parse_u64)]
        n: u64,
        #[arg(long, short = 'k', value_parser = parse_u32)]
        k: u32,
        #[arg(long, value_parser = parse_u64)]
        m: u64,
    },
    /// [m(b-1)]^k for odd k, in a base at or above the bound.
    OddPower {
        #[arg(long, value_parser = parse_u64)]
        m: u64,
        #[arg(long, short = 'k', value_parser = parse_u32)]
        k: u32,
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
    },
    /// Two bases for a composite number.
    Composite {
        #[arg(value_parser = parse_u64)]
        a: u64,
    },
    /// n+1 bases for (2n)!.
    Factorial {
        #[arg(value_parser = parse_u64)]
        n: u64,
    },
    /// A number antipalindromic in base b and in a smaller second base.
    Paired {
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
    },
    /// A number antipalindromic in bases p+1 and q+1.
    Gcd {
        #[arg(long, value_parser = parse_u64)]
        p: u64,
        #[arg(long, value_parser = parse_u64)]
        q: u64,
    },
    /// Decide base-b antipalindromy from width-n blocks of the base b^n digits.
    Block {
        #[arg(value_parser = parse_u64)]
        m: u64,
        #[arg(long, short, value_parser = parse_u64)]
        base: u64,
        #[arg(long, value_parser = parse_u32)]
        block_len: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum Sums {
    /// Write n as a sum of at most `max_terms` antipalindromes.
    Decompose {
        #[arg(value_parser = parse_u64)]
        n: u64,
        #[arg(long, short, default_value = "3", value_parser = parse_u64)]
        base: u64,
        #[arg(long, default_value = "3", value_parser = parse_u64)]
        max_terms: u64,
    },
    /// List every n below the limit that needs more than three terms.
    Verify {
        #[arg(long, value_parser = parse_u64)]
        limit: u64,
        #[arg(long, short, default_value = "3", value_parser = parse_u64)]
        base: u64,
        /// Restrict to base-b palindromes.
        #[arg(long)]
        palindromes: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// k = 2, n in 20..25, limit 1e12.
    Squares,
    /// k = 4, n in 4..12, limit 1e15.
    Biquadrates,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(value_enum, required_unless_present = "exponent", conflicts_with = "exponent")]
    pub kind: Option<TableKind>,
    /// Exponent for a custom table; requires --n and --limit.
    #[arg(long, short = 'k', value_parser = parse_u32, requires_all = ["n", "limit"])]
    pub exponent: Option<u32>,
    /// Inclusive range of n, e.g. 20..25.
    #[arg(long, value_parser = parse_inclusive)]
    pub n: Option<RangeInclusive<u64>>,
    /// Count powers strictly below this value.
    #[arg(long, value_parser = parse_u64)]
    pub limit: Option<u64>,
    /// Base offsets added to n^k, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0,1,2", value_parser = parse_u64)]
    pub offsets: Vec<u64>,
}

#[derive(Debug)]
pub enum CliError {
    Lib(antipal::Error),
    Usage(String),
    Io(io::Error),
}

impl From<antipal::Error> for CliError {
    fn from(e: antipal::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = commands::run(&cli.global, cli.command, &mut out);
    let result = result.and_then(|()| out.flush().map_err(CliError::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(1)
        }
        Err(CliError::Lib(e)) if e.is_range_error() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}\n\nFor more information, try '--help'.");
            ExitCode::from(1)
        }
    }
}
