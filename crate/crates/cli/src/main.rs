//! `fb`: Burnside rings of finite groups and fusion systems from the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use burnside::acceptance::Suite;
use burnside::group::DEFAULT_ORDER_CAP;
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Marks,
    Lattice,
    Classes,
    Local,
    Essentials,
    StableBasis,
    ReehBasis,
    Units,
    StableUnits,
    MaxUnits,
    ClassifyMaximals,
    Star,
    Transfer,
    Witness,
    NormalizerReport,
    BoucCheck,
    Verify,
}

impl Verb {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "fb", version, about = "Burnside rings of finite groups and of fusion systems")]
pub struct Args {
    #[arg(value_enum)]
    verb: Verb,
    /// Group descriptor: `catalog:<name>`, inline JSON, or a file path.
    #[arg(long)]
    pub group: Option<String>,
    /// Fusion descriptor: `frobenius:<catalog>:<p>`, `trivial:<catalog>`, inline JSON, or a file path.
    #[arg(long)]
    pub fusion: Option<String>,
    /// Subgroup class, by label (e.g. `V4#1`) or index.
    #[arg(long)]
    pub subgroup: Option<String>,
    /// Element of B(S): comma-separated coefficients by class, or a class label for [S/Q].
    #[arg(long)]
    pub element: Option<String>,
    /// Element of B(G) for `star`, in the same syntax.
    #[arg(long = "g-element")]
    pub g_element: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest group order accepted.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    #[arg(long, default_value = "all", value_parser = ["paper-examples", "properties", "all"])]
    pub suite: String,
    /// Corrupt the marks table of V4 inside `verify`.
    #[arg(long, hide = true)]
    pub tamper: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(burnside::Error),
}

impl From<burnside::Error> for CliError {
    fn from(e: burnside::Error) -> Self {
        CliError::Compute(e)
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let (result, passed) = if args.verb == Verb::Verify {
        let suite = Suite::parse(&args.suite).expect("validated by clap");
        let (r, ok) = commands::verify(&args, suite);
        (Ok(r), ok)
    } else {
        (commands::run(args.verb, &args), true)
    };
    let code = match result {
        Ok(report) => {
            let text = match args.format {
                Format::Tsv => report.tsv(),
                Format::Json => report.json(),
            };
            let _ = std::io::stdout().write_all(text.as_bytes());
            if passed {
                0
            } else {
                1
            }
        }
        Err(CliError::Usage(m)) => {
            eprintln!("fb: {m}");
            2
        }
        Err(CliError::Compute(e)) => {
            eprintln!("fb: {e}");
            1
        }
    };
    eprintln!("elapsed\t{:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
