use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use repred::{emit_report, run_analysis, AnalysisInput, Error, Mode, PRational, ReportFormat};

/// Reduction of p-adic operator algebras and semisimplicity verdicts.
#[derive(Parser)]
#[command(name = "repred", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the analysis described by a JSON input file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Target p-adic precision of lifted idempotents (overrides the file).
        #[arg(long)]
        precision: Option<u32>,
        /// Maximum number of saturation steps (overrides the file).
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Compare the partitions of a set of characters of Z_p with congruence classes.
    Cluster {
        #[arg(long)]
        p: u64,
        /// Comma-separated rationals in 1 + pZ_(p), e.g. 1,5,9/5.
        #[arg(long, value_delimiter = ',', required = true)]
        chars: Vec<String>,
        #[arg(long)]
        max_level: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduce a Z_(p)-order given by an order-mode input file.
    OrderReduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn read_input(path: &PathBuf) -> Result<AnalysisInput, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    AnalysisInput::from_json(&text)
}

fn run(cli: Cli) -> Result<String, Error> {
    let (input, format) = match cli.command {
        Command::Analyze {
            file,
            format,
            precision,
            max_steps,
        } => {
            let mut input = read_input(&file)?;
            input.precision = precision.or(input.precision);
            input.max_steps = max_steps.or(input.max_steps);
            (input, format)
        }
        Command::Cluster {
            p,
            chars,
            max_level,
            format,
        } => {
            let chars = chars
                .iter()
                .map(|c| c.trim().parse::<PRational>())
                .collect::<Result<Vec<_>, _>>()?;
            let input = AnalysisInput {
                p,
                n: None,
                mode: Mode::Cluster,
                generators: None,
                v_lattice_basis: None,
                order_basis: None,
                chars: Some(chars),
                max_level: Some(max_level),
                precision: None,
                max_steps: None,
            };
            (input, format)
        }
        Command::OrderReduce { file, format } => {
            let input = read_input(&file)?;
            if input.mode != Mode::Order {
                return Err(Error::InvalidInput(format!(
                    "order-reduce expects an order-mode file, got {} mode",
                    input.mode.as_str()
                )));
            }
            (input, format)
        }
    };
    let out = run_analysis(&input)?;
    Ok(emit_report(&out, format.into()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 3 } else { 2 })
        }
    }
}
