use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use endocomm::Bounds;
use endocomm_cli::instance::{InstanceSpec, RingSpec};
use endocomm_cli::report::analyze;
use endocomm_cli::survey::{survey, write_survey};
use endocomm_cli::verify::{run_verify, VerifyOptions};
use endocomm_cli::CliError;

/// Endomorphism rings, centers and endo-commutativity of finite abelian groups.
#[derive(Parser)]
#[command(name = "endocomm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BoundFlags {
    /// Largest carrier order for endomorphism rings.
    #[arg(long, default_value_t = Bounds::default().carrier)]
    bound_carrier: u128,
    /// Largest carrier order for the extendability predicates.
    #[arg(long, default_value_t = Bounds::default().extendable)]
    bound_extendable: u128,
    /// Depth of the endomorphism tower.
    #[arg(long, default_value_t = 6)]
    depth: usize,
}

impl BoundFlags {
    fn bounds(&self) -> Bounds {
        Bounds { carrier: self.bound_carrier, extendable: self.bound_extendable, ..Bounds::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one instance file and print a JSON report.
    Analyze {
        spec: PathBuf,
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Tabulate every group of bounded order as CSV.
    Survey {
        #[arg(long)]
        max_order: u64,
        /// Z or Zn:<n>.
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Check every theorem suite over a corpus.
    Verify {
        #[arg(long)]
        max_order: u64,
        /// Z or Zn:<n>.
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Seed for the sampled three-fold direct sums.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt the endomorphism ring to exercise the harness.
        #[arg(long)]
        inject_mutant: bool,
        #[command(flatten)]
        bounds: BoundFlags,
    },
}

fn check_ceiling(max_order: u64, bounds: &Bounds) -> Result<(), CliError> {
    if max_order as u128 > bounds.carrier {
        return Err(endocomm::Error::BoundExceeded {
            what: "max order",
            size: max_order as u128,
            bound: bounds.carrier,
        }
        .into());
    }
    Ok(())
}

fn configure_workers() -> Result<(), CliError> {
    let Ok(v) = std::env::var("ENDOCOMM_WORKERS") else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("ENDOCOMM_WORKERS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_workers()?;
    let stdout = io::stdout();
    match cli.command {
        Command::Analyze { spec, bounds } => {
            let text = fs::read_to_string(&spec).map_err(|e| CliError::Io(format!("{}: {e}", spec.display())))?;
            let report = analyze(&InstanceSpec::from_json(&text)?, &bounds.bounds(), bounds.depth)?;
            writeln!(stdout.lock(), "{}", report.to_json())?;
            let failures = report.failures().len();
            if failures > 0 {
                return Err(CliError::Violation(failures));
            }
        }
        Command::Survey { max_order, ring, out, bounds } => {
            let b = bounds.bounds();
            check_ceiling(max_order, &b)?;
            let rows = survey(max_order, RingSpec::parse(&ring)?, &b, bounds.depth)?;
            match out {
                Some(path) => {
                    let f = fs::File::create(&path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    write_survey(&rows, io::BufWriter::new(f))?;
                }
                None => write_survey(&rows, stdout.lock())?,
            }
        }
        Command::Verify { max_order, ring, seed, inject_mutant, bounds } => {
            let b = bounds.bounds();
            check_ceiling(max_order, &b)?;
            let opts = VerifyOptions {
                max_order,
                ring: RingSpec::parse(&ring)?,
                bounds: b,
                depth: bounds.depth,
                seed,
                inject_mutant,
                ..VerifyOptions::default()
            };
            let summary = run_verify(&opts)?;
            write!(stdout.lock(), "{}", summary.render())?;
            if summary.violation_count() > 0 {
                return Err(CliError::Violation(summary.violation_count()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
