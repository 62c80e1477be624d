use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use hyperq::io::parse;
use hyperq::random::generate_file;
use hyperq::report::{analyze, power_report, spectrum_report, to_json};
use hyperq::verify::{run_suites, VerifyConfig};
use hyperq::{Hypergraph, PowerParams, Tolerances64};

#[derive(Debug, Parser)]
#[command(name = "hyperq", version, about = "Signless Laplacian spectra of k-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Relative tolerance below which an eigenvalue counts as zero
    #[arg(long, global = true)]
    tol_zero: Option<f64>,

    /// Relative tolerance for grouping equal eigenvalues
    #[arg(long, global = true)]
    tol_group: Option<f64>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues of Q with multiplicities
    Spectrum {
        file: PathBuf,
        /// Also print the exact characteristic polynomial (n <= 16)
        #[arg(long)]
        exact_charpoly: bool,
    },
    /// Full structural report; exits 1 if any internal check fails
    Analyze {
        file: PathBuf,
        #[arg(long)]
        exact_charpoly: bool,
    },
    /// Build the power hypergraph H^r_s and predict its spectrum
    Power {
        file: PathBuf,
        #[arg(short, long)]
        s: usize,
        #[arg(short, long)]
        r: usize,
        /// Compare the prediction with a direct eigendecomposition
        #[arg(long)]
        verify: bool,
    },
    /// Sample m distinct k-subsets of n vertices
    Gen {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the randomized property suites
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Largest vertex count of a random instance
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Uniformities to sample from
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        ks: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn tolerances(c: &Common) -> Tolerances64 {
    let mut tol = Tolerances64::default();
    if let Some(z) = c.tol_zero {
        tol = tol.with_zero(z);
    }
    if let Some(g) = c.tol_group {
        tol = tol.with_group(g);
    }
    tol
}

fn read(path: &Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(c: &Common, text: &str) -> Result<()> {
    match &c.json_out {
        Some(p) => std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let tol = tolerances(&cli.common);
    let c = &cli.common;
    match cli.command {
        Command::Spectrum { file, exact_charpoly } => {
            let h = read(&file)?;
            emit(c, &to_json(&spectrum_report(&h, &tol, exact_charpoly)?))?;
        }
        Command::Analyze { file, exact_charpoly } => {
            let h = read(&file)?;
            let report = analyze(&h, &tol, exact_charpoly)?;
            emit(c, &to_json(&report))?;
            if let Some(name) = report.first_failed() {
                eprintln!("assertion failed: {name}");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Power { file, s, r, verify } => {
            let h = read(&file)?;
            let report = power_report(&h, PowerParams::new(s, r), &tol, verify)?;
            emit(c, &to_json(&report))?;
            if report.verified == Some(false) {
                eprintln!("assertion failed: power-spectrum");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen { k, n, m, seed } => {
            let text = generate_file(k, n, m, seed)?;
            match &c.json_out {
                Some(p) => std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Verify { trials, n_max, ks, seed } => {
            if ks.is_empty() || ks.iter().any(|&k| k < 2) {
                bail!("uniformities must be at least 2");
            }
            if ks.iter().any(|&k| n_max < k) {
                bail!("--n-max must be at least every k");
            }
            let summary = run_suites(&VerifyConfig {
                trials,
                n_max,
                ks,
                seed,
                tol,
            });
            emit(c, &to_json(&summary))?;
            if !summary.all_passed {
                let first = summary.suites.iter().find(|s| s.failed > 0).map(|s| s.name);
                eprintln!("suite failed: {}", first.unwrap_or("?"));
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
