//! `sympl` — JSON command line for the exact symplectic classification
//! library.
//!
//! Every command reads JSON from `--in <path>` or standard input, writes one
//! JSON report to standard output, and encodes all rationals as decimal-free
//! `"p/q"` strings. Exit codes: `0` success, `2` bad input, `3` precondition
//! violation (singular / degenerate / dimension), `4` internal verification
//! failure (an exact identity broke, which is always a bug).

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use symplectic_moduli::error::Error;
use symplectic_moduli::forms::cocycle_space;
use symplectic_moduli::lie::{Family, LieAlgebra};
use symplectic_moduli::matrix::Matrix;
use symplectic_moduli::moduli::{classify_symplectic, lagrangian_ideal, milnor_frame, reduce_heis, reduce_rh};
use symplectic_moduli::subspaces::{predicates, Subspace, SubspaceFlags};
use symplectic_moduli::suites::{run_all, SuiteConfig, SuiteReport};
use symplectic_moduli::symplectic::SymplecticContext;
use symplectic_moduli::TwoForm;

#[derive(Parser)]
#[command(name = "sympl", version, about = "Exact classification of left-invariant symplectic structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symplectic QR decomposition of a nonsingular matrix (JSON matrix input).
    Decompose {
        /// Input file; standard input when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Double-coset reduction of a matrix to its family representative.
    Reduce {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Closedness verdict for a nondegenerate 2-form (JSON form input).
    Classify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Basis and dimension of the cocycle space Z^2.
    Cocycles {
        /// Named family; otherwise the input must be an algebra JSON.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Milnor frame of a nondegenerate 2-form (JSON form input).
    MilnorFrame {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Lagrangian ideal carried by a closed form's canonical frame.
    Lagrangian {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Run the randomized verification suites and summarize pass/fail.
    Verify {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Base seed; reports are byte-identical for identical requests.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Per-size trial count; defaults to the acceptance volumes.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Serialize)]
struct DecomposeReport {
    n: usize,
    s: Matrix,
    t: Matrix,
    product: Matrix,
    verified: bool,
}

#[derive(Serialize)]
struct CocyclesReport {
    dimension: usize,
    basis: Vec<TwoForm>,
}

#[derive(Serialize)]
struct LagrangianReport {
    subspace: Subspace,
    predicates: SubspaceFlags,
}

#[derive(Serialize)]
struct VerifyReport {
    seed: u64,
    suites: Vec<SuiteReport>,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify_exit(&err))
        }
    }
}

fn classify_exit(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::ShapeMismatch(_)
        | Error::NotSkewSymmetric
        | Error::NotSymmetric
        | Error::NotPermutation
        | Error::NotIndependent => 2,
        Error::SingularMatrix
        | Error::DegenerateForm
        | Error::InvalidDimension(_)
        | Error::UnsupportedFamily
        | Error::NotClosedProfile => 3,
        Error::Verification(_) => 4,
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Decompose { input } => {
            let m: Matrix = read_json(input.as_deref())?;
            if !m.is_square() || m.rows() == 0 || !m.rows().is_multiple_of(2) {
                return Err(Error::ShapeMismatch(format!(
                    "decompose needs a square matrix of even size, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            let n = m.rows() / 2;
            let ctx = SymplecticContext::new(n)?;
            let qr = ctx.symplectic_qr(&m)?;
            emit(&DecomposeReport {
                n,
                s: qr.s,
                t: qr.t,
                product: qr.product,
                verified: true,
            })
        }
        Command::Reduce { family, n, input } => {
            let family = Family::parse(&family)?;
            let g: Matrix = read_json(input.as_deref())?;
            let witness = match family {
                Family::Rh => reduce_rh(n, &g)?,
                Family::Heis => reduce_heis(n, &g)?,
                Family::Generic => return Err(Error::UnsupportedFamily),
            };
            emit(&witness)
        }
        Command::Classify { family, n, input } => {
            let family = Family::parse(&family)?;
            let w: TwoForm = read_json(input.as_deref())?;
            let verdict = classify_symplectic(family, n, &w)?;
            emit(&verdict)
        }
        Command::Cocycles { family, n, input } => {
            let alg = match (family, n) {
                (Some(f), Some(n)) => LieAlgebra::family(Family::parse(&f)?, n)?,
                (None, None) => read_json(input.as_deref())?,
                _ => {
                    return Err(Error::Parse(
                        "cocycles needs either --family with --n, or an algebra on input".into(),
                    ))
                }
            };
            let basis = cocycle_space(&alg);
            emit(&CocyclesReport {
                dimension: basis.len(),
                basis,
            })
        }
        Command::MilnorFrame { family, n, input } => {
            let family = Family::parse(&family)?;
            let w: TwoForm = read_json(input.as_deref())?;
            let frame = milnor_frame(family, n, &w)?;
            emit(&frame)
        }
        Command::Lagrangian { family, n, input } => {
            let family = Family::parse(&family)?;
            let w: TwoForm = read_json(input.as_deref())?;
            let frame = milnor_frame(family, n, &w)?;
            let subspace = lagrangian_ideal(family, n, &frame)?;
            let alg = LieAlgebra::family(family, n)?;
            let flags = predicates(&alg, &w, &subspace)?;
            emit(&LagrangianReport {
                subspace,
                predicates: flags,
            })
        }
        Command::Verify {
            family,
            n,
            seed,
            trials,
        } => {
            let family = family.map(|f| Family::parse(&f)).transpose()?;
            let cfg = SuiteConfig {
                seed,
                trials,
                family,
                n,
            };
            let suites = run_all(&cfg);
            let ok = suites.iter().all(SuiteReport::ok);
            emit(&VerifyReport { seed, suites, ok })?;
            if ok {
                Ok(())
            } else {
                // a failed identity in the verification bundle is a defect
                Err(Error::Verification("verification suite reported failures".into()))
            }
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: Option<&std::path::Path>) -> Result<T, Error> {
    let text = match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON input: {e}")))
}

fn emit<T: Serialize>(report: &T) -> Result<(), Error> {
    let line = serde_json::to_string(report)
        .map_err(|e| Error::Verification(format!("report serialization failed: {e}")))?;
    println!("{line}");
    Ok(())
}
