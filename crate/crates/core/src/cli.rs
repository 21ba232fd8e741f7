//! Command-line front end. Every subcommand reads JSON files and writes a
//! single JSON document; the exit code separates success (0), mathematical
//! refutation (1) and operational errors (2).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::dimcheck;
use crate::error::{Error, Result};
use crate::hyperb::{self, SamplerConfig, Verdict};
use crate::lax::{self, LaxTriple, Pencil};
use crate::matrix::SymMatrix;
use crate::poly::{Polynomial, Vector};
use crate::rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Refuted,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult { status: Status::Ok, payload, diagnostics: Vec::new() }
    }

    fn refuted(payload: Value, why: impl Into<String>) -> Self {
        CommandResult { status: Status::Refuted, payload, diagnostics: vec![why.into()] }
    }

    fn error(msg: impl Into<String>) -> Self {
        CommandResult { status: Status::Error, payload: Value::Null, diagnostics: vec![msg.into()] }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Refuted => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("command results always serialize")
    }
}

#[derive(Parser, Debug)]
#[command(name = "hypercone", about = "Hyperbolic polynomials, cones and determinantal representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sampled hyperbolicity test
    #[command(subcommand)]
    Hyperbolic(HyperbolicCmd),
    /// Hyperbolicity cone membership and convexity probing
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Sampled real zero test for polynomials on R^2
    #[command(subcommand)]
    Realzero(RealzeroCmd),
    /// Determinant expansion of a pencil
    #[command(subcommand)]
    Det(DetCmd),
    /// Verify determinantal certificates
    #[command(subcommand)]
    Lax(LaxCmd),
    /// Diagonal representation of a binary hyperbolic form
    #[command(subcommand)]
    Rep(RepCmd),
    /// Homogenization and certificate transport between R^2 and R^3
    #[command(subcommand)]
    Bridge(BridgeCmd),
    /// Lorentz counterexample for n > 3
    #[command(subcommand)]
    Counterexample(CounterexampleCmd),
    /// Dimension count for determinantal polynomials
    Dims {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
}

#[derive(Args, Debug)]
struct Sampling {
    #[arg(long, default_value_t = hyperb::DEFAULT_TRIALS)]
    trials: u32,
    #[arg(long, default_value_t = hyperb::DEFAULT_RADIUS)]
    radius: u32,
    #[arg(long, default_value_t = hyperb::DEFAULT_SEED)]
    seed: u64,
}

impl Sampling {
    fn config(&self) -> Result<SamplerConfig> {
        SamplerConfig::new(self.radius, self.trials, self.seed)
    }
}

#[derive(Subcommand, Debug)]
enum HyperbolicCmd {
    Check {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        dir: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Subcommand, Debug)]
enum ConeCmd {
    Member {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    Convexity {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        dir: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Subcommand, Debug)]
enum RealzeroCmd {
    Check {
        #[arg(long)]
        poly: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Subcommand, Debug)]
enum DetCmd {
    Expand {
        #[arg(long)]
        pencil: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum LaxCmd {
    /// `--poly F --pencil F`, or `--poly F --B F --C F` for the Lax form
    /// (three variables) or the real-zero form (two variables).
    Verify {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, conflicts_with_all = ["b", "c"], required_unless_present_all = ["b", "c"])]
        pencil: Option<PathBuf>,
        #[arg(long = "B", requires = "c")]
        b: Option<PathBuf>,
        #[arg(long = "C", requires = "b")]
        c: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    Bivariate {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value = "1/1000000")]
        width: String,
    },
}

#[derive(Subcommand, Debug)]
enum BridgeCmd {
    Homogenize {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    Dehomogenize {
        #[arg(long)]
        poly: PathBuf,
    },
    /// `--q F --B F --C F [--degree D]` lifts a real-zero certificate;
    /// `--p F --B F --C F` restricts a Lax certificate.
    Transport {
        #[arg(long, conflicts_with = "p", required_unless_present = "p")]
        q: Option<PathBuf>,
        #[arg(long)]
        p: Option<PathBuf>,
        #[arg(long = "B")]
        b: PathBuf,
        #[arg(long = "C")]
        c: PathBuf,
        /// Target degree for `--q`; defaults to max(deg q, size of B).
        #[arg(long, requires = "q")]
        degree: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum CounterexampleCmd {
    Refute {
        #[arg(long)]
        pencil: PathBuf,
    },
    Lorentz {
        #[arg(long)]
        n: usize,
    },
}

/// Parses `argv` (program name first) and runs the selected subcommand.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    CommandResult::ok(json!({ "help": e.to_string() }))
                }
                _ => CommandResult::error(e.to_string().trim_end().to_string()),
            };
        }
    };
    dispatch(cli.cmd).unwrap_or_else(|e| CommandResult::error(e.to_string()))
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types always serialize")
}

fn verdict_result(v: Verdict, what: &str) -> CommandResult {
    if v.is_pass() {
        CommandResult::ok(to_value(&v))
    } else {
        CommandResult::refuted(to_value(&v), format!("{what} refuted at witness {:?}", v.witness.as_ref().expect("refuted verdicts carry a witness")))
    }
}

fn dispatch(cmd: Command) -> Result<CommandResult> {
    Ok(match cmd {
        Command::Hyperbolic(HyperbolicCmd::Check { poly, dir, sampling }) => {
            let p: Polynomial = load(&poly)?;
            let e: Vector = load(&dir)?;
            verdict_result(hyperb::test_hyperbolic(&p, &e, &sampling.config()?)?, "hyperbolicity")
        }
        Command::Cone(ConeCmd::Member { poly, dir, point }) => {
            let p: Polynomial = load(&poly)?;
            let e: Vector = load(&dir)?;
            let w: Vector = load(&point)?;
            CommandResult::ok(json!({ "member": hyperb::cone_contains(&p, &e, &w)? }))
        }
        Command::Cone(ConeCmd::Convexity { poly, dir, sampling }) => {
            let p: Polynomial = load(&poly)?;
            let e: Vector = load(&dir)?;
            verdict_result(hyperb::cone_convexity_probe(&p, &e, &sampling.config()?)?, "convexity")
        }
        Command::Realzero(RealzeroCmd::Check { poly, sampling }) => {
            let q: Polynomial = load(&poly)?;
            verdict_result(hyperb::is_real_zero(&q, &sampling.config()?)?, "real zero property")
        }
        Command::Det(DetCmd::Expand { pencil }) => {
            let pencil: Pencil = load(&pencil)?;
            CommandResult::ok(to_value(&lax::expand_det(&pencil)))
        }
        Command::Lax(LaxCmd::Verify { poly, pencil, b, c }) => {
            let p: Polynomial = load(&poly)?;
            let (pencil, target) = match (pencil, b, c) {
                (Some(f), _, _) => (load::<Pencil>(&f)?, p.clone()),
                (None, Some(b), Some(c)) => {
                    let triple = LaxTriple::new(load::<SymMatrix>(&b)?, load::<SymMatrix>(&c)?)?;
                    let target = match p.nvars() {
                        2 => match p.homogenize(triple.dim()) {
                            Ok(h) => h,
                            Err(Error::DegreeTooSmall { .. }) => {
                                return Ok(CommandResult::refuted(
                                    json!({ "verified": false }),
                                    "degree exceeds matrix size",
                                ))
                            }
                            Err(e) => return Err(e),
                        },
                        _ => p.clone(),
                    };
                    (Pencil::lax(&triple), target)
                }
                _ => return Err(Error::InvalidArgument("need --pencil or both --B and --C".into())),
            };
            let verified = lax::verify_representation(&target, &pencil)?;
            let payload = json!({ "verified": verified, "expansion": to_value(&lax::expand_det(&pencil)) });
            if verified {
                CommandResult::ok(payload)
            } else {
                CommandResult::refuted(payload, "polynomial differs from the determinant expansion")
            }
        }
        Command::Rep(RepCmd::Bivariate { poly, width }) => {
            let p: Polynomial = load(&poly)?;
            let width = rational::parse(&width)?;
            CommandResult::ok(to_value(&lax::bivariate_representation(&p, &width)?))
        }
        Command::Bridge(BridgeCmd::Homogenize { poly, degree }) => {
            let q: Polynomial = load(&poly)?;
            CommandResult::ok(to_value(&q.homogenize(degree)?))
        }
        Command::Bridge(BridgeCmd::Dehomogenize { poly }) => {
            let p: Polynomial = load(&poly)?;
            CommandResult::ok(to_value(&p.dehomogenize()?))
        }
        Command::Bridge(BridgeCmd::Transport { q, p, b, c, degree }) => {
            let triple = LaxTriple::new(load(&b)?, load(&c)?)?;
            let (poly, triple) = match (q, p) {
                (Some(q), _) => {
                    let q: Polynomial = load(&q)?;
                    let deg = match degree {
                        Some(d) => d,
                        None => q.degree()?.max(triple.dim()),
                    };
                    lax::transport_rz_to_lax(&q, &triple, deg)?
                }
                (None, Some(p)) => lax::transport_lax_to_rz(&load(&p)?, &triple)?,
                (None, None) => return Err(Error::InvalidArgument("need --q or --p".into())),
            };
            CommandResult::ok(json!({ "polynomial": to_value(&poly), "triple": to_value(&triple) }))
        }
        Command::Counterexample(CounterexampleCmd::Refute { pencil }) => {
            let pencil: Pencil = load(&pencil)?;
            let w = dimcheck::refute_2x2_pencil(&pencil)?;
            let det_value = lax::expand_det(&pencil).eval(&w)?;
            let lorentz_value = dimcheck::lorentz_polynomial(pencil.n())?.eval(&w)?;
            CommandResult::ok(json!({
                "witness": to_value(&w)["entries"],
                "det_value": rational::to_string(&det_value),
                "lorentz_value": rational::to_string(&lorentz_value),
            }))
        }
        Command::Counterexample(CounterexampleCmd::Lorentz { n }) => {
            CommandResult::ok(to_value(&dimcheck::lorentz_polynomial(n)?))
        }
        Command::Dims { n, d } => CommandResult::ok(to_value(&dimcheck::dimension_report(n, d)?)),
    })
}
