//! `cafcon`: concurrence checking for claim-augmented argumentation
//! frameworks.
//!
//! Exit codes:
//!
//! | code | meaning                                                   |
//! |------|-----------------------------------------------------------|
//! | 0    | success; for `concurrence`, the CAF is concurrent          |
//! | 1    | usage, I/O, parse or capacity error                        |
//! | 2    | internal error, including engine disagreement              |
//! | 3    | `reduce`: the formula has a tautological clause            |
//! | 4    | `verify-reduction`: a check failed                         |
//! | 5    | `fuzz`: an invariant was violated                          |
//! | 10   | `concurrence`: the CAF is not concurrent                   |

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use caf_core::cnf::parse_dimacs;
use caf_core::encoding::{encode_nonconcurrence, export_encoding_dimacs, is_concurrent_sat};
use caf_core::fuzz::{run_indices, FuzzConfig};
use caf_core::io::{emit_caf, parse_caf};
use caf_core::reduction::{reduce_unsat, verify_reduction};
use caf_core::semantics::{
    claim_level_naive, inherited_naive, is_concurrent_brute, naive_extensions, verify_witness,
};
use caf_core::{Caf, ConcurrenceVerdict, Error, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_ERROR: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_TAUTOLOGY: u8 = 3;
const EXIT_VERIFY: u8 = 4;
const EXIT_FUZZ: u8 = 5;
const EXIT_NOT_CONCURRENT: u8 = 10;

#[derive(Parser, Debug)]
#[command(name = "cafcon", version, about)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Line-oriented `key value` output.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct Caps {
    /// Cap on arguments for naive-extension enumeration.
    #[arg(long, env = "CAF_MAX_ARGS", value_parser = clap::value_parser!(u64).range(1..))]
    max_args: Option<u64>,

    /// Cap on variables for the exhaustive SAT oracle.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=62))]
    max_vars: Option<u64>,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            max_args: self
                .max_args
                .map_or(Limits::DEFAULT_MAX_ARGS, |v| v as usize),
            max_vars: self
                .max_vars
                .map_or(Limits::DEFAULT_MAX_VARS, |v| v as usize),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List naive extensions or one of their claim-level liftings.
    Extensions {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Inherited)]
        mode: Mode,
        #[command(flatten)]
        caps: Caps,
    },
    /// Decide whether inherited and claim-level naive semantics coincide.
    Concurrence {
        path: PathBuf,
        /// Defaults to `both` when the CAF is within the argument cap, `sat` otherwise.
        #[arg(long, value_enum)]
        engine: Option<Engine>,
        /// Print the witness pair in machine mode too.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Build the CAF for a DIMACS formula.
    Reduce {
        cnf: PathBuf,
        /// Output file; the CAF goes to stdout when omitted.
        out: Option<PathBuf>,
    },
    /// Reduce a DIMACS formula and check the construction's properties.
    VerifyReduction {
        cnf: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Write the non-concurrence witness encoding of a CAF as DIMACS.
    Encode { path: PathBuf },
    /// Cross-check all engines on seeded random CAFs.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Largest generated CAF.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(0..=20))]
        max_args: u64,
        #[arg(long, default_value_t = 6)]
        max_claims: usize,
        /// Replay a single instance of the run.
        #[arg(long)]
        instance: Option<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    /// Argument-level naive extensions.
    Arguments,
    Inherited,
    ClaimLevel,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    Brute,
    Sat,
    Both,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Sat => "sat",
            Engine::Both => "both",
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => EXIT_INTERNAL,
            Error::TautologicalClause { .. } => EXIT_TAUTOLOGY,
            _ => EXIT_ERROR,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn load_caf(path: &Path) -> Result<Caf, Failure> {
    parse_caf(&read(path)?)
        .map_err(|e| Failure::new(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn cmd_extensions(g: &Global, caps: Caps, path: &Path, mode: Mode) -> CmdResult {
    let caf = load_caf(path)?;
    let limits = caps.limits();
    let lines: Vec<String> = match mode {
        Mode::Arguments => naive_extensions(caf.af(), &limits)?
            .iter()
            .map(|e| caf.format_extension(e))
            .collect(),
        Mode::Inherited => inherited_naive(&caf, &limits)?
            .iter()
            .map(|s| caf.format_claim_set(s))
            .collect(),
        Mode::ClaimLevel => claim_level_naive(&caf, &limits)?
            .iter()
            .map(|s| caf.format_claim_set(s))
            .collect(),
    };
    for line in &lines {
        if g.machine {
            println!("extension {line}");
        } else {
            println!("{line}");
        }
    }
    if g.machine {
        println!("count {}", lines.len());
    }
    Ok(0)
}

fn cmd_concurrence(
    g: &Global,
    caps: Caps,
    path: &Path,
    engine: Option<Engine>,
    witness: bool,
) -> CmdResult {
    let caf = load_caf(path)?;
    let limits = caps.limits();
    let engine = engine.unwrap_or(if caf.n_args() <= limits.max_args {
        Engine::Both
    } else {
        Engine::Sat
    });
    let verdict = match engine {
        Engine::Brute => is_concurrent_brute(&caf, &limits)?,
        Engine::Sat => is_concurrent_sat(&caf)?,
        Engine::Both => {
            let brute = is_concurrent_brute(&caf, &limits)?;
            let sat = is_concurrent_sat(&caf)?;
            if brute.is_concurrent() != sat.is_concurrent() {
                return Err(Failure::new(
                    EXIT_INTERNAL,
                    format!(
                        "engines disagree: brute says {}, sat says {}",
                        verdict_word(&brute),
                        verdict_word(&sat)
                    ),
                ));
            }
            brute
        }
    };
    if let Some(w) = verdict.witness() {
        verify_witness(&caf, w)
            .map_err(|e| Failure::new(EXIT_INTERNAL, format!("witness rejected: {e}")))?;
    }

    if g.machine {
        println!("verdict {}", verdict_word(&verdict));
        println!("engine {}", engine.name());
    } else {
        println!("{}", verdict_word(&verdict));
    }
    if let Some(w) = verdict.witness() {
        let (e, gset) = (&w.smaller, &w.larger);
        let (ce, cg) = (caf.claim_set(e), caf.claim_set(gset));
        if g.machine {
            if witness {
                println!("witness-e {}", caf.format_extension(e));
                println!("witness-g {}", caf.format_extension(gset));
                println!("claims-e {}", caf.format_claim_set(&ce));
                println!("claims-g {}", caf.format_claim_set(&cg));
            }
        } else {
            println!(
                "E = {} with claims {}",
                caf.format_extension(e),
                caf.format_claim_set(&ce)
            );
            println!(
                "G = {} with claims {}",
                caf.format_extension(gset),
                caf.format_claim_set(&cg)
            );
        }
        return Ok(EXIT_NOT_CONCURRENT);
    }
    Ok(0)
}

fn verdict_word(v: &ConcurrenceVerdict) -> &'static str {
    if v.is_concurrent() {
        "concurrent"
    } else {
        "not-concurrent"
    }
}

fn load_cnf(path: &Path) -> Result<caf_core::cnf::CnfFormula, Failure> {
    parse_dimacs(&read(path)?)
        .map_err(|e| Failure::new(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn cmd_reduce(g: &Global, cnf: &Path, out: Option<&Path>) -> CmdResult {
    let formula = load_cnf(cnf)?;
    let art = reduce_unsat(&formula)?;
    let caf = art.caf();
    let doc = emit_caf(caf);
    let summary = format!(
        "{} arguments, {} attacks",
        caf.n_args(),
        caf.af().n_attacks()
    );
    match out {
        Some(p) => {
            fs::write(p, doc)
                .map_err(|e| Failure::new(EXIT_ERROR, format!("{}: {e}", p.display())))?;
            if g.machine {
                println!("arguments {}", caf.n_args());
                println!("attacks {}", caf.af().n_attacks());
            } else {
                println!("{summary}");
            }
        }
        None => {
            print!("{doc}");
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

fn cmd_verify_reduction(g: &Global, caps: Caps, cnf: &Path) -> CmdResult {
    let formula = load_cnf(cnf)?;
    let art = reduce_unsat(&formula)?;
    let report = verify_reduction(&art, &formula, &caps.limits())?;
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        if g.machine {
            println!("{} {}", check.name, status.to_lowercase());
        } else {
            println!("{status} {}: {}", check.name, check.detail);
        }
    }
    Ok(if report.all_passed() { 0 } else { EXIT_VERIFY })
}

fn cmd_encode(path: &Path) -> CmdResult {
    let caf = load_caf(path)?;
    print!(
        "{}",
        export_encoding_dimacs(&encode_nonconcurrence(&caf), &caf)
    );
    Ok(0)
}

fn cmd_fuzz(g: &Global, cfg: FuzzConfig, instance: Option<u64>) -> CmdResult {
    let limits = Limits::default();
    let report = match instance {
        Some(i) => run_indices(&cfg, &limits, i..i + 1),
        None => run_indices(&cfg, &limits, 0..cfg.count),
    };
    let failed = report.failures.len();
    if g.machine {
        println!("seed {}", cfg.seed);
        println!("instances {}", report.instances);
        println!("concurrent {}", report.concurrent);
        println!("failures {failed}");
    } else {
        println!(
            "seed {}: {} instances, {} concurrent, {} failures",
            cfg.seed, report.instances, report.concurrent, failed
        );
    }
    for f in &report.failures {
        eprintln!(
            "instance {} violates {}: {}",
            f.index, f.invariant, f.detail
        );
        eprintln!(
            "  reproduce: cafcon fuzz --seed {} --max-args {} --max-claims {} --instance {}",
            cfg.seed, cfg.max_args, cfg.max_claims, f.index
        );
        for line in f.document.lines() {
            eprintln!("  | {line}");
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_FUZZ })
}

fn run(cli: Cli) -> CmdResult {
    let g = &cli.global;
    match cli.command {
        Command::Extensions { path, mode, caps } => cmd_extensions(g, caps, &path, mode),
        Command::Concurrence {
            path,
            engine,
            witness,
            caps,
        } => cmd_concurrence(g, caps, &path, engine, witness),
        Command::Reduce { cnf, out } => cmd_reduce(g, &cnf, out.as_deref()),
        Command::VerifyReduction { cnf, caps } => cmd_verify_reduction(g, caps, &cnf),
        Command::Encode { path } => cmd_encode(&path),
        Command::Fuzz {
            seed,
            count,
            max_args,
            max_claims,
            instance,
        } => {
            let cfg = FuzzConfig {
                seed,
                count,
                max_args: max_args as usize,
                max_claims,
            };
            cmd_fuzz(g, cfg, instance)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
