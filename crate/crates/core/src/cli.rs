//! Command-line surface. [`run`] returns the exit status and both output
//! streams so the whole contract can be tested in-process.
//!
//! | status | meaning |
//! |---|---|
//! | 0 | success (for `validate`: the groupoid is valid) |
//! | 1 | `validate` found axiom violations |
//! | 2 | socle refused because condition (LP) fails |
//! | 64 | malformed or invalid input, bad arguments |
//! | 65 | a size cap was exceeded |
//! | 70 | an internal cross-check disagreed |

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::SteinbergAlgebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::format::{
    to_pretty, CertificateJson, CrossCheckJson, ErrorJson, GraphSocleJson, LpRefusalJson, OracleCheckJson, OracleJson,
    SocleJson, ValidationJson,
};
use crate::graph::{self, DirectedGraph, OrbitSize};
use crate::groupoid::{self, FiniteGroupoid, RawGroupoid};
use crate::oracle::{oracle_is_semiprime, oracle_socle, oracle_socle_any};
use crate::socle::{check_condition_lp, is_minimal_left_ideal, minimal_ideal_generator, socle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_LP_REFUSED: i32 = 2;
pub const EXIT_MALFORMED: i32 = 64;
pub const EXIT_SIZE_CAP: i32 = 65;
pub const EXIT_MISMATCH: i32 = 70;

/// Primes always used by the `graph-socle --materialize` oracle check.
/// Past the enumeration cap the oracle falls back to witnessed minimal ideals.
const CROSS_CHECK_PRIMES: [u32; 2] = [2, 3];

#[derive(Debug, Parser)]
#[command(name = "steinberg", version, about = "Exact Steinberg algebras of finite groupoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the groupoid axioms and print a report.
    Validate { file: PathBuf },
    /// Socle and its matrix blocks (requires trivial isotropy everywhere).
    Socle {
        file: PathBuf,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Certified minimal left ideal generated at a unit.
    Minimal {
        file: PathBuf,
        #[arg(long)]
        unit: String,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Brute-force minimal ideals and socle over a prime field.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        field: FieldSpec,
        /// Also decide semiprimeness.
        #[arg(long)]
        semiprime: bool,
    },
    /// Line points and socle blocks of a directed graph's Leavitt path algebra.
    GraphSocle {
        file: PathBuf,
        /// Build the boundary-path groupoid (acyclic graphs) and cross-check
        /// the blocks against the engine and the oracle.
        #[arg(long)]
        materialize: bool,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Print the boundary-path groupoid of an acyclic graph.
    GraphGroupoid { file: PathBuf },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GroupoidTooLarge { .. } | Error::SizeCap { .. } => EXIT_SIZE_CAP,
        Error::LpViolated { .. } => EXIT_LP_REFUSED,
        Error::Consistency(_) => EXIT_MISMATCH,
        _ => EXIT_MALFORMED,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: exit_code(e),
        stdout: to_pretty(&ErrorJson::new(e)),
        stderr: format!("error: {e}\n"),
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| failure(&e))
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn load_groupoid(path: &Path) -> Result<FiniteGroupoid> {
    FiniteGroupoid::from_json(&read(path)?)
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Socle { file, field } => {
            let g = load_groupoid(&file)?;
            let lp = check_condition_lp(&g);
            if !lp.holds {
                return Ok(Outcome {
                    code: EXIT_LP_REFUSED,
                    stdout: to_pretty(&LpRefusalJson::new(&g, &lp)),
                    stderr: format!("refused: {}\n", lp.explanation),
                });
            }
            let alg = SteinbergAlgebra::new(&g, field);
            Ok(Outcome::ok(to_pretty(&SocleJson::new(&alg, &socle(&alg)?))))
        }
        Command::Minimal { file, unit, field } => {
            let g = load_groupoid(&file)?;
            let alg = SteinbergAlgebra::new(&g, field);
            let cert = minimal_ideal_generator(&alg, g.unit(&unit)?)?;
            let verdict = is_minimal_left_ideal(&alg, &cert.ideal)?;
            let stdout = to_pretty(&CertificateJson::new(&alg, &cert, &verdict));
            Ok(if verdict.minimal {
                Outcome::ok(stdout)
            } else {
                Outcome {
                    code: EXIT_MISMATCH,
                    stdout,
                    stderr: "error: the certified ideal failed the minimality check\n".into(),
                }
            })
        }
        Command::Oracle { file, field, semiprime } => {
            let g = load_groupoid(&file)?;
            let alg = SteinbergAlgebra::new(&g, field);
            let soc = oracle_socle(&g, field)?;
            let verdict = if semiprime {
                Some(oracle_is_semiprime(&g, field)?)
            } else {
                None
            };
            let lp = check_condition_lp(&g);
            Ok(Outcome::ok(to_pretty(&OracleJson::new(
                &alg,
                &lp,
                &soc,
                verdict.as_ref(),
            ))))
        }
        Command::GraphSocle {
            file,
            materialize,
            field,
        } => graph_socle(&file, materialize, field),
        Command::GraphGroupoid { file } => {
            let g = DirectedGraph::from_json(&read(&file)?)?;
            Ok(Outcome::ok(graph::materialize_boundary_groupoid(&g)?.to_json()))
        }
    }
}

fn validate(file: &Path) -> Result<Outcome> {
    let raw = RawGroupoid::from_json(&read(file)?)?;
    let (g, report) = groupoid::check(&raw)?;
    let json = ValidationJson::new(raw.elements.len(), g.as_ref(), &report);
    Ok(Outcome {
        code: if report.is_valid() { EXIT_OK } else { EXIT_INVALID },
        stdout: to_pretty(&json),
        stderr: if report.is_valid() {
            String::new()
        } else {
            format!("{report}\n")
        },
    })
}

fn graph_socle(file: &Path, materialize: bool, field: FieldSpec) -> Result<Outcome> {
    let g = DirectedGraph::from_json(&read(file)?)?;
    let lp = graph::line_points(&g);
    let blocks = graph::lpa_socle(&g);
    let mut json = GraphSocleJson::new(&g, &lp, &blocks);
    if !materialize {
        return Ok(Outcome::ok(to_pretty(&json)));
    }
    let gp = graph::materialize_boundary_groupoid(&g)?;
    let alg = SteinbergAlgebra::new(&gp, field);
    let report = socle(&alg)?;
    let mut engine_sizes = report.matrix_sizes();
    engine_sizes.sort_unstable();
    let mut block_sizes: Vec<usize> = blocks
        .iter()
        .map(|b| match b.size {
            OrbitSize::Finite(n) => n as usize,
            OrbitSize::Infinite => unreachable!("acyclic graphs have finite blocks"),
        })
        .collect();
    block_sizes.sort_unstable();
    let mut primes: Vec<u32> = CROSS_CHECK_PRIMES.to_vec();
    if let FieldSpec::Prime(p) = field {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    let mut oracle = Vec::new();
    let mut details = String::new();
    for p in primes {
        let fp = FieldSpec::Prime(p);
        let alg_p = SteinbergAlgebra::new(&gp, fp);
        let engine = socle(&alg_p)?;
        let brute = oracle_socle_any(&gp, fp)?;
        let same = engine.basis == brute.socle;
        if !same {
            details.push_str(&to_pretty(&SocleJson::new(&alg_p, &engine)));
            details.push_str(&to_pretty(&OracleJson::new(
                &alg_p,
                &check_condition_lp(&gp),
                &brute,
                None,
            )));
        }
        oracle.push(OracleCheckJson {
            field: fp.to_string(),
            oracle_method: brute.method.as_str().to_string(),
            engine_socle_dimension: engine.socle_dimension(),
            oracle_socle_dimension: brute.dimension(),
            same_subspace: same,
        });
    }
    let block_sizes_match = engine_sizes == block_sizes;
    let agrees = block_sizes_match && oracle.iter().all(|o| o.same_subspace);
    json.cross_check = Some(CrossCheckJson {
        field: field.to_string(),
        groupoid_elements: gp.len(),
        engine_matrix_sizes: report.matrix_sizes(),
        block_sizes_match,
        oracle,
        agrees,
    });
    let stdout = to_pretty(&json);
    Ok(if agrees {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: EXIT_MISMATCH,
            stdout,
            stderr: format!("error: cross-check mismatch\n{details}"),
        }
    })
}
