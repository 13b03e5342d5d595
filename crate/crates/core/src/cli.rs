//! JSON-in/JSON-out command line front end.
//!
//! Every command reads one JSON document and writes one JSON document.
//! Exit codes: 0 affirmative or valid, 1 usage/parse/size error, 2 computed
//! negative or invalid, 3 inconclusive within the search bounds.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hvector::{
    f_to_h, find_pm_witness, find_pure_order_ideal_witness, find_shellable_witness, h_to_f,
    Budget, SearchBounds, SearchOutcome,
};
use crate::lpm::{build_matroid, corollary3_check, Corollary3Status, LatticePath};
use crate::monomial::{DegreeVector, IdealSpec, OrderIdeal};
use crate::polymatroid::{enumerate_discrete_polymatroids, is_discrete_polymatroid};
use crate::shelling::{
    bruteforce_search, shell_polymatroid, verify_m_shelling, MShelling, ShellingCertificate,
};
use crate::{Limits, DEFAULT_CLOSURE_CAP, DEFAULT_ORACLE_CAP};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Build an M-shelling of a discrete polymatroid
    Shell,
    /// Verify a claimed M-shelling: {"ideal": ..., "shelling": ...}
    Verify,
    /// Test the discrete-polymatroid exchange property
    CheckPm,
    /// Degree sequence of an order ideal
    Degseq,
    /// f-vector to h-vector
    F2h,
    /// h-vector to f-vector
    H2f,
    /// Bases, f-vector and h-vector of a lattice path matroid: {"P": ..., "Q": ...}
    LpmH,
    /// Certificate chain from a lattice path matroid to a verified shelling
    Cor3,
    /// Witness search for a vector: {"h": [...], "class": "pure"|"pm"|"shellable"}
    Witness,
    /// Brute-force M-shellability search on an order ideal
    Oracle,
    /// Enumerate discrete polymatroids: {"variables": n, "degree": d, "max_count": k}
    Enumerate,
}

#[derive(Debug, Parser)]
#[command(name = "mshell", version, about = "M-shellings of discrete polymatroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input JSON file, `-` for stdin
    #[arg(short, long, global = true, default_value = "-")]
    pub input: String,

    /// Output JSON file, `-` for stdout
    #[arg(short, long, global = true, default_value = "-")]
    pub output: String,

    /// Backtracking node budget for witness searches
    #[arg(long, global = true, default_value_t = SearchBounds::default().max_nodes,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_nodes: u64,

    /// Largest variable count a witness may use
    #[arg(long, global = true, default_value_t = SearchBounds::default().max_variables,
          value_parser = positive)]
    pub max_variables: usize,

    /// Largest order ideal (in monomials) that may be materialized
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP, value_parser = positive)]
    pub closure_cap: usize,

    /// Largest order ideal the brute-force shelling oracle accepts
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP, value_parser = positive)]
    pub oracle_cap: usize,

    /// Pretty-print the output document
    #[arg(long, global = true)]
    pub pretty: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stream {
    Std,
    File(PathBuf),
}

impl Stream {
    fn from_arg(s: &str) -> Self {
        if s == "-" {
            Stream::Std
        } else {
            Stream::File(PathBuf::from(s))
        }
    }
}

/// Fully resolved invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Stream,
    pub output: Stream,
    pub bounds: SearchBounds,
    pub limits: Limits,
    pub pretty: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: Stream::Std,
            output: Stream::Std,
            bounds: SearchBounds::default(),
            limits: Limits::default(),
            pretty: false,
        }
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            command: cli.command,
            input: Stream::from_arg(&cli.input),
            output: Stream::from_arg(&cli.output),
            bounds: SearchBounds {
                max_variables: cli.max_variables,
                max_nodes: cli.max_nodes,
            },
            limits: Limits {
                closure_cap: cli.closure_cap,
                oracle_cap: cli.oracle_cap,
            },
            pretty: cli.pretty,
        }
    }
}

/// Exit status plus the rendered JSON document (newline terminated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub exit: u8,
    pub document: String,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDoc<'a> {
    error: ErrorBody<'a>,
}

fn render<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("output types serialize infallibly");
    s.push('\n');
    s
}

fn error_response(kind: &str, message: String, pretty: bool) -> Response {
    Response {
        exit: EXIT_ERROR,
        document: render(
            &ErrorDoc {
                error: ErrorBody { kind, message },
            },
            pretty,
        ),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyInput {
    ideal: IdealSpec,
    shelling: MShelling,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PathPair {
    #[serde(rename = "P")]
    lower: LatticePath,
    #[serde(rename = "Q")]
    upper: LatticePath,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
enum WitnessClass {
    Pure,
    #[default]
    Pm,
    Shellable,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessInput {
    h: DegreeVector,
    #[serde(default)]
    class: WitnessClass,
}

fn unbounded() -> usize {
    usize::MAX
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EnumerateInput {
    variables: usize,
    degree: u32,
    #[serde(default = "unbounded")]
    max_count: usize,
}

#[derive(Serialize)]
struct NotPolymatroid<'a> {
    status: &'static str,
    polymatroid: &'a crate::polymatroid::PolymatroidReport,
}

#[derive(Serialize)]
struct MatroidSummary<'a> {
    #[serde(flatten)]
    matroid: &'a crate::lpm::LatticePathMatroid,
    f_vector: DegreeVector,
    h_vector: DegreeVector,
}

#[derive(Serialize)]
struct Enumeration {
    count: usize,
    ideals: Vec<IdealSpec>,
}

/// Failure while handling a command; always maps to exit 1.
enum Failure {
    Json(serde_json::Error),
    Lib(Error),
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Json(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn outcome_exit<T>(o: &SearchOutcome<T>) -> u8 {
    match o {
        SearchOutcome::Found(_) => EXIT_OK,
        SearchOutcome::Absent => EXIT_NEGATIVE,
        SearchOutcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Runs `config.command` on the JSON text `input`. Does no I/O.
pub fn execute(config: &RunConfig, input: &str) -> Response {
    match dispatch(config, input) {
        Ok(r) => r,
        Err(Failure::Json(e)) => error_response("json", e.to_string(), config.pretty),
        Err(Failure::Lib(e)) => error_response(e.kind(), e.to_string(), config.pretty),
    }
}

fn dispatch(config: &RunConfig, input: &str) -> Result<Response, Failure> {
    let pretty = config.pretty;
    let ideal = || -> Result<OrderIdeal, Failure> {
        let spec: IdealSpec = serde_json::from_str(input)?;
        Ok(spec.build(config.limits.closure_cap)?)
    };
    let respond = |exit: u8, body: String| Ok(Response { exit, document: body });

    match config.command {
        Command::Shell => {
            let g = ideal()?;
            let report = is_discrete_polymatroid(&g)?;
            if !report.holds {
                let doc = NotPolymatroid {
                    status: "not_polymatroid",
                    polymatroid: &report,
                };
                return respond(EXIT_NEGATIVE, render(&doc, pretty));
            }
            let shelling = shell_polymatroid(&g)?;
            let cert = ShellingCertificate { ideal: g, shelling };
            respond(EXIT_OK, render(&cert, pretty))
        }
        Command::Verify => {
            let v: VerifyInput = serde_json::from_str(input)?;
            let g = v.ideal.build(config.limits.closure_cap)?;
            let report = verify_m_shelling(&g, &v.shelling);
            let exit = if report.valid { EXIT_OK } else { EXIT_NEGATIVE };
            respond(exit, render(&report, pretty))
        }
        Command::CheckPm => {
            let report = is_discrete_polymatroid(&ideal()?)?;
            let exit = if report.holds { EXIT_OK } else { EXIT_NEGATIVE };
            respond(exit, render(&report, pretty))
        }
        Command::Degseq => respond(EXIT_OK, render(&ideal()?.degree_sequence(), pretty)),
        Command::F2h => {
            let f: DegreeVector = serde_json::from_str(input)?;
            respond(EXIT_OK, render(&f_to_h(&f)?, pretty))
        }
        Command::H2f => {
            let h: DegreeVector = serde_json::from_str(input)?;
            respond(EXIT_OK, render(&h_to_f(&h)?, pretty))
        }
        Command::LpmH => {
            let pair: PathPair = serde_json::from_str(input)?;
            let matroid = build_matroid(&pair.lower, &pair.upper)?;
            let summary = MatroidSummary {
                f_vector: matroid.f_vector(),
                h_vector: matroid.h_vector()?,
                matroid: &matroid,
            };
            respond(EXIT_OK, render(&summary, pretty))
        }
        Command::Cor3 => {
            let pair: PathPair = serde_json::from_str(input)?;
            let report = corollary3_check(&pair.lower, &pair.upper, &config.bounds)?;
            let exit = match report.status {
                Corollary3Status::Found => EXIT_OK,
                Corollary3Status::Inconclusive => EXIT_INCONCLUSIVE,
                Corollary3Status::Absent | Corollary3Status::Invalid => {
                    eprintln!(
                        "ANOMALY: M[{}, {}] produced status {:?}",
                        report.lower, report.upper, report.status
                    );
                    EXIT_NEGATIVE
                }
            };
            respond(exit, render(&report, pretty))
        }
        Command::Witness => {
            let w: WitnessInput = serde_json::from_str(input)?;
            let bounds = &config.bounds;
            let (exit, doc) = match w.class {
                WitnessClass::Pure => {
                    let o = find_pure_order_ideal_witness(&w.h, bounds)?;
                    (outcome_exit(&o), render(&o, pretty))
                }
                WitnessClass::Pm => {
                    let o = find_pm_witness(&w.h, bounds)?;
                    (outcome_exit(&o), render(&o, pretty))
                }
                WitnessClass::Shellable => {
                    let o = find_shellable_witness(&w.h, bounds, config.limits.oracle_cap)?
                        .map(|(ideal, shelling)| ShellingCertificate { ideal, shelling });
                    (outcome_exit(&o), render(&o, pretty))
                }
            };
            respond(exit, doc)
        }
        Command::Oracle => {
            let g = ideal()?;
            let mut budget = Budget::new(config.bounds.max_nodes);
            let o = bruteforce_search(&g, config.limits.oracle_cap, &mut budget)?
                .map(|shelling| ShellingCertificate { ideal: g, shelling });
            respond(outcome_exit(&o), render(&o, pretty))
        }
        Command::Enumerate => {
            let e: EnumerateInput = serde_json::from_str(input)?;
            let ideals: Vec<IdealSpec> =
                enumerate_discrete_polymatroids(e.variables, e.degree, e.max_count)?
                    .map(|g| g.to_spec())
                    .collect();
            let doc = Enumeration {
                count: ideals.len(),
                ideals,
            };
            respond(EXIT_OK, render(&doc, pretty))
        }
    }
}

/// Reads the input, executes, writes the output. Returns the exit code.
pub fn run(config: &RunConfig) -> u8 {
    let input = match &config.input {
        Stream::Std => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map(|_| s)
        }
        Stream::File(p) => fs::read_to_string(p),
    };
    let response = match input {
        Ok(text) => execute(config, &text),
        Err(e) => error_response("io", format!("reading input: {e}"), config.pretty),
    };
    let written = match &config.output {
        Stream::Std => io::stdout().write_all(response.document.as_bytes()),
        Stream::File(p) => fs::write(p, &response.document),
    };
    if let Err(e) = written {
        eprintln!("mshell: writing output: {e}");
        return EXIT_ERROR;
    }
    response.exit
}

/// Entry point for the binary: parses `args` (including the program name).
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&RunConfig::from(cli)),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            eprint!("{e}");
            let doc = error_response("usage", e.kind().to_string(), false);
            print!("{}", doc.document);
            EXIT_ERROR
        }
    }
}
