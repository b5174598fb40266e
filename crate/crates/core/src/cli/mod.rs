//! The `cpprob` command line tool.
//!
//! Exit codes: `0` success, `1` verification failures, `2` usage or malformed
//! input, `3` dimension mismatch, `4` invalid event, `5` empty subspace where
//! a non-empty one is required.

pub mod documents;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::GeometryError;
use crate::harness::{
    verify_probability_laws, verify_projection_theorem, RandomSource, VerificationReport,
};
use crate::hilbert::{oracle_consecutive_prob, oracle_event_prob, Event, UnitVector};
use crate::probability::{evaluate_chain, single_event_probability, ChainStep, EventChain};
use crate::projective::{
    absolute_inner, distance_to_subspace, fs_distance, pi2_project, pi3_project,
    project_onto_subspace, shortest_geodesic_projective, subspace_from_event, Projection,
    ProjectivePoint,
};
use crate::tol;
use documents::{read_document, read_event, read_vector, Document, VectorDocument};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Geometry(e) => match e {
                GeometryError::DimensionMismatch { .. } => 3,
                GeometryError::EmptySubspace => 5,
                e if e.is_invalid_event() => 4,
                _ => 2,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cpprob",
    version,
    about = "Quantum probability as geometry on complex projective space"
)]
struct Cli {
    /// Append the tolerances in effect to the JSON output.
    #[arg(long, global = true)]
    tol_report: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fubini-Study distance between two states, or from a state to an event's subspace.
    Dist { a: PathBuf, b: PathBuf },
    /// Probability of an event in a state, geometric and oracle.
    Prob { state: PathBuf, event: PathBuf },
    /// Consecutive probability of a sequence of events (in time order).
    SeqProb {
        state: PathBuf,
        #[arg(long = "event")]
        events: Vec<PathBuf>,
    },
    /// Nearest point of an event's subspace.
    Project { state: PathBuf, event: PathBuf },
    /// Samples of the shortest geodesic between two states.
    Geodesic {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 16)]
        steps: usize,
    },
    /// Randomized verification of the projection theorem and probability laws.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,8,16")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_chain: u64,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Points of `S` sampled per infimum estimate.
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Projection,
    Probability,
    All,
}

#[derive(Serialize)]
struct Tolerances {
    unit: f64,
    operator: f64,
    frame: f64,
    orthogonality: f64,
    zero_norm: f64,
    phase_anchor: f64,
    membership: f64,
    rank: f64,
    conditional: f64,
}

impl Tolerances {
    fn current() -> Self {
        Self {
            unit: tol::UNIT_TOL,
            operator: tol::OP_TOL,
            frame: tol::FRAME_TOL,
            orthogonality: tol::ORTH_TOL,
            zero_norm: tol::ZERO_NORM,
            phase_anchor: tol::PHASE_ANCHOR,
            membership: tol::MEMBERSHIP_TOL,
            rank: tol::RANK_TOL,
            conditional: tol::COND_TOL,
        }
    }
}

#[derive(Serialize)]
struct Output<T: Serialize> {
    #[serde(flatten)]
    body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerances: Option<Tolerances>,
}

#[derive(Serialize)]
struct DistOutput {
    distance_radians: f64,
    absolute_inner: f64,
}

#[derive(Serialize)]
struct ProbOutput {
    geometric: f64,
    oracle: f64,
    abs_diff: f64,
}

#[derive(Serialize)]
struct SeqProbOutput {
    steps: Vec<ChainStep>,
    total: f64,
    oracle_total: f64,
    abs_diff: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    orthogonal_at_step: Option<usize>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum ProjectOutput {
    Nearest {
        nearest_point: VectorDocument,
        distance: f64,
    },
    Whole {
        whole_subspace: bool,
        distance: f64,
    },
}

#[derive(Serialize)]
struct GeodesicOutput {
    length: f64,
    unique: bool,
    samples: Vec<VectorDocument>,
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Geometry(GeometryError::EmptySubspace)) {
                let _ = writeln!(err, "note: the projection theorem assumes a non-empty subspace, so the event must be nonzero");
            }
            e.exit_code()
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, body: T, tol_report: bool) -> Result<(), CliError> {
    let output = Output {
        body,
        tolerances: tol_report.then(Tolerances::current),
    };
    let text = serde_json::to_string(&output).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| CliError::Usage(e.to_string()))
}

fn read_point(path: &Path) -> Result<ProjectivePoint, CliError> {
    Ok(pi3_project(&read_vector(path)?)?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = cli.tol_report;
    match &cli.command {
        Command::Dist { a, b } => {
            let x = read_point(a)?;
            let body = match read_document(b)? {
                Document::Vector(doc) => {
                    let y = pi3_project(&doc.to_vector()?)?;
                    DistOutput {
                        distance_radians: fs_distance(&x, &y)?,
                        absolute_inner: absolute_inner(&x, &y)?,
                    }
                }
                Document::Event(doc) => {
                    let s = subspace_from_event(&doc.to_event()?);
                    GeometryError::check_dims(s.ambient_dim(), x.dim())?;
                    let distance = distance_to_subspace(&x, &s)?;
                    let projected = s.project_vector(x.rep().as_vector())?;
                    DistOutput {
                        distance_radians: distance,
                        absolute_inner: projected.norm().min(1.0),
                    }
                }
            };
            emit(out, body, report)?;
        }
        Command::Prob { state, event } => {
            let psi = UnitVector::new(read_vector(state)?)?;
            let e = read_event(event)?;
            GeometryError::check_dims(e.dim(), psi.dim())?;
            let geometric =
                single_event_probability(&pi2_project(&psi), &subspace_from_event(&e))?.value;
            let oracle = oracle_event_prob(&psi, &e)?;
            emit(
                out,
                ProbOutput {
                    geometric,
                    oracle,
                    abs_diff: (geometric - oracle).abs(),
                },
                report,
            )?;
        }
        Command::SeqProb { state, events } => {
            let psi = UnitVector::new(read_vector(state)?)?;
            let events: Vec<Event> = events
                .iter()
                .map(|p| read_event(p))
                .collect::<Result<_, _>>()?;
            let chain = EventChain::from_events(psi.dim(), &events)?;
            let evaluation = evaluate_chain(&pi2_project(&psi), &chain)?;
            let oracle_total = oracle_consecutive_prob(&psi, &events)?;
            emit(
                out,
                SeqProbOutput {
                    abs_diff: (evaluation.total - oracle_total).abs(),
                    steps: evaluation.steps,
                    total: evaluation.total,
                    oracle_total,
                    orthogonal_at_step: evaluation.orthogonal_at_step,
                },
                report,
            )?;
        }
        Command::Project { state, event } => {
            let x = read_point(state)?;
            let s = subspace_from_event(&read_event(event)?);
            GeometryError::check_dims(s.ambient_dim(), x.dim())?;
            let result = project_onto_subspace(&x, &s)?;
            let body = match &result.projection {
                Projection::NearestPoint(y) => ProjectOutput::Nearest {
                    nearest_point: VectorDocument::from_point(y),
                    distance: result.distance,
                },
                Projection::WholeSubspace(_) => ProjectOutput::Whole {
                    whole_subspace: true,
                    distance: result.distance,
                },
            };
            emit(out, body, report)?;
        }
        Command::Geodesic { a, b, steps } => {
            if *steps == 0 {
                return Err(CliError::Usage("--steps must be at least 1".into()));
            }
            let x = read_point(a)?;
            let y = read_point(b)?;
            let g = shortest_geodesic_projective(&x, &y)?;
            emit(
                out,
                GeodesicOutput {
                    length: g.length(),
                    unique: g.is_unique(),
                    samples: g
                        .sample_points(*steps)
                        .iter()
                        .map(VectorDocument::from_point)
                        .collect(),
                },
                report,
            )?;
        }
        Command::Verify {
            seed,
            dims,
            trials,
            max_chain,
            suite,
            samples,
        } => {
            if let Some(d) = dims.iter().find(|&&d| d < 2) {
                return Err(CliError::Usage(format!("dimension {d} is below 2")));
            }
            let rng = RandomSource::new(*seed);
            let trials = *trials as usize;
            let projection = || verify_projection_theorem(&rng, dims, trials, *samples as usize);
            let probability = || verify_probability_laws(&rng, dims, trials, *max_chain as usize);
            let result = match suite {
                Suite::Projection => projection()?,
                Suite::Probability => probability()?,
                Suite::All => VerificationReport::merge("all", vec![projection()?, probability()?]),
            };
            emit(out, &result, report)?;
            return Ok(if result.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}
