use std::f64::consts::FRAC_PI_2;
use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::oracle::infimum_oracle;
use super::rng::{
    random_event, random_point_in, random_subspace, random_unit_vector, random_unitary_frame,
    RandomSource, RNG_ALGORITHM,
};
use crate::error::{GeometryError, Result};
use crate::hilbert::{
    oracle_born, oracle_consecutive_prob, oracle_event_prob, Event, HilbertVector, UnitVector,
};
use crate::probability::{
    born_probability, conditional_probability, consecutive_probability, single_event_probability,
    EventChain,
};
use crate::projective::{
    distance_to_subspace, fs_distance, orthogonal_complement, pi2_project, project_onto_subspace,
    subspace_from_event, Projection,
};
use crate::tol::COND_TOL;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: f64,
    pub got: f64,
    pub error: f64,
}

/// Results of one named comparison. `failures` is empty iff
/// `max_abs_error <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub tolerance: f64,
    pub evaluations: usize,
    pub max_abs_error: f64,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub rng: String,
    pub dims: Vec<usize>,
    pub trials: usize,
    /// Largest error over all checks.
    pub max_abs_error: f64,
    pub checks: Vec<CheckSummary>,
    /// Every failure of every check, in trial order.
    pub failures: Vec<Failure>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines reports run with the same seed into one.
    pub fn merge(suite: &str, reports: Vec<VerificationReport>) -> VerificationReport {
        let seed = reports.first().map_or(0, |r| r.seed);
        let mut dims: Vec<usize> = Vec::new();
        for r in &reports {
            for d in &r.dims {
                if !dims.contains(d) {
                    dims.push(*d);
                }
            }
        }
        let checks: Vec<CheckSummary> = reports.iter().flat_map(|r| r.checks.clone()).collect();
        VerificationReport {
            suite: suite.to_string(),
            seed,
            rng: RNG_ALGORITHM.to_string(),
            dims,
            trials: reports.iter().map(|r| r.trials).sum(),
            max_abs_error: checks.iter().map(|c| c.max_abs_error).fold(0.0, f64::max),
            failures: reports.iter().flat_map(|r| r.failures.clone()).collect(),
            checks,
            elapsed_ms: reports.iter().map(|r| r.elapsed_ms).sum(),
        }
    }

    /// The report without its timing, for reproducibility comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

struct Observation {
    check: usize,
    case: String,
    expected: f64,
    got: f64,
}

/// Collects observations of one trial; an `Err` along the way is recorded
/// as an infinite error on the check that hit it.
struct TrialLog {
    case: String,
    observations: Vec<Observation>,
}

impl TrialLog {
    fn new(case: String) -> Self {
        Self {
            case,
            observations: Vec::new(),
        }
    }

    fn record(&mut self, check: usize, detail: &str, expected: f64, got: f64) {
        self.observations.push(Observation {
            check,
            case: format!("{} {}", self.case, detail),
            expected,
            got,
        });
    }

    fn record_result(&mut self, check: usize, detail: &str, outcome: Result<(f64, f64)>) {
        match outcome {
            Ok((expected, got)) => self.record(check, detail, expected, got),
            Err(e) => self.record(check, &format!("{detail} error: {e}"), 0.0, f64::INFINITY),
        }
    }
}

fn summarize(
    suite: &str,
    seed: u64,
    dims: &[usize],
    checks: &[(&str, f64)],
    trials: usize,
    logs: Vec<TrialLog>,
    started: Instant,
) -> VerificationReport {
    let mut summaries: Vec<CheckSummary> = checks
        .iter()
        .map(|&(name, tolerance)| CheckSummary {
            name: name.to_string(),
            tolerance,
            evaluations: 0,
            max_abs_error: 0.0,
            failures: Vec::new(),
        })
        .collect();
    let mut failures = Vec::new();
    for obs in logs.into_iter().flat_map(|l| l.observations) {
        let summary = &mut summaries[obs.check];
        let error = (obs.expected - obs.got).abs();
        let error = if error.is_nan() { f64::INFINITY } else { error };
        summary.evaluations += 1;
        summary.max_abs_error = summary.max_abs_error.max(error);
        if error > summary.tolerance {
            let failure = Failure {
                case: obs.case,
                expected: obs.expected,
                got: obs.got,
                error,
            };
            summary.failures.push(failure.clone());
            failures.push(failure);
        }
    }
    VerificationReport {
        suite: suite.to_string(),
        seed,
        rng: RNG_ALGORITHM.to_string(),
        dims: dims.to_vec(),
        trials,
        max_abs_error: summaries
            .iter()
            .map(|c| c.max_abs_error)
            .fold(0.0, f64::max),
        checks: summaries,
        failures,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

fn validate(dims: &[usize], trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(GeometryError::InvalidArgument(
            "trials must be at least 1".into(),
        ));
    }
    if dims.is_empty() {
        return Err(GeometryError::InvalidArgument("no dimensions given".into()));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(GeometryError::DimensionTooSmall(d));
    }
    Ok(())
}

/// Runs `trials` cases per dimension; case `i` of dimension slot `k` draws
/// from `rng.child(k * trials + i)` so the outcome does not depend on
/// scheduling.
fn run_trials<F>(rng: &RandomSource, dims: &[usize], trials: usize, trial: F) -> Vec<TrialLog>
where
    F: Fn(usize, usize, &mut RandomSource) -> TrialLog + Sync,
{
    let jobs: Vec<(usize, usize)> = dims
        .iter()
        .enumerate()
        .flat_map(|(k, &dim)| (0..trials).map(move |i| (k * trials + i, dim)))
        .collect();
    jobs.into_par_iter()
        .map(|(index, dim)| {
            let mut child = rng.child(index as u64);
            trial(index, dim, &mut child)
        })
        .collect()
}

const MEMBERSHIP: usize = 0;
const NEAREST_DISTANCE: usize = 1;
const INFIMUM_AGREEMENT: usize = 2;
const INFIMUM_LOWER_BOUND: usize = 3;
const ORTHOGONAL_BRANCH: usize = 4;
const ORTHOGONAL_SAMPLES: usize = 5;

const PROJECTION_CHECKS: [(&str, f64); 6] = [
    ("nearest_point_in_subspace", 1e-8),
    ("nearest_point_distance", 1e-9),
    ("infimum_oracle_agreement", 1e-6),
    ("infimum_oracle_lower_bound", 1e-7),
    ("orthogonal_branch_distance", 1e-9),
    ("orthogonal_branch_all_points", 1e-9),
];

/// Checks the projection theorem on `trials` random cases per dimension.
///
/// Each case draws a subspace of random rank and a random point, compares the
/// nearest point with the brute-force infimum over `samples` points of `S`,
/// and, when `S` is proper, also builds a point of `S^perp` and checks that
/// every sampled point of `S` lies at distance `pi/2` from it.
pub fn verify_projection_theorem(
    rng: &RandomSource,
    dims: &[usize],
    trials: usize,
    samples: usize,
) -> Result<VerificationReport> {
    validate(dims, trials)?;
    if samples == 0 {
        return Err(GeometryError::InvalidArgument(
            "samples must be at least 1".into(),
        ));
    }
    let started = Instant::now();
    let logs = run_trials(rng, dims, trials, |index, dim, rng| {
        let rank = rng.int_in(1, dim);
        let mut log = TrialLog::new(format!("trial={index} dim={dim} rank={rank}"));
        if let Err(e) = projection_trial(&mut log, rng, dim, rank, samples) {
            log.record(MEMBERSHIP, &format!("error: {e}"), 0.0, f64::INFINITY);
        }
        log
    });
    Ok(summarize(
        "projection",
        rng.seed(),
        dims,
        &PROJECTION_CHECKS,
        trials * dims.len(),
        logs,
        started,
    ))
}

fn projection_trial(
    log: &mut TrialLog,
    rng: &mut RandomSource,
    dim: usize,
    rank: usize,
    samples: usize,
) -> Result<()> {
    let s = random_subspace(rng, dim, rank)?;
    let x = pi2_project(&random_unit_vector(rng, dim)?);
    let exact = distance_to_subspace(&x, &s)?;
    let projection = project_onto_subspace(&x, &s)?;
    match &projection.projection {
        Projection::NearestPoint(y) => {
            let rep = y.rep().as_vector();
            let residual = s.event().apply(rep)?.sub(rep)?.norm();
            log.record(MEMBERSHIP, "membership", 0.0, residual);
            log.record(NEAREST_DISTANCE, "d(x,y)", exact, fs_distance(&x, y)?);
        }
        Projection::WholeSubspace(_) => {
            log.record(
                ORTHOGONAL_BRANCH,
                "sampled x in S^perp",
                FRAC_PI_2,
                projection.distance,
            );
        }
    }
    let estimate = infimum_oracle(&x, &s, rng, samples)?;
    log.record(INFIMUM_AGREEMENT, "infimum", exact, estimate.refined);
    log.record(
        INFIMUM_LOWER_BOUND,
        "infimum >= d(x,S)",
        0.0,
        (exact - estimate.refined).max(0.0),
    );

    if rank < dim {
        let perp = orthogonal_complement(&s);
        let z = random_point_in(rng, &perp)?;
        let branch = project_onto_subspace(&z, &s)?;
        let distance = match branch.projection {
            Projection::WholeSubspace(_) => branch.distance,
            Projection::NearestPoint(_) => f64::NAN,
        };
        log.record(
            ORTHOGONAL_BRANCH,
            "constructed x in S^perp",
            FRAC_PI_2,
            distance,
        );
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let p = random_point_in(rng, &s)?;
            worst = worst.max((fs_distance(&z, &p)? - FRAC_PI_2).abs());
        }
        log.record(ORTHOGONAL_SAMPLES, "all sampled points at pi/2", 0.0, worst);
    }
    Ok(())
}

const BORN: usize = 0;
const SINGLE: usize = 1;
const CONSECUTIVE: usize = 2;
const CONDITIONAL: usize = 3;
const SHORT_CIRCUIT: usize = 4;

const PROBABILITY_CHECKS: [(&str, f64); 5] = [
    ("born", 1e-9),
    ("single_event", 1e-9),
    ("consecutive", 1e-9),
    ("conditional", 1e-9),
    ("short_circuit_exact_zero", 0.0),
];

/// Compares every geometric probability with its operator formula.
///
/// Per case: a Born pair, a single event of random rank, a chain of random
/// length in `2..=max_chain` (`1` when `max_chain` is 1), a conditional, and two engineered chains whose
/// second event annihilates the projected state (one in coordinates, where
/// both paths must return exactly zero, and one rotated by a random unitary).
pub fn verify_probability_laws(
    rng: &RandomSource,
    dims: &[usize],
    trials: usize,
    max_chain: usize,
) -> Result<VerificationReport> {
    validate(dims, trials)?;
    if max_chain == 0 {
        return Err(GeometryError::InvalidArgument(
            "max_chain must be at least 1".into(),
        ));
    }
    let started = Instant::now();
    let logs = run_trials(rng, dims, trials, |index, dim, rng| {
        let mut log = TrialLog::new(format!("trial={index} dim={dim}"));
        if let Err(e) = probability_trial(&mut log, rng, dim, max_chain) {
            log.record(BORN, &format!("error: {e}"), 0.0, f64::INFINITY);
        }
        log
    });
    Ok(summarize(
        "probability",
        rng.seed(),
        dims,
        &PROBABILITY_CHECKS,
        trials * dims.len(),
        logs,
        started,
    ))
}

fn probability_trial(
    log: &mut TrialLog,
    rng: &mut RandomSource,
    dim: usize,
    max_chain: usize,
) -> Result<()> {
    let psi = random_unit_vector(rng, dim)?;
    let phi = random_unit_vector(rng, dim)?;
    let x = pi2_project(&psi);

    let born = born_probability(&x, &pi2_project(&phi))
        .and_then(|p| Ok((oracle_born(&psi, &phi)?, p.value)));
    log.record_result(BORN, "born", born);

    let rank = rng.int_in(0, dim);
    let e = random_event(rng, dim, rank)?;
    let single = single_event_probability(&x, &subspace_from_event(&e))
        .and_then(|p| Ok((oracle_event_prob(&psi, &e)?, p.value)));
    log.record_result(SINGLE, &format!("single rank={rank}"), single);

    let len = rng.int_in(max_chain.min(2), max_chain);
    let events = (0..len)
        .map(|_| {
            let r = rng.int_in(0, dim);
            random_event(rng, dim, r)
        })
        .collect::<Result<Vec<_>>>()?;
    let chain = EventChain::from_events(dim, &events)?;
    let consecutive = consecutive_probability(&x, &chain)
        .and_then(|p| Ok((oracle_consecutive_prob(&psi, &events)?, p.value)));
    log.record_result(CONSECUTIVE, &format!("chain len={len}"), consecutive);

    let given_rank = rng.int_in(1, dim);
    let given = random_event(rng, dim, given_rank)?;
    let then_rank = rng.int_in(0, dim);
    let then = random_event(rng, dim, then_rank)?;
    conditional_check(log, &psi, &given, &then)?;

    short_circuit_checks(log, rng, &psi, dim)
}

fn conditional_check(
    log: &mut TrialLog,
    psi: &UnitVector,
    given: &Event,
    then: &Event,
) -> Result<()> {
    let x = pi2_project(psi);
    let oracle_denominator = oracle_event_prob(psi, given)?;
    let geometric =
        conditional_probability(&x, &subspace_from_event(given), &subspace_from_event(then));
    match geometric {
        Ok(p) => {
            if oracle_denominator <= COND_TOL {
                log.record(
                    CONDITIONAL,
                    "defined only geometrically",
                    0.0,
                    f64::INFINITY,
                );
            } else {
                let oracle = oracle_consecutive_prob(psi, &[given.clone(), then.clone()])?
                    / oracle_denominator;
                log.record(CONDITIONAL, "conditional", oracle, p.value);
            }
        }
        Err(GeometryError::UndefinedConditional(_)) => {
            if oracle_denominator > COND_TOL {
                log.record(
                    CONDITIONAL,
                    "defined only by the oracle",
                    0.0,
                    f64::INFINITY,
                );
            }
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Random non-empty proper subset of `0..dim` and a non-empty subset of its complement.
fn disjoint_patterns(rng: &mut RandomSource, dim: usize) -> (Vec<bool>, Vec<bool>) {
    let mut order: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        let j = rng.int_in(0, i);
        order.swap(i, j);
    }
    let first_len = rng.int_in(1, dim - 1);
    let second_len = rng.int_in(1, dim - first_len);
    let mut first = vec![false; dim];
    let mut second = vec![false; dim];
    for &i in &order[..first_len] {
        first[i] = true;
    }
    for &i in &order[first_len..first_len + second_len] {
        second[i] = true;
    }
    (first, second)
}

fn short_circuit_checks(
    log: &mut TrialLog,
    rng: &mut RandomSource,
    psi: &UnitVector,
    dim: usize,
) -> Result<()> {
    let (a, b) = disjoint_patterns(rng, dim);
    let e = Event::diagonal(&a);
    let f = Event::diagonal(&b);
    let chain = EventChain::from_events(dim, &[e.clone(), f.clone()])?;
    let x = pi2_project(psi);
    let geometric = consecutive_probability(&x, &chain)?.value;
    let oracle = oracle_consecutive_prob(psi, &[e.clone(), f.clone()])?;
    log.record(SHORT_CIRCUIT, "coordinate chain geometric", 0.0, geometric);
    log.record(SHORT_CIRCUIT, "coordinate chain oracle", 0.0, oracle);

    let frame = random_unitary_frame(rng, dim, dim)?;
    let unitary = DMatrix::from_fn(dim, dim, |r, c| frame[c].entries()[r]);
    let rotate = |event: &Event| Event::from_matrix(&unitary * event.matrix() * unitary.adjoint());
    let (re, rf) = (rotate(&e)?, rotate(&f)?);
    let rpsi = UnitVector::new(HilbertVector::new(
        (&unitary * nalgebra::DVector::from_column_slice(psi.entries()))
            .iter()
            .copied()
            .collect::<Vec<Complex64>>(),
    )?)?;
    let chain = EventChain::from_events(dim, &[re.clone(), rf.clone()])?;
    let geometric = consecutive_probability(&pi2_project(&rpsi), &chain)?.value;
    let oracle = oracle_consecutive_prob(&rpsi, &[re, rf])?;
    log.record(SHORT_CIRCUIT, "rotated chain geometric", 0.0, geometric);
    log.record(CONSECUTIVE, "rotated annihilating chain", oracle, geometric);
    Ok(())
}
