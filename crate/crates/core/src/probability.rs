//! Quantum probabilities evaluated on `CP(H)`.
//!
//! | quantity | geometric formula |
//! |---|---|
//! | Born transition `P(x|y)` | `cos^2 d(x, y)` |
//! | single event `P_x(S)` | `cos^2 d(x, S)` |
//! | consecutive `P_x(S_1, ..., S_k)` | `prod_j cos^2 d(x_{j-1}, S_j)` with `x_j = Pj(x_{j-1} | S_j)` |
//! | conditional `P_x(S_2 | S_1)` | `P_x(S_1, S_2) / P_x(S_1)` |
//!
//! A consecutive chain is exactly zero as soon as the running point is
//! orthogonal to the next subspace.

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::hilbert::{
    oracle_born, oracle_consecutive_prob, oracle_event_prob, rank_one_event, Event, UnitVector,
};
use crate::projective::{
    fs_distance, is_orthogonal, pi2_project, project_onto_subspace, subspace_from_event,
    Projection, ProjectivePoint, ProjectiveSubspace,
};
use crate::tol::COND_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Derivation {
    Geometric,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilityValue {
    pub value: f64,
    pub derivation: Derivation,
}

impl ProbabilityValue {
    fn geometric(value: f64) -> Self {
        Self {
            value,
            derivation: Derivation::Geometric,
        }
    }

    fn oracle(value: f64) -> Self {
        Self {
            value,
            derivation: Derivation::Oracle,
        }
    }
}

/// Time-ordered sequence of events, first measured first.
#[derive(Debug, Clone)]
pub struct EventChain {
    subspaces: Vec<ProjectiveSubspace>,
    ambient_dim: usize,
}

impl EventChain {
    pub fn new(ambient_dim: usize, subspaces: Vec<ProjectiveSubspace>) -> Result<Self> {
        if ambient_dim < 2 {
            return Err(GeometryError::DimensionTooSmall(ambient_dim));
        }
        for s in &subspaces {
            GeometryError::check_dims(ambient_dim, s.ambient_dim())?;
        }
        Ok(Self {
            subspaces,
            ambient_dim,
        })
    }

    pub fn from_events(ambient_dim: usize, events: &[Event]) -> Result<Self> {
        Self::new(
            ambient_dim,
            events.iter().map(subspace_from_event).collect(),
        )
    }

    pub fn subspaces(&self) -> &[ProjectiveSubspace] {
        &self.subspaces
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }
}

fn cos_squared(distance: f64) -> f64 {
    let c = distance.cos();
    c * c
}

/// `P(x|y) = cos^2 d(x, y)`.
pub fn born_probability(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<ProbabilityValue> {
    if is_orthogonal(x, y)? {
        return Ok(ProbabilityValue::geometric(0.0));
    }
    fs_distance(x, y).map(|d| ProbabilityValue::geometric(cos_squared(d)))
}

/// `P_x(S) = cos^2 d(x, S)`; the empty subspace never occurs.
pub fn single_event_probability(
    x: &ProjectivePoint,
    s: &ProjectiveSubspace,
) -> Result<ProbabilityValue> {
    GeometryError::check_dims(s.ambient_dim(), x.dim())?;
    if s.is_empty() {
        return Ok(ProbabilityValue::geometric(0.0));
    }
    let projection = project_onto_subspace(x, s)?;
    Ok(ProbabilityValue::geometric(match projection.projection {
        Projection::WholeSubspace(_) => 0.0,
        Projection::NearestPoint(_) => cos_squared(projection.distance),
    }))
}

/// One factor of a consecutive probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainStep {
    /// 1-based position in the chain.
    pub step: usize,
    /// `d(x_{j-1}, S_j)`.
    pub distance: f64,
    /// `cos^2` of the distance, or `0` at an orthogonal step.
    pub factor: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainEvaluation {
    pub steps: Vec<ChainStep>,
    pub total: f64,
    /// The 1-based step at which the running point fell in `S^perp`.
    pub orthogonal_at_step: Option<usize>,
    /// Running point after the last evaluated step, `None` after a collapse.
    pub final_point: Option<ProjectivePoint>,
}

/// Step-by-step evaluation of the consecutive probability of a chain.
pub fn evaluate_chain(x: &ProjectivePoint, chain: &EventChain) -> Result<ChainEvaluation> {
    GeometryError::check_dims(chain.ambient_dim, x.dim())?;
    let mut current = x.clone();
    let mut total = 1.0;
    let mut steps = Vec::with_capacity(chain.len());
    for (i, s) in chain.subspaces.iter().enumerate() {
        let step = i + 1;
        let collapsed = |mut steps: Vec<ChainStep>, distance| {
            steps.push(ChainStep {
                step,
                distance,
                factor: 0.0,
            });
            ChainEvaluation {
                steps,
                total: 0.0,
                orthogonal_at_step: Some(step),
                final_point: None,
            }
        };
        if s.is_empty() {
            return Ok(collapsed(steps, std::f64::consts::FRAC_PI_2));
        }
        let projection = project_onto_subspace(&current, s)?;
        match projection.projection {
            Projection::WholeSubspace(_) => return Ok(collapsed(steps, projection.distance)),
            Projection::NearestPoint(y) => {
                let factor = cos_squared(projection.distance);
                total *= factor;
                steps.push(ChainStep {
                    step,
                    distance: projection.distance,
                    factor,
                });
                current = y;
            }
        }
    }
    Ok(ChainEvaluation {
        steps,
        total,
        orthogonal_at_step: None,
        final_point: Some(current),
    })
}

/// `P_x(S_1, ..., S_k)`; the empty chain has probability `1`.
pub fn consecutive_probability(
    x: &ProjectivePoint,
    chain: &EventChain,
) -> Result<ProbabilityValue> {
    evaluate_chain(x, chain).map(|e| ProbabilityValue::geometric(e.total))
}

/// `P_x(S_2 | S_1) = P_x(S_1, S_2) / P_x(S_1)`.
pub fn conditional_probability(
    x: &ProjectivePoint,
    given: &ProjectiveSubspace,
    then: &ProjectiveSubspace,
) -> Result<ProbabilityValue> {
    let denominator = single_event_probability(x, given)?.value;
    if denominator <= COND_TOL {
        return Err(GeometryError::UndefinedConditional(denominator));
    }
    let chain = EventChain::new(x.dim(), vec![given.clone(), then.clone()])?;
    let numerator = consecutive_probability(x, &chain)?.value;
    Ok(ProbabilityValue::geometric(numerator / denominator))
}

/// Single-event probability of the one-point subspace `{pi_2(phi)}`, checked
/// against the Born probability of `x` and `pi_2(phi)`.
pub fn rank_one_check(x: &ProjectivePoint, phi: &UnitVector) -> Result<ProbabilityValue> {
    GeometryError::check_dims(x.dim(), phi.dim())?;
    let s = subspace_from_event(&rank_one_event(phi));
    let single = single_event_probability(x, &s)?;
    let born = born_probability(x, &pi2_project(phi))?;
    if (single.value - born.value).abs() > 1e-10 {
        return Err(GeometryError::BridgeMismatch {
            single: single.value,
            born: born.value,
        });
    }
    Ok(single)
}

/// Operator-side counterparts, tagged [`Derivation::Oracle`].
pub mod oracle {
    use super::*;

    pub fn born(psi: &UnitVector, phi: &UnitVector) -> Result<ProbabilityValue> {
        oracle_born(psi, phi).map(ProbabilityValue::oracle)
    }

    pub fn single_event(psi: &UnitVector, event: &Event) -> Result<ProbabilityValue> {
        oracle_event_prob(psi, event).map(ProbabilityValue::oracle)
    }

    pub fn consecutive(psi: &UnitVector, events: &[Event]) -> Result<ProbabilityValue> {
        oracle_consecutive_prob(psi, events).map(ProbabilityValue::oracle)
    }

    /// `||F E psi||^2 / ||E psi||^2`.
    pub fn conditional(psi: &UnitVector, given: &Event, then: &Event) -> Result<ProbabilityValue> {
        let denominator = oracle_event_prob(psi, given)?;
        if denominator <= COND_TOL {
            return Err(GeometryError::UndefinedConditional(denominator));
        }
        let numerator = oracle_consecutive_prob(psi, &[given.clone(), then.clone()])?;
        Ok(ProbabilityValue::oracle(numerator / denominator))
    }
}
