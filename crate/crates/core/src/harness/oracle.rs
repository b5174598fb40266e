use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use super::rng::{random_point_in, RandomSource};
use crate::error::{GeometryError, Result};
use crate::projective::{
    fs_distance, project_onto_subspace, shortest_geodesic_projective, ProjectivePoint,
    ProjectiveSubspace,
};

const GOLDEN_ITERATIONS: usize = 60;

/// Brute-force estimate of `inf_{s in S} d(x, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InfimumEstimate {
    /// Minimum over the random samples alone.
    pub sampled: f64,
    /// After the golden-section pass.
    pub refined: f64,
}

impl InfimumEstimate {
    pub fn value(&self) -> f64 {
        self.refined
    }
}

/// Samples `samples` Haar-random points of `S` and keeps the closest one to
/// `x`. The refinement then runs a golden-section search along the geodesic
/// through that sample and the candidate nearest point, extended past the
/// candidate so an optimum there is interior to the bracket.
///
/// Every value reported is the distance from `x` to an actual point of `S`,
/// so the estimate can never undercut the true infimum.
pub fn infimum_oracle(
    x: &ProjectivePoint,
    s: &ProjectiveSubspace,
    rng: &mut RandomSource,
    samples: usize,
) -> Result<InfimumEstimate> {
    GeometryError::check_dims(s.ambient_dim(), x.dim())?;
    if s.is_empty() {
        return Err(GeometryError::EmptySubspace);
    }
    if samples == 0 {
        return Err(GeometryError::InvalidArgument(
            "samples must be positive".into(),
        ));
    }
    let mut best: Option<(f64, ProjectivePoint)> = None;
    for _ in 0..samples {
        let p = random_point_in(rng, s)?;
        let d = fs_distance(x, &p)?;
        if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
            best = Some((d, p));
        }
    }
    let (sampled, best_point) = best.expect("at least one sample");

    let candidate = project_onto_subspace(x, s)?;
    let Some(target) = candidate.nearest_point() else {
        return Ok(InfimumEstimate {
            sampled,
            refined: sampled,
        });
    };
    let line = shortest_geodesic_projective(&best_point, target)?;
    let reach = line.length() + line.length().min(FRAC_PI_4);
    let objective = |t: f64| fs_distance(x, &line.point_at(t));
    let refined = golden_section_min(objective, 0.0, reach)?;
    Ok(InfimumEstimate {
        sampled,
        refined: refined.min(sampled),
    })
}

fn golden_section_min<F>(f: F, mut lo: f64, mut hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    for _ in 0..GOLDEN_ITERATIONS {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = f(a)?;
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = f(b)?;
        }
    }
    Ok(fa.min(fb))
}
