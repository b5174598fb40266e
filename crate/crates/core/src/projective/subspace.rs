use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::point::{pi3_project, ProjectivePoint};
use crate::error::{GeometryError, Result};
use crate::hilbert::{
    hermitian_inner, orthonormalize, projector_from_orthonormal, Event, HilbertVector, UnitVector,
};
use crate::tol::{MEMBERSHIP_TOL, OP_TOL, ORTH_TOL};

/// A complex projective subspace `pi'(E)`.
///
/// Holds an orthonormal frame of `Ran E` together with `E` itself. Two
/// subspaces are equal when their projections agree to `1e-9`; frames are not
/// unique and are never compared directly.
#[derive(Debug, Clone)]
pub struct ProjectiveSubspace {
    frame: Vec<UnitVector>,
    event: Event,
}

impl ProjectiveSubspace {
    pub fn from_event(event: &Event) -> Self {
        let (frame, _) = event.spectral_frames();
        Self {
            frame,
            event: event.clone(),
        }
    }

    /// The subspace spanned by `columns`, which are re-orthonormalized.
    pub fn from_frame(dim: usize, columns: &[UnitVector]) -> Result<Self> {
        if dim < 2 {
            return Err(GeometryError::DimensionTooSmall(dim));
        }
        let raw: Vec<HilbertVector> = columns.iter().map(|c| c.as_vector().clone()).collect();
        let frame = orthonormalize(dim, &raw)?;
        let event = projector_from_orthonormal(dim, &frame);
        Ok(Self { frame, event })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Ok(Self {
            frame: Vec::new(),
            event: Event::zero(dim)?,
        })
    }

    pub fn whole(dim: usize) -> Result<Self> {
        Ok(Self::from_event(&Event::identity(dim)?))
    }

    /// The one-point subspace `{x}`.
    pub fn point(x: &ProjectivePoint) -> Self {
        let frame = vec![x.rep().clone()];
        let event = projector_from_orthonormal(x.dim(), &frame);
        Self { frame, event }
    }

    pub fn frame(&self) -> &[UnitVector] {
        &self.frame
    }

    pub fn event(&self) -> &Event {
        &self.event
    }

    pub fn ambient_dim(&self) -> usize {
        self.event.dim()
    }

    /// `rank - 1`; the empty subspace has dimension `-1`.
    pub fn projective_dim(&self) -> isize {
        self.frame.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.frame.is_empty()
    }

    pub fn approx_eq(&self, other: &ProjectiveSubspace) -> bool {
        self.event
            .max_abs_diff(&other.event)
            .is_ok_and(|d| d <= OP_TOL)
    }

    /// Orthogonal projection of `v` onto the underlying linear subspace,
    /// `sum_k <c_k, v> c_k` over the frame.
    pub fn project_vector(&self, v: &HilbertVector) -> Result<HilbertVector> {
        GeometryError::check_dims(self.ambient_dim(), v.dim())?;
        let mut out = HilbertVector::zeros(v.dim())?;
        for c in &self.frame {
            let coeff: Complex64 = hermitian_inner(c.as_vector(), v)?;
            out = out.add(&c.as_vector().scaled(coeff))?;
        }
        Ok(out)
    }
}

/// `pi'(E)`.
pub fn subspace_from_event(event: &Event) -> ProjectiveSubspace {
    ProjectiveSubspace::from_event(event)
}

/// `S^perp = pi'(I - E)`.
pub fn orthogonal_complement(s: &ProjectiveSubspace) -> ProjectiveSubspace {
    ProjectiveSubspace::from_event(&s.event.complement())
}

pub fn point_in_subspace(x: &ProjectivePoint, s: &ProjectiveSubspace) -> Result<bool> {
    let rep = x.rep().as_vector();
    let residual = s.event.apply(rep)?.sub(rep)?;
    Ok(residual.norm() <= MEMBERSHIP_TOL)
}

/// Split of `rep(x)` into its component in `S` and the norm of the rest.
fn split(x: &ProjectivePoint, s: &ProjectiveSubspace) -> Result<(HilbertVector, f64)> {
    GeometryError::check_dims(s.ambient_dim(), x.dim())?;
    if s.is_empty() {
        return Err(GeometryError::EmptySubspace);
    }
    let rep = x.rep().as_vector();
    let inside = s.project_vector(rep)?;
    let outside = rep.sub(&inside)?.norm();
    Ok((inside, outside))
}

/// `d(x, S) = inf_{y in S} d(x, y)`, attained at the projection of `x`.
///
/// The value is `arccos ||E psi||`, computed as `atan2(||psi - E psi||, ||E psi||)`.
pub fn distance_to_subspace(x: &ProjectivePoint, s: &ProjectiveSubspace) -> Result<f64> {
    let (inside, outside) = split(x, s)?;
    Ok(outside.atan2(inside.norm()))
}

#[derive(Debug, Clone)]
pub enum Projection {
    /// `x` is not in `S^perp`; the closest point is unique.
    NearestPoint(ProjectivePoint),
    /// `x` is in `S^perp`; every point of `S` is at distance `pi/2`.
    WholeSubspace(ProjectiveSubspace),
}

#[derive(Debug, Clone)]
pub struct ProjectionResult {
    pub projection: Projection,
    pub distance: f64,
}

impl ProjectionResult {
    pub fn nearest_point(&self) -> Option<&ProjectivePoint> {
        match &self.projection {
            Projection::NearestPoint(y) => Some(y),
            Projection::WholeSubspace(_) => None,
        }
    }
}

/// `Pj(x | S)`: `pi_3(E psi)` when `E psi != 0`, otherwise all of `S`.
pub fn project_onto_subspace(
    x: &ProjectivePoint,
    s: &ProjectiveSubspace,
) -> Result<ProjectionResult> {
    let (inside, outside) = split(x, s)?;
    let inside_norm = inside.norm();
    if inside_norm > ORTH_TOL {
        Ok(ProjectionResult {
            projection: Projection::NearestPoint(pi3_project(&inside)?),
            distance: outside.atan2(inside_norm),
        })
    } else {
        Ok(ProjectionResult {
            projection: Projection::WholeSubspace(s.clone()),
            distance: FRAC_PI_2,
        })
    }
}
