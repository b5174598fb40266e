//! Shortest geodesics on `S(H)` and `CP(H)`.
//!
//! Every geodesic is stored as a great circle `t -> cos(t) psi + sin(t) u` on
//! the unit sphere with `Re <psi, u> = 0` and `||u|| = 1`. A projective
//! geodesic is the image under `pi_2` of a horizontal great circle, one whose
//! tangent also satisfies `<psi, u> = 0`; the stored circle is then its
//! horizontal lift through the canonical representative of the start point.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::point::{pi2_project, unit_euclidean_angle, unit_projective_angle, ProjectivePoint};
use crate::error::{GeometryError, Result};
use crate::hilbert::{hermitian_inner, HilbertVector, UnitVector};
use crate::tol::{ORTH_TOL, UNIT_TOL};

/// Residual norm below which the direction to the endpoint is undefined.
const DEGENERATE: f64 = 1e-15;
/// Angular slack for treating two points as antipodal.
const ANTIPODAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodesicSpace {
    Sphere,
    Projective,
}

#[derive(Debug, Clone)]
pub struct Geodesic {
    space: GeodesicSpace,
    start: UnitVector,
    end: UnitVector,
    length: f64,
    unique: bool,
    tangent: HilbertVector,
}

impl Geodesic {
    pub fn space(&self) -> GeodesicSpace {
        self.space
    }

    /// Sphere point at `t = 0`.
    pub fn start(&self) -> &UnitVector {
        &self.start
    }

    /// Sphere point at `t = length`.
    pub fn end(&self) -> &UnitVector {
        &self.end
    }

    pub fn start_point(&self) -> ProjectivePoint {
        pi2_project(&self.start)
    }

    pub fn end_point(&self) -> ProjectivePoint {
        pi2_project(&self.end)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn is_unique(&self) -> bool {
        self.unique
    }

    /// Unit initial velocity `u`.
    pub fn tangent(&self) -> &HilbertVector {
        &self.tangent
    }

    /// `cos(t) psi + sin(t) u` on the sphere.
    pub fn lift_at(&self, t: f64) -> UnitVector {
        let (s, c) = t.sin_cos();
        let v = self
            .start
            .as_vector()
            .scaled(Complex64::new(c, 0.0))
            .add(&self.tangent.scaled(Complex64::new(s, 0.0)))
            .expect("tangent shares the start dimension");
        UnitVector::new(v).expect("great circle points have unit norm")
    }

    /// `-sin(t) psi + cos(t) u`.
    pub fn velocity_at(&self, t: f64) -> HilbertVector {
        let (s, c) = t.sin_cos();
        self.start
            .as_vector()
            .scaled(Complex64::new(-s, 0.0))
            .add(&self.tangent.scaled(Complex64::new(c, 0.0)))
            .expect("tangent shares the start dimension")
    }

    pub fn point_at(&self, t: f64) -> ProjectivePoint {
        pi2_project(&self.lift_at(t))
    }

    /// `steps + 1` projective points equally spaced in arc length; a single
    /// point when the curve has zero length. The end samples are the endpoints
    /// themselves.
    pub fn sample_points(&self, steps: usize) -> Vec<ProjectivePoint> {
        if self.length == 0.0 || steps == 0 {
            return vec![self.start_point()];
        }
        (0..=steps)
            .map(|k| match k {
                0 => self.start_point(),
                k if k == steps => self.end_point(),
                k => self.point_at(self.length * k as f64 / steps as f64),
            })
            .collect()
    }
}

/// Lowest-index coordinate direction made real-orthogonal to `psi`.
fn real_orthogonal_direction(psi: &UnitVector) -> HilbertVector {
    let n = psi.dim();
    let j = psi
        .entries()
        .iter()
        .position(|z| 1.0 - z.re * z.re > 0.25)
        .expect("at most one coordinate can carry more than 3/4 of a unit norm");
    let e = HilbertVector::basis(n, j).expect("index in range");
    let r = psi.entries()[j].re;
    let w = e
        .sub(&psi.as_vector().scaled(Complex64::new(r, 0.0)))
        .expect("same dimension");
    normalized(&w)
}

/// Lowest-index coordinate direction made Hermitian-orthogonal to `psi`.
fn horizontal_direction(psi: &UnitVector) -> HilbertVector {
    let n = psi.dim();
    let j = psi
        .entries()
        .iter()
        .position(|z| 1.0 - z.norm_sqr() > 0.25)
        .expect("at most one coordinate can carry more than 3/4 of a unit norm");
    let e = HilbertVector::basis(n, j).expect("index in range");
    let w = e
        .sub(&psi.as_vector().scaled(psi.entries()[j].conj()))
        .expect("same dimension");
    normalized(&w)
}

fn normalized(w: &HilbertVector) -> HilbertVector {
    w.scaled(Complex64::new(1.0 / w.norm(), 0.0))
}

/// Removes from `w` its component along `psi`, Hermitian or real.
fn strip(psi: &UnitVector, w: &HilbertVector, hermitian: bool) -> HilbertVector {
    let mut overlap = hermitian_inner(psi.as_vector(), w).expect("same dimension");
    if !hermitian {
        overlap = Complex64::new(overlap.re, 0.0);
    }
    w.sub(&psi.as_vector().scaled(overlap))
        .expect("same dimension")
}

/// Shortest great-circle arc from `psi` to `phi`.
///
/// Unique unless `phi = -psi`; antipodal endpoints get the deterministic
/// tangent along the lowest-index coordinate direction orthogonal to `psi`.
pub fn shortest_geodesic_sphere(psi: &UnitVector, phi: &UnitVector) -> Result<Geodesic> {
    GeometryError::check_dims(psi.dim(), phi.dim())?;
    let length = unit_euclidean_angle(psi, phi)?;
    let unique = length < PI - ANTIPODAL_TOL;
    let residual = strip(psi, &strip(psi, phi.as_vector(), false), false);
    let tangent = if !unique || residual.norm() <= DEGENERATE {
        real_orthogonal_direction(psi)
    } else {
        normalized(&residual)
    };
    Ok(Geodesic {
        space: GeodesicSpace::Sphere,
        start: psi.clone(),
        end: phi.clone(),
        length,
        unique,
        tangent,
    })
}

/// Shortest Fubini-Study geodesic from `x` to `y`, stored as its horizontal
/// lift from the canonical representative of `x`.
///
/// The representative of `y` is phase aligned so `<psi, phi'>` is real and
/// non-negative. For orthogonal endpoints (length `pi/2`, not unique) the
/// canonical representative of `y` is used as is.
pub fn shortest_geodesic_projective(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<Geodesic> {
    GeometryError::check_dims(x.dim(), y.dim())?;
    let psi = x.rep();
    let overlap = hermitian_inner(psi.as_vector(), y.rep().as_vector())?;
    let unique = overlap.norm() > ORTH_TOL;
    let aligned = if unique {
        y.rep().times_unimodular(overlap.conj() / overlap.norm())
    } else {
        y.rep().clone()
    };
    let length = unit_projective_angle(psi, &aligned)?;
    let residual = strip(psi, &strip(psi, aligned.as_vector(), true), true);
    let tangent = if residual.norm() <= DEGENERATE {
        horizontal_direction(psi)
    } else {
        normalized(&residual)
    };
    Ok(Geodesic {
        space: GeodesicSpace::Projective,
        start: psi.clone(),
        end: aligned,
        length,
        unique,
        tangent,
    })
}

/// The horizontal lift of a projective geodesic starting at `start_rep`.
///
/// Lifts through different representatives differ by a constant phase.
pub fn horizontal_lift(g: &Geodesic, start_rep: &UnitVector) -> Result<Geodesic> {
    if g.space != GeodesicSpace::Projective {
        return Err(GeometryError::InvalidArgument(
            "horizontal lifts are defined for projective geodesics".into(),
        ));
    }
    GeometryError::check_dims(g.start.dim(), start_rep.dim())?;
    let overlap = hermitian_inner(g.start.as_vector(), start_rep.as_vector())?;
    if (overlap.norm() - 1.0).abs() > UNIT_TOL.max(1e-9) {
        return Err(GeometryError::StartNotOnGeodesic);
    }
    let phase = overlap / overlap.norm();
    Ok(Geodesic {
        space: GeodesicSpace::Sphere,
        start: g.start.times_unimodular(phase),
        end: g.end.times_unimodular(phase),
        length: g.length,
        unique: true,
        tangent: g.tangent.scaled(phase),
    })
}
