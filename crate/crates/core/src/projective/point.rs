use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{GeometryError, Result};
use crate::hilbert::{hermitian_inner, HilbertVector, UnitVector};
use crate::tol::{ORTH_TOL, PHASE_ANCHOR};

/// A point of `CP(H)`, i.e. a ray of `C^n`.
///
/// The stored representative has its first component of modulus above
/// `1e-10` real and positive, so two points built from `psi` and
/// `lambda * psi` have (numerically) identical representatives.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    rep: UnitVector,
}

impl ProjectivePoint {
    pub fn rep(&self) -> &UnitVector {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// Componentwise comparison of the canonical representatives.
    pub fn approx_eq(&self, other: &ProjectivePoint, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .rep
                .as_vector()
                .max_abs_diff(other.rep.as_vector())
                .is_ok_and(|d| d <= tol)
    }
}

fn canonical_phase(psi: &UnitVector) -> UnitVector {
    let anchor = psi.entries().iter().position(|z| z.norm() > PHASE_ANCHOR);
    let Some(j) = anchor else {
        return psi.clone();
    };
    let z = psi.entries()[j];
    let modulus = z.norm();
    let mut entries: Vec<Complex64> = psi
        .entries()
        .iter()
        .map(|w| w * (z.conj() / modulus))
        .collect();
    entries[j] = Complex64::new(modulus, 0.0);
    UnitVector::assume_unit(HilbertVector::new(entries).expect("entries stay finite"))
}

/// `pi_1(v) = v / ||v||`.
pub fn pi1_normalize(v: &HilbertVector) -> Result<UnitVector> {
    UnitVector::new(v.clone())
}

/// `pi_2`: the class of a unit vector modulo `S^1`.
pub fn pi2_project(psi: &UnitVector) -> ProjectivePoint {
    ProjectivePoint {
        rep: canonical_phase(psi),
    }
}

/// `pi_3 = pi_2 . pi_1`.
pub fn pi3_project(v: &HilbertVector) -> Result<ProjectivePoint> {
    pi1_normalize(v).map(|psi| pi2_project(&psi))
}

/// `|<x, y>|`, well defined on `CP(H)`.
pub fn absolute_inner(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<f64> {
    hermitian_inner(x.rep.as_vector(), y.rep.as_vector()).map(|z| z.norm().min(1.0))
}

/// Projective angle between two unit vectors, `arccos |<psi, phi>|`.
///
/// Below about `0.45` rad (`|<psi,phi>| > 0.9`) this uses the chord to the
/// phase-aligned vector,
/// `2 asin(||phi - u psi|| / 2)` with `u = <psi,phi> / |<psi,phi>|`, and
/// elsewhere `atan2(||phi - <psi,phi> psi||, |<psi,phi>|)`. Both agree with the
/// arccos form but stay accurate where it loses digits, and give exactly `0`
/// for identical vectors and exactly `pi/2` for orthogonal ones.
pub(crate) fn unit_projective_angle(psi: &UnitVector, phi: &UnitVector) -> Result<f64> {
    let overlap = hermitian_inner(psi.as_vector(), phi.as_vector())?;
    let modulus = overlap.norm();
    if modulus > CHORD_THRESHOLD {
        let chord = phi
            .as_vector()
            .sub(&psi.as_vector().scaled(overlap / modulus))?;
        return Ok(chord_angle(chord.norm()));
    }
    let residual = phi.as_vector().sub(&psi.as_vector().scaled(overlap))?;
    Ok(residual.norm().atan2(modulus))
}

/// Euclidean angle between unit vectors, `arccos Re <psi, phi>`.
pub(crate) fn unit_euclidean_angle(psi: &UnitVector, phi: &UnitVector) -> Result<f64> {
    let overlap = hermitian_inner(psi.as_vector(), phi.as_vector())?.re;
    if overlap > CHORD_THRESHOLD {
        return Ok(chord_angle(phi.as_vector().sub(psi.as_vector())?.norm()));
    }
    if overlap < -CHORD_THRESHOLD {
        return Ok(PI - chord_angle(phi.as_vector().add(psi.as_vector())?.norm()));
    }
    let residual = phi
        .as_vector()
        .sub(&psi.as_vector().scaled(Complex64::new(overlap, 0.0)))?;
    Ok(residual.norm().atan2(overlap))
}

/// Cosine above which angles are computed from chords rather than residuals.
const CHORD_THRESHOLD: f64 = 0.9;

/// Angle subtended by a chord of the unit sphere.
fn chord_angle(chord: f64) -> f64 {
    2.0 * (chord / 2.0).min(1.0).asin()
}

/// Fubini-Study distance `d(x, y) = arccos |<x, y>|`, in `[0, pi/2]`.
pub fn fs_distance(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<f64> {
    unit_projective_angle(&x.rep, &y.rep)
}

/// Great-circle distance on `S(H)`, in `[0, pi]`.
pub fn sphere_distance(psi: &UnitVector, phi: &UnitVector) -> Result<f64> {
    unit_euclidean_angle(psi, phi)
}

pub fn projective_angle(phi: &HilbertVector, psi: &HilbertVector) -> Result<f64> {
    GeometryError::check_dims(phi.dim(), psi.dim())?;
    unit_projective_angle(&pi1_normalize(phi)?, &pi1_normalize(psi)?)
}

/// Coincides with [`projective_angle`] iff `<phi, psi> >= 0`.
pub fn euclidean_angle(phi: &HilbertVector, psi: &HilbertVector) -> Result<f64> {
    GeometryError::check_dims(phi.dim(), psi.dim())?;
    unit_euclidean_angle(&pi1_normalize(phi)?, &pi1_normalize(psi)?)
}

pub fn is_orthogonal(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<bool> {
    absolute_inner(x, y).map(|a| a <= ORTH_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn vec_of(entries: &[Complex64]) -> HilbertVector {
        HilbertVector::new(entries.to_vec()).unwrap()
    }

    fn point(entries: &[Complex64]) -> ProjectivePoint {
        pi3_project(&vec_of(entries)).unwrap()
    }

    #[test]
    fn pi1_examples() {
        let u = pi1_normalize(&HilbertVector::from_real(&[2.0, 0.0]).unwrap()).unwrap();
        assert_eq!(u.entries(), &[c(1.0, 0.0), c(0.0, 0.0)]);
        let u = pi1_normalize(&vec_of(&[c(0.0, 0.0), c(0.0, 3.0)])).unwrap();
        assert_eq!(u.entries(), &[c(0.0, 0.0), c(0.0, 1.0)]);
        assert!(matches!(
            pi1_normalize(&HilbertVector::zeros(2).unwrap()),
            Err(GeometryError::ZeroVector(_))
        ));
    }

    #[test]
    fn pi2_examples() {
        let e1 = UnitVector::basis(2, 0).unwrap();
        assert_eq!(pi2_project(&e1).rep(), &e1);
        let ie1 = e1.with_phase(FRAC_PI_2);
        assert!(pi2_project(&ie1).approx_eq(&pi2_project(&e1), 1e-15));
        let s = FRAC_1_SQRT_2;
        let v = UnitVector::new(vec_of(&[c(0.0, s), c(0.0, s)])).unwrap();
        let rep = pi2_project(&v);
        assert!((rep.rep().entries()[0] - c(s, 0.0)).norm() < 1e-15);
        assert!((rep.rep().entries()[1] - c(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn canonical_phase_skips_negligible_leading_components() {
        let v = UnitVector::new(vec_of(&[c(1e-12, 1e-12), c(0.0, -2.0)])).unwrap();
        let x = pi2_project(&v);
        assert!(x.rep().entries()[1].re > 0.0);
        assert_eq!(x.rep().entries()[1].im, 0.0);
    }

    #[test]
    fn pi3_examples() {
        let x = pi3_project(&HilbertVector::from_real(&[5.0, 0.0]).unwrap()).unwrap();
        assert_eq!(x.rep(), &UnitVector::basis(2, 0).unwrap());
        let x = point(&[c(0.0, 0.0), c(2.0, 2.0)]);
        assert!(x.approx_eq(&pi2_project(&UnitVector::basis(2, 1).unwrap()), 1e-15));
        assert!(pi3_project(&HilbertVector::zeros(2).unwrap()).is_err());
    }

    #[test]
    fn absolute_inner_examples() {
        let e1 = point(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let e2 = point(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let plus = point(&[c(1.0, 0.0), c(1.0, 0.0)]);
        assert!((absolute_inner(&plus, &plus).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(absolute_inner(&e1, &e2).unwrap(), 0.0);
        assert!((absolute_inner(&e1, &plus).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
        let other = point(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(absolute_inner(&e1, &other).is_err());
    }

    #[test]
    fn fs_distance_examples() {
        let e1 = point(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let e2 = point(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let plus = point(&[c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(fs_distance(&plus, &plus).unwrap(), 0.0);
        assert_eq!(fs_distance(&e1, &e2).unwrap(), FRAC_PI_2);
        assert!((fs_distance(&e1, &plus).unwrap() - FRAC_PI_4).abs() < 1e-15);
        // arccos form agrees where it is well conditioned
        let y = point(&[c(0.3, 0.1), c(-0.2, 0.9)]);
        let via_arccos = absolute_inner(&plus, &y).unwrap().acos();
        assert!((fs_distance(&plus, &y).unwrap() - via_arccos).abs() < 1e-13);
    }

    #[test]
    fn sphere_distance_examples() {
        let psi = UnitVector::new(vec_of(&[c(0.6, 0.0), c(0.0, 0.8)])).unwrap();
        assert_eq!(sphere_distance(&psi, &psi).unwrap(), 0.0);
        assert_eq!(sphere_distance(&psi, &psi.negated()).unwrap(), PI);
        let e1 = UnitVector::basis(2, 0).unwrap();
        let e2 = UnitVector::basis(2, 1).unwrap();
        assert_eq!(sphere_distance(&e1, &e2).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn angle_examples() {
        let phi = vec_of(&[c(0.4, -0.3), c(1.1, 0.2)]);
        let scaled = phi.scaled(c(-2.0, 5.0));
        assert!(projective_angle(&phi, &scaled).unwrap().abs() < 1e-7);
        let a = HilbertVector::from_real(&[1.0, 0.0]).unwrap();
        let b = HilbertVector::from_real(&[0.0, 3.0]).unwrap();
        assert_eq!(projective_angle(&a, &b).unwrap(), FRAC_PI_2);
        let b = HilbertVector::from_real(&[1.0, 1.0]).unwrap();
        assert!((projective_angle(&a, &b).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!(projective_angle(&a, &HilbertVector::zeros(2).unwrap()).is_err());

        assert_eq!(euclidean_angle(&phi, &phi).unwrap(), 0.0);
        assert!((euclidean_angle(&phi, &phi.scaled(c(-1.0, 0.0))).unwrap() - PI).abs() < 1e-15);
        let ia = a.scaled(c(0.0, 1.0));
        assert_eq!(euclidean_angle(&a, &ia).unwrap(), FRAC_PI_2);
        assert_eq!(projective_angle(&a, &ia).unwrap(), 0.0);
    }

    #[test]
    fn angles_coincide_iff_inner_is_nonnegative() {
        let phi = vec_of(&[c(0.4, 0.0), c(0.2, 0.7)]);
        // rotate psi's phase so <phi, psi> is real positive
        let psi = vec_of(&[c(0.9, 0.1), c(-0.3, 0.5)]);
        let z = hermitian_inner(&phi, &psi).unwrap();
        let aligned = psi.scaled(z.conj() / z.norm());
        assert!(
            (euclidean_angle(&phi, &aligned).unwrap() - projective_angle(&phi, &aligned).unwrap())
                .abs()
                < 1e-14
        );
        assert!(
            euclidean_angle(&phi, &psi).unwrap() > projective_angle(&phi, &psi).unwrap() + 1e-3
        );
    }

    #[test]
    fn orthogonality_examples() {
        let e1 = point(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let e2 = point(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let plus = point(&[c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(is_orthogonal(&e1, &e2).unwrap());
        assert!(is_orthogonal(&e2, &e1).unwrap());
        assert!(!is_orthogonal(&e1, &e1).unwrap());
        assert!(!is_orthogonal(&e1, &plus).unwrap());
    }
}
