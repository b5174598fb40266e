//! Finite-dimensional complex Hilbert space `C^n`.
//!
//! Vectors, the Hermitian and real inner products, events (orthogonal
//! projections `E = E^2 = E*`) and the operator formulas for quantum
//! probabilities. The `oracle_*` functions evaluate probabilities with matrix
//! arithmetic only and never touch the projective geometry, so they serve as
//! the reference the geometric formulas are checked against.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{GeometryError, Result};
use crate::tol::{FRAME_TOL, OP_TOL, ZERO_NORM};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// An element of `C^n`, `n >= 2`, with finite components.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertVector {
    entries: DVector<Complex64>,
}

impl HilbertVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(GeometryError::DimensionTooSmall(entries.len()));
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self {
            entries: DVector::from_vec(entries),
        })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![ZERO; dim])
    }

    /// Standard basis vector `e_{index+1}`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(GeometryError::InvalidArgument(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut v = Self::zeros(dim)?;
        v.entries[index] = ONE;
        Ok(v)
    }

    pub(crate) fn from_dvector(entries: DVector<Complex64>) -> Self {
        debug_assert!(entries.len() >= 2);
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        self.entries.as_slice()
    }

    pub(crate) fn as_dvector(&self) -> &DVector<Complex64> {
        &self.entries
    }

    pub fn norm_squared(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self::from_dvector(&self.entries * factor)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        GeometryError::check_dims(self.dim(), other.dim())?;
        Ok(Self::from_dvector(&self.entries + &other.entries))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        GeometryError::check_dims(self.dim(), other.dim())?;
        Ok(Self::from_dvector(&self.entries - &other.entries))
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        GeometryError::check_dims(self.dim(), other.dim())?;
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// `<a, b> = sum conj(a_i) b_i`, conjugate linear in the first slot.
pub fn hermitian_inner(a: &HilbertVector, b: &HilbertVector) -> Result<Complex64> {
    GeometryError::check_dims(a.dim(), b.dim())?;
    Ok(a.entries
        .iter()
        .zip(b.entries.iter())
        .fold(ZERO, |acc, (x, y)| acc + x.conj() * y))
}

/// `Re <a, b>`: the inner product of `C^n` viewed as the real space `R^{2n}`.
pub fn real_inner(a: &HilbertVector, b: &HilbertVector) -> Result<f64> {
    hermitian_inner(a, b).map(|z| z.re)
}

/// A vector of norm one, a point of the unit sphere `S(H)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector {
    vector: HilbertVector,
}

impl UnitVector {
    /// Normalizes `v`. Rejects vectors with norm below `1e-12`.
    pub fn new(v: HilbertVector) -> Result<Self> {
        let norm = v.norm();
        if norm.is_nan() || norm < ZERO_NORM {
            return Err(GeometryError::ZeroVector(norm));
        }
        Ok(Self {
            vector: v.scaled(Complex64::new(1.0 / norm, 0.0)),
        })
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        Ok(Self {
            vector: HilbertVector::basis(dim, index)?,
        })
    }

    /// Wraps a vector already known to be normalized.
    pub(crate) fn assume_unit(vector: HilbertVector) -> Self {
        debug_assert!((vector.norm() - 1.0).abs() < 1e-8);
        Self { vector }
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }

    pub fn entries(&self) -> &[Complex64] {
        self.vector.entries()
    }

    pub fn as_vector(&self) -> &HilbertVector {
        &self.vector
    }

    pub fn into_vector(self) -> HilbertVector {
        self.vector
    }

    /// `e^{i beta} psi`, another representative of the same projective point.
    pub fn with_phase(&self, beta: f64) -> Self {
        self.times_unimodular(Complex64::from_polar(1.0, beta))
    }

    pub(crate) fn times_unimodular(&self, z: Complex64) -> Self {
        Self {
            vector: self.vector.scaled(z),
        }
    }

    pub fn negated(&self) -> Self {
        self.times_unimodular(-ONE)
    }
}

/// Orthonormalizes `columns` with two passes of modified Gram-Schmidt.
///
/// Fails with [`GeometryError::RankDeficientFrame`] when a column has no
/// component (relative to its own norm) outside the span of the previous ones.
pub fn orthonormalize(dim: usize, columns: &[HilbertVector]) -> Result<Vec<UnitVector>> {
    let mut basis: Vec<DVector<Complex64>> = Vec::with_capacity(columns.len());
    for col in columns {
        GeometryError::check_dims(dim, col.dim())?;
        let original = col.norm();
        if original < ZERO_NORM {
            return Err(GeometryError::RankDeficientFrame);
        }
        let mut w = col.as_dvector().clone();
        for _ in 0..2 {
            for q in &basis {
                let coeff = q.dotc(&w);
                w.axpy(-coeff, q, ONE);
            }
        }
        let norm = w.norm();
        if norm <= FRAME_TOL * original {
            return Err(GeometryError::RankDeficientFrame);
        }
        w.unscale_mut(norm);
        basis.push(w);
    }
    Ok(basis
        .into_iter()
        .map(|q| UnitVector::assume_unit(HilbertVector::from_dvector(q)))
        .collect())
}

/// An orthogonal projection on `C^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    matrix: DMatrix<Complex64>,
    rank: usize,
}

impl Event {
    /// Validates `E = E*` and `E = E^2` to `1e-9` in the max norm.
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows != cols {
            return Err(GeometryError::NonSquare { rows, cols });
        }
        if rows < 2 {
            return Err(GeometryError::DimensionTooSmall(rows));
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(GeometryError::NonFinite);
        }
        let adjoint_residual = max_abs(&(&matrix - matrix.adjoint()));
        if adjoint_residual > OP_TOL {
            return Err(GeometryError::NotSelfAdjoint(adjoint_residual));
        }
        let idempotent_residual = max_abs(&(&matrix * &matrix - &matrix));
        if idempotent_residual > OP_TOL {
            return Err(GeometryError::NotIdempotent(idempotent_residual));
        }
        let rank = match diagonal_pattern(&matrix) {
            Some(pattern) => pattern.iter().filter(|&&on| on).count(),
            None => hermitian_eigen(&matrix)
                .eigenvalues
                .iter()
                .filter(|&&l| l > 0.5)
                .count(),
        };
        Ok(Self { matrix, rank })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(GeometryError::NonSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        let flat: Vec<Complex64> = rows.into_iter().flatten().collect();
        Self::from_matrix(DMatrix::from_row_slice(n, n, &flat))
    }

    pub fn identity(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(GeometryError::DimensionTooSmall(dim));
        }
        Ok(Self {
            matrix: DMatrix::identity(dim, dim),
            rank: dim,
        })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(GeometryError::DimensionTooSmall(dim));
        }
        Ok(Self {
            matrix: DMatrix::zeros(dim, dim),
            rank: 0,
        })
    }

    /// Coordinate projection: `diag(1, 0)` is `diagonal(&[true, false])`.
    ///
    /// # Panics
    /// If `pattern` has fewer than two entries.
    pub fn diagonal(pattern: &[bool]) -> Self {
        assert!(pattern.len() >= 2, "events live in dimension >= 2");
        let diag = DVector::from_iterator(
            pattern.len(),
            pattern.iter().map(|&on| if on { ONE } else { ZERO }),
        );
        Self {
            matrix: DMatrix::from_diagonal(&diag),
            rank: pattern.iter().filter(|&&on| on).count(),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// `I - E`.
    pub fn complement(&self) -> Event {
        let n = self.dim();
        Event {
            matrix: DMatrix::identity(n, n) - &self.matrix,
            rank: n - self.rank,
        }
    }

    pub fn apply(&self, v: &HilbertVector) -> Result<HilbertVector> {
        GeometryError::check_dims(self.dim(), v.dim())?;
        Ok(HilbertVector::from_dvector(&self.matrix * v.as_dvector()))
    }

    /// Max-norm distance between the two projection matrices.
    pub fn max_abs_diff(&self, other: &Event) -> Result<f64> {
        GeometryError::check_dims(self.dim(), other.dim())?;
        Ok(max_abs(&(&self.matrix - &other.matrix)))
    }

    /// Orthonormal bases of `Ran E` and `ker E`, from the spectral decomposition.
    pub(crate) fn spectral_frames(&self) -> (Vec<UnitVector>, Vec<UnitVector>) {
        let n = self.dim();
        let to_unit =
            |col: DVector<Complex64>| UnitVector::assume_unit(HilbertVector::from_dvector(col));
        if let Some(pattern) = diagonal_pattern(&self.matrix) {
            let (mut range, mut kernel) = (Vec::new(), Vec::new());
            for (i, on) in pattern.into_iter().enumerate() {
                let e = to_unit(DVector::from_fn(n, |r, _| if r == i { ONE } else { ZERO }));
                if on {
                    range.push(e);
                } else {
                    kernel.push(e);
                }
            }
            return (range, kernel);
        }
        let eigen = hermitian_eigen(&self.matrix);
        let (mut range, mut kernel) = (Vec::new(), Vec::new());
        for (i, &lambda) in eigen.eigenvalues.iter().enumerate() {
            let col = eigen.eigenvectors.column(i).into_owned();
            if lambda > 0.5 {
                range.push(to_unit(col));
            } else {
                kernel.push(to_unit(col));
            }
        }
        (range, kernel)
    }
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn hermitian_eigen(m: &DMatrix<Complex64>) -> SymmetricEigen<Complex64, nalgebra::Dyn> {
    let symmetrized = (m + m.adjoint()).unscale(2.0);
    SymmetricEigen::new(symmetrized)
}

/// For exactly diagonal 0/1 matrices, the on/off pattern of the diagonal.
fn diagonal_pattern(m: &DMatrix<Complex64>) -> Option<Vec<bool>> {
    let n = m.nrows();
    let mut pattern = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            if i == j {
                if z == ONE {
                    pattern.push(true);
                } else if z == ZERO {
                    pattern.push(false);
                } else {
                    return None;
                }
            } else if z != ZERO {
                return None;
            }
        }
    }
    Some(pattern)
}

/// `E v`.
pub fn apply_event(event: &Event, v: &HilbertVector) -> Result<HilbertVector> {
    event.apply(v)
}

/// `E = sum_k |c_k><c_k|` for the re-orthonormalized columns `c_k`.
pub fn event_from_frame(dim: usize, columns: &[UnitVector]) -> Result<Event> {
    if dim < 2 {
        return Err(GeometryError::DimensionTooSmall(dim));
    }
    let raw: Vec<HilbertVector> = columns.iter().map(|c| c.as_vector().clone()).collect();
    let frame = orthonormalize(dim, &raw)?;
    Ok(projector_from_orthonormal(dim, &frame))
}

pub(crate) fn projector_from_orthonormal(dim: usize, frame: &[UnitVector]) -> Event {
    let mut matrix = DMatrix::<Complex64>::zeros(dim, dim);
    for c in frame {
        let v = c.as_vector().as_dvector();
        matrix += v * v.adjoint();
    }
    Event {
        matrix,
        rank: frame.len(),
    }
}

/// `|phi><phi|`.
pub fn rank_one_event(phi: &UnitVector) -> Event {
    projector_from_orthonormal(phi.dim(), std::slice::from_ref(phi))
}

/// Born transition probability `|<psi, phi>|^2`.
pub fn oracle_born(psi: &UnitVector, phi: &UnitVector) -> Result<f64> {
    hermitian_inner(psi.as_vector(), phi.as_vector()).map(|z| z.norm_sqr())
}

/// `||E psi||^2`.
pub fn oracle_event_prob(psi: &UnitVector, event: &Event) -> Result<f64> {
    event.apply(psi.as_vector()).map(|v| v.norm_squared())
}

/// `||E_k ... E_2 E_1 psi||^2`, with `events[0]` applied first.
pub fn oracle_consecutive_prob(psi: &UnitVector, events: &[Event]) -> Result<f64> {
    let mut v = psi.as_vector().clone();
    for event in events {
        v = event.apply(&v)?;
    }
    Ok(v.norm_squared())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit(entries: Vec<Complex64>) -> UnitVector {
        UnitVector::new(HilbertVector::new(entries).unwrap()).unwrap()
    }

    fn assert_matrix(event: &Event, expected: &[&[Complex64]]) {
        for (i, row) in expected.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                let got = event.matrix()[(i, j)];
                assert!((got - want).norm() < 1e-12, "({i},{j}): {got} vs {want}");
            }
        }
    }

    #[test]
    fn hermitian_inner_examples() {
        let e1 = HilbertVector::basis(2, 0).unwrap();
        let e2 = HilbertVector::basis(2, 1).unwrap();
        assert_eq!(hermitian_inner(&e1, &e1).unwrap(), c(1.0, 0.0));
        assert_eq!(hermitian_inner(&e1, &e2).unwrap(), c(0.0, 0.0));

        let s = FRAC_1_SQRT_2;
        let a = HilbertVector::new(vec![c(s, 0.0), c(0.0, s)]).unwrap();
        let b = HilbertVector::new(vec![c(s, 0.0), c(0.0, -s)]).unwrap();
        // schoolbook: conj(s)*s + conj(i s)*(-i s) = s^2 + (-i s)(-i s) = s^2 - s^2
        let by_hand = c(s * s, 0.0) + c(0.0, -s) * c(0.0, -s);
        let got = hermitian_inner(&a, &b).unwrap();
        assert!((got - by_hand).norm() < 1e-15);
        assert!(got.norm() < 1e-15);
    }

    #[test]
    fn hermitian_inner_is_conjugate_linear_in_first_slot() {
        let a = HilbertVector::new(vec![c(1.0, 2.0), c(-0.5, 0.3)]).unwrap();
        let b = HilbertVector::new(vec![c(0.2, -1.0), c(3.0, 0.0)]).unwrap();
        let i = c(0.0, 1.0);
        let lhs = hermitian_inner(&a.scaled(i), &b).unwrap();
        let rhs = i.conj() * hermitian_inner(&a, &b).unwrap();
        assert!((lhs - rhs).norm() < 1e-14);
        let lin = hermitian_inner(&a, &b.scaled(i)).unwrap();
        assert!((lin - i * hermitian_inner(&a, &b).unwrap()).norm() < 1e-14);
    }

    #[test]
    fn inner_dimension_mismatch() {
        let a = HilbertVector::basis(2, 0).unwrap();
        let b = HilbertVector::basis(3, 0).unwrap();
        assert_eq!(
            hermitian_inner(&a, &b),
            Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(real_inner(&a, &b).is_err());
    }

    #[test]
    fn real_inner_examples() {
        let psi = unit(vec![c(0.3, 0.4), c(-0.1, 0.8)]);
        assert!((real_inner(psi.as_vector(), psi.as_vector()).unwrap() - 1.0).abs() < 1e-15);
        let e1 = HilbertVector::basis(2, 0).unwrap();
        let ie1 = e1.scaled(c(0.0, 1.0));
        assert_eq!(real_inner(&e1, &ie1).unwrap(), 0.0);
        let e2 = HilbertVector::basis(2, 1).unwrap();
        assert_eq!(real_inner(&e1, &e2).unwrap(), 0.0);
    }

    #[test]
    fn vector_construction_guards() {
        assert_eq!(
            HilbertVector::from_real(&[1.0]),
            Err(GeometryError::DimensionTooSmall(1))
        );
        assert_eq!(
            HilbertVector::from_real(&[1.0, f64::NAN]),
            Err(GeometryError::NonFinite)
        );
        let tiny = HilbertVector::from_real(&[1e-13, 0.0]).unwrap();
        assert!(matches!(
            UnitVector::new(tiny),
            Err(GeometryError::ZeroVector(_))
        ));
        let v = UnitVector::new(HilbertVector::from_real(&[3.0, 4.0]).unwrap()).unwrap();
        assert!((v.entries()[0].re - 0.6).abs() < 1e-15);
    }

    #[test]
    fn apply_event_examples() {
        let v = HilbertVector::new(vec![c(0.3, -1.0), c(2.0, 0.5)]).unwrap();
        let id = Event::identity(2).unwrap();
        assert_eq!(apply_event(&id, &v).unwrap(), v);
        let zero = Event::zero(2).unwrap();
        assert_eq!(apply_event(&zero, &v).unwrap().norm(), 0.0);
        let e = Event::diagonal(&[true, false]);
        let got = apply_event(&e, &v).unwrap();
        assert_eq!(got.entries(), &[c(0.3, -1.0), c(0.0, 0.0)]);
        let twice = apply_event(&e, &got).unwrap();
        assert!(twice.max_abs_diff(&got).unwrap() <= OP_TOL);
        assert!(apply_event(&e, &HilbertVector::basis(3, 0).unwrap()).is_err());
    }

    #[test]
    fn event_from_frame_examples() {
        let e1 = UnitVector::basis(2, 0).unwrap();
        let e2 = UnitVector::basis(2, 1).unwrap();
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let half = c(0.5, 0.0);
        assert_matrix(
            &event_from_frame(2, std::slice::from_ref(&e1)).unwrap(),
            &[&[one, zero], &[zero, zero]],
        );
        let full = event_from_frame(2, &[e1.clone(), e2]).unwrap();
        assert_matrix(&full, &[&[one, zero], &[zero, one]]);
        assert_eq!(full.rank(), 2);
        let diag = unit(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        assert_matrix(
            &event_from_frame(2, &[diag]).unwrap(),
            &[&[half, half], &[half, half]],
        );
    }

    #[test]
    fn event_from_frame_rejects_dependent_columns() {
        let a = unit(vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let b = a.with_phase(0.7);
        assert_eq!(
            event_from_frame(3, &[a, b]),
            Err(GeometryError::RankDeficientFrame)
        );
    }

    #[test]
    fn event_from_frame_reorthonormalizes() {
        let a = unit(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let b = unit(vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let e = event_from_frame(3, &[a, b]).unwrap();
        assert_eq!(e.rank(), 2);
        let expect = Event::diagonal(&[true, true, false]);
        assert!(e.max_abs_diff(&expect).unwrap() < 1e-12);
        // the result passes the full validity gate
        assert!(Event::from_matrix(e.matrix().clone()).is_ok());
    }

    #[test]
    fn rank_one_event_examples() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let e = rank_one_event(&UnitVector::basis(3, 0).unwrap());
        assert_matrix(
            &e,
            &[&[one, zero, zero], &[zero, zero, zero], &[zero, zero, zero]],
        );
        assert_eq!(e.rank(), 1);
        let e = rank_one_event(&UnitVector::basis(2, 1).unwrap());
        assert_matrix(&e, &[&[zero, zero], &[zero, one]]);
        let phi = unit(vec![c(1.0, 0.0), c(0.0, 1.0)]);
        let e = rank_one_event(&phi);
        assert_matrix(
            &e,
            &[&[c(0.5, 0.0), c(0.0, -0.5)], &[c(0.0, 0.5), c(0.5, 0.0)]],
        );
    }

    #[test]
    fn from_matrix_validates() {
        let not_adjoint =
            DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            Event::from_matrix(not_adjoint),
            Err(GeometryError::NotSelfAdjoint(_))
        ));
        let not_idem =
            DMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            Event::from_matrix(not_idem),
            Err(GeometryError::NotIdempotent(_))
        ));
        let rect = DMatrix::<Complex64>::zeros(2, 3);
        assert!(matches!(
            Event::from_matrix(rect),
            Err(GeometryError::NonSquare { .. })
        ));
        let half = c(0.5, 0.0);
        let ok =
            Event::from_matrix(DMatrix::from_row_slice(2, 2, &[half, half, half, half])).unwrap();
        assert_eq!(ok.rank(), 1);
    }

    #[test]
    fn spectral_frames_split_range_and_kernel() {
        let phi = unit(vec![c(1.0, 0.0), c(0.0, 1.0), c(1.0, -1.0)]);
        let e = Event::from_matrix(rank_one_event(&phi).matrix().clone()).unwrap();
        let (range, kernel) = e.spectral_frames();
        assert_eq!((range.len(), kernel.len()), (1, 2));
        let overlap = hermitian_inner(range[0].as_vector(), phi.as_vector())
            .unwrap()
            .norm();
        assert!((overlap - 1.0).abs() < 1e-12);
        for k in &kernel {
            assert!(e.apply(k.as_vector()).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn oracle_examples() {
        let e1 = UnitVector::basis(2, 0).unwrap();
        let e2 = UnitVector::basis(2, 1).unwrap();
        let plus = unit(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        assert!((oracle_born(&e1, &e1).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(oracle_born(&e1, &e2).unwrap(), 0.0);
        assert!((oracle_born(&e1, &plus).unwrap() - 0.5).abs() < 1e-15);

        let id = Event::identity(2).unwrap();
        let zero = Event::zero(2).unwrap();
        let p = Event::diagonal(&[true, false]);
        let q = Event::diagonal(&[false, true]);
        assert!((oracle_event_prob(&plus, &id).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(oracle_event_prob(&plus, &zero).unwrap(), 0.0);
        assert!((oracle_event_prob(&plus, &p).unwrap() - 0.5).abs() < 1e-15);

        assert!((oracle_consecutive_prob(&plus, &[id.clone(), id]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(
            oracle_consecutive_prob(&plus, &[p.clone(), q]).unwrap(),
            0.0
        );
        assert!((oracle_consecutive_prob(&plus, &[p]).unwrap() - 0.5).abs() < 1e-15);
        assert!((oracle_consecutive_prob(&plus, &[]).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn consecutive_order_is_time_order() {
        // E first then F: ||F E psi||^2, not ||E F psi||^2
        let psi = UnitVector::basis(2, 0).unwrap();
        let plus = unit(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        let e = rank_one_event(&plus);
        let f = Event::diagonal(&[false, true]);
        let ef = oracle_consecutive_prob(&psi, &[e.clone(), f.clone()]).unwrap();
        let fe = oracle_consecutive_prob(&psi, &[f, e]).unwrap();
        assert!((ef - 0.25).abs() < 1e-15);
        assert_eq!(fe, 0.0);
    }
}
