//! Meet and join in the lattice of projective subspaces.
//!
//! Both go through a singular value decomposition; singular values at or
//! below `1e-9` are treated as zero. The decomposition is faer's, which stays
//! accurate on the repeated singular values that overlapping frames produce.

use faer::Mat;
use nalgebra::DMatrix;
use num_complex::Complex64;

use super::subspace::ProjectiveSubspace;
use crate::error::{GeometryError, Result};
use crate::hilbert::{HilbertVector, UnitVector};
use crate::tol::RANK_TOL;

fn column_to_unit(col: impl Iterator<Item = Complex64>) -> UnitVector {
    UnitVector::new(HilbertVector::new(col.collect()).expect("finite column"))
        .expect("singular vectors have unit norm")
}

/// Full SVD `m = U diag(s) V*`, singular values in nonincreasing order.
fn svd(m: &DMatrix<Complex64>) -> Result<faer::linalg::solvers::Svd<Complex64>> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
        .svd()
        .map_err(|e| {
            GeometryError::InvalidArgument(format!("singular value decomposition failed: {e:?}"))
        })
}

/// `S1 ∧ S2`, the image of `Ran E1 ∩ Ran E2`.
///
/// The intersection is the null space of the stacked complements
/// `[(I - E1); (I - E2)]`.
pub fn meet(s1: &ProjectiveSubspace, s2: &ProjectiveSubspace) -> Result<ProjectiveSubspace> {
    let n = s1.ambient_dim();
    GeometryError::check_dims(n, s2.ambient_dim())?;
    if s1.is_empty() || s2.is_empty() {
        return ProjectiveSubspace::empty(n);
    }
    let c1 = s1.event().complement();
    let c2 = s2.event().complement();
    let mut stacked = DMatrix::<Complex64>::zeros(2 * n, n);
    stacked.rows_mut(0, n).copy_from(c1.matrix());
    stacked.rows_mut(n, n).copy_from(c2.matrix());
    let decomposition = svd(&stacked)?;
    let sigma = decomposition.S().column_vector();
    let v = decomposition.V();
    let null: Vec<UnitVector> = (0..n)
        .filter(|&i| sigma[i].re <= RANK_TOL)
        .map(|i| column_to_unit((0..n).map(|r| v[(r, i)])))
        .collect();
    ProjectiveSubspace::from_frame(n, &null)
}

/// `S1 ∨ S2`, the image of `span(Ran E1 ∪ Ran E2)`.
pub fn join(s1: &ProjectiveSubspace, s2: &ProjectiveSubspace) -> Result<ProjectiveSubspace> {
    let n = s1.ambient_dim();
    GeometryError::check_dims(n, s2.ambient_dim())?;
    if s1.is_empty() {
        return Ok(s2.clone());
    }
    if s2.is_empty() {
        return Ok(s1.clone());
    }
    let columns: Vec<&UnitVector> = s1.frame().iter().chain(s2.frame()).collect();
    let a = DMatrix::from_fn(n, columns.len(), |r, c| columns[c].entries()[r]);
    let decomposition = svd(&a)?;
    let sigma = decomposition.S().column_vector();
    let u = decomposition.U();
    let range: Vec<UnitVector> = (0..sigma.nrows())
        .filter(|&i| sigma[i].re > RANK_TOL)
        .map(|i| column_to_unit((0..n).map(|r| u[(r, i)])))
        .collect();
    ProjectiveSubspace::from_frame(n, &range)
}
