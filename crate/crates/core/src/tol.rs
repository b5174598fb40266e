//! Numerical tolerances shared by every module.

/// Allowed deviation of a unit vector's norm from 1.
pub const UNIT_TOL: f64 = 1e-10;
/// Max-norm residual allowed in `E = E*` and `E = E^2`.
pub const OP_TOL: f64 = 1e-9;
/// Orthonormality tolerance for subspace frames.
pub const FRAME_TOL: f64 = 1e-9;
/// Absolute inner product at or below which two points are orthogonal.
pub const ORTH_TOL: f64 = 1e-9;
/// Norms below this are treated as the zero vector.
pub const ZERO_NORM: f64 = 1e-12;
/// Components with modulus above this are candidates for the phase anchor.
pub const PHASE_ANCHOR: f64 = 1e-10;
/// Residual allowed in subspace membership tests.
pub const MEMBERSHIP_TOL: f64 = 1e-8;
/// Singular values at or below this count as zero in rank decisions.
pub const RANK_TOL: f64 = 1e-9;
/// Smallest conditioning probability for which a conditional is defined.
pub const COND_TOL: f64 = 1e-12;
