//! Seeded random generators and brute-force checks.
//!
//! The generators here produce Haar-random states, random events of a given
//! rank and random points inside a subspace. [`infimum_oracle`] estimates
//! `d(x, S)` by direct search over points of `S`, and the `verify_*` drivers
//! compare the geometric formulas against the operator formulas over many
//! seeded trials.

mod oracle;
mod rng;
mod verify;

pub use oracle::{infimum_oracle, InfimumEstimate};
pub use rng::{
    random_event, random_point_in, random_scalar, random_subspace, random_unit_vector,
    random_unitary_frame, RandomSource, RNG_ALGORITHM,
};
pub use verify::{
    verify_probability_laws, verify_projection_theorem, CheckSummary, Failure, VerificationReport,
};
