//! Geometry of the complex projective space `CP(H) = S(H) / S^1`.
//!
//! Points are stored through a phase-canonical unit representative and
//! subspaces through an orthonormal frame of the underlying linear subspace,
//! but every quantity exposed here (absolute inner product, Fubini-Study
//! distance, distance to a subspace, projection, geodesics) is independent
//! of the representative chosen.

mod geodesic;
mod lattice;
mod point;
mod subspace;

pub use geodesic::{
    horizontal_lift, shortest_geodesic_projective, shortest_geodesic_sphere, Geodesic,
    GeodesicSpace,
};
pub use lattice::{join, meet};
pub use point::{
    absolute_inner, euclidean_angle, fs_distance, is_orthogonal, pi1_normalize, pi2_project,
    pi3_project, projective_angle, sphere_distance, ProjectivePoint,
};
pub use subspace::{
    distance_to_subspace, orthogonal_complement, point_in_subspace, project_onto_subspace,
    subspace_from_event, Projection, ProjectionResult, ProjectiveSubspace,
};
