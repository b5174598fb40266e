//! Quantum probability computed from the Riemannian geometry of complex
//! projective space.
//!
//! States are points of `CP(H)`, events are projective subspaces, and every
//! probability (Born transition, single event, consecutive events, conditional)
//! is evaluated from Fubini-Study distances and geometric projections alone.
//! The [`hilbert`] module carries the operator formulas (`|<psi,phi>|^2`,
//! `||E psi||^2`, `||F E psi||^2`) used as an independent oracle, and the
//! [`harness`] module cross-checks both paths on seeded random inputs.
//!
//! ```
//! use projective_probability::hilbert::{Event, HilbertVector};
//! use projective_probability::projective::{pi3_project, ProjectiveSubspace};
//! use projective_probability::probability::single_event_probability;
//!
//! let x = pi3_project(&HilbertVector::from_real(&[1.0, 1.0]).unwrap()).unwrap();
//! let s = ProjectiveSubspace::from_event(&Event::diagonal(&[true, false]));
//! let p = single_event_probability(&x, &s).unwrap();
//! assert!((p.value - 0.5).abs() < 1e-12);
//! ```

pub mod cli;
pub mod error;
pub mod harness;
pub mod hilbert;
pub mod probability;
pub mod projective;
pub mod tol;

pub use error::{GeometryError, Result};
