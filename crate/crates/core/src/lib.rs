//! Exhaustive search and classification of nearly neighbourly families of
//! standard boxes (axis-aligned boxes where every pair touches along some
//! axis in exactly one point).
//!
//! The crate establishes, by explicit computation:
//!
//! * the maximum size of such a family in the plane (5) and in space (12),
//! * the complete list of incompressible maximum families in dimension 3,
//!   grouped by the two admissible axis profiles,
//! * their classification up to combinatorial equivalence and up to isometry
//!   of the ambient cube, including chirality,
//! * verification of the two known compressible exemplars.
//!
//! Everything is exact integer arithmetic on a half-unit grid; no floating
//! point is involved anywhere.

pub mod autgroup;
pub mod classify;
pub mod combination;
pub mod compress;
pub mod error;
pub mod fixtures;
pub mod named;
pub mod graphs;
pub mod interval;
pub mod level;
pub mod pipeline;
pub mod planar;
pub mod profiles;

pub use combination::Combination;
pub use error::Error;
pub use interval::{BoxN, Box2, Box3, EpsVector, Interval};
pub use level::Level;
