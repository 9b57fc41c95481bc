//! Word-length balls of finitely generated matrix groups, divergence
//! profiles of their Cartan projections, and proximal elements.

pub mod ball;
pub mod bundled;
mod error;
pub mod gens;
pub mod profile;
pub mod proximal;

pub use ball::{enumerate_ball, extend_ball, BallElement, GroupBall, DEFAULT_DEDUP_TOL};
pub use error::WordsError;
pub use gens::{GeneratorSpec, Generators, Letter};
pub use profile::{divergence_profile, DivergenceProfile, GrowthFit, GrowthShape, SphereGaps};
pub use proximal::{proximal_elements, Proximal};

pub type Result<T> = std::result::Result<T, WordsError>;
