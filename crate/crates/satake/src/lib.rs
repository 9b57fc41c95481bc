//! Generalized Satake compactifications: the embedding `gK ↦ [τ(g)τ(g)*]`,
//! supports of representations, boundary orbit decompositions and limits of
//! chamber sequences.

mod error;
pub mod limit;
pub mod orbits;
pub mod point;
pub mod rep;

pub use error::SatakeError;
pub use limit::{satake_limit, satake_limit_batch, LimitConfig, SatakeLimit};
pub use orbits::{closure_edges, orbit_decomposition, orbits_dot, SatakeOrbit};
pub use point::{satake_embed, SatakePoint, SatakePointJson};
pub use rep::{chamber_vector, root_coordinates, support_of, Functor, Representation};

pub type Result<T> = std::result::Result<T, SatakeError>;
