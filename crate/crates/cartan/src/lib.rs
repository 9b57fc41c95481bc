//! Cartan decompositions `g = k·exp(μ)·l`, Cartan projections, flag maps,
//! exterior powers and adjoint representations.

mod error;
pub mod exterior;
pub mod group;
pub mod kak;
pub mod lie;
pub mod xi;

pub use error::CartanError;
pub use exterior::exterior_power;
pub use group::{mu_gaps, Group, GroupTag, MuVector};
pub use kak::{kak, kak_batch, kak_complex, Compact, KakTriple};
pub use lie::{adjoint_rep, AlgebraTag, KillingForm, LieAlgebra};
pub use xi::{xi_from_kak, xi_theta, XiFlag};

pub type Result<T> = std::result::Result<T, CartanError>;
