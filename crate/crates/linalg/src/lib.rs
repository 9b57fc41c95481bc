pub mod angles;
mod error;
pub mod exec;
pub mod form;
pub mod frame;
pub mod json;
pub mod sample;
pub mod svd;

pub use angles::{
    contains, dist_grassmann, dist_projective, dist_to_incidence, intersects, principal_sines,
};
pub use error::LinalgError;
pub use exec::Strategy;
pub use form::{signature, restrict_kernel, Field, Signature, WittForm};
pub use frame::{FlagPoint, Frame};

/// Dense real matrix used throughout the workspace.
pub type Mat = nalgebra::DMatrix<f64>;
/// Dense complex matrix.
pub type CMat = nalgebra::DMatrix<num_complex::Complex64>;
/// Dense real column vector.
pub type Vector = nalgebra::DVector<f64>;

/// Default relative tolerance for rank and intersection decisions.
pub const DEFAULT_TOL: f64 = 1e-9;

pub type Result<T> = std::result::Result<T, LinalgError>;
