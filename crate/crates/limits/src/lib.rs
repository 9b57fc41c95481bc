//! Limit sets of finitely generated matrix groups on flag varieties,
//! free-group boundary maps and the numerical Anosov diagnostics
//! (transversality, dynamics preservation).

pub mod boundary;
pub mod dynamics;
mod error;
pub mod sample;
pub mod svg;
pub mod transversal;

pub use boundary::{boundary_map_free_group, CylinderFlag};
pub use dynamics::{dynamics_preserving_check, DynamicsRecord, DynamicsReport};
pub use error::LimitsError;
pub use sample::{flag_distance, sample_limit_set, LimitPoint, LimitSample, SampleStats, DEFAULT_MERGE_TOL};
pub use transversal::{transversality_margin, transversality_report, TransversalityReport, DEFAULT_PAIR_FLOOR};

pub type Result<T> = std::result::Result<T, LimitsError>;
