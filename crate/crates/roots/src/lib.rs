//! Root-system data and the combinatorics of Satake boundary orbits.

mod chamber;
mod error;
mod satake;
mod system;
mod table;
mod theta;

pub use chamber::{chamber_sequence_limit, ChamberLimit, ChamberThresholds};
pub use error::RootsError;
pub use satake::{minimal_admissible_superset, nucleus_saturation, opposition_star, tau_admissible_sets};
pub use system::{build_root_system, RootSystem, RootType};
pub use table::{table1_all, table1_check, table1_default_rows, Table1Check, Table1Entry};
pub use theta::ThetaSet;

pub type Result<T> = std::result::Result<T, RootsError>;
