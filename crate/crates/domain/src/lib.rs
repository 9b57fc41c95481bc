//! The compactification `X̄_b` of the symmetric space of `O(p,q)` by
//! nonpositive `q`-planes: membership and strata, bad sets attached to limit
//! sets, the dynamical checks behind proper discontinuity and cocompactness,
//! and the subalgebra compactification points `r_θ`.

pub mod badset;
pub mod coverage;
mod error;
pub mod expansion;
pub mod incidence;
pub mod relation;
pub mod subalgebra;
pub mod xbar;

pub use badset::{distance_to_bad_set, in_bad_set, incidence_distance, BadSetHit, BadSetVariant};
pub use coverage::{orbit_coverage, sample_domain_points, CoverageConfig, CoveragePoint};
pub use error::DomainError;
pub use expansion::{expansion_certificate, ray_prefixes, ExpansionCertificate, ExpansionConfig, Neighborhood};
pub use incidence::{incidence_brute_force, incidence_verdict, IncidenceReport, IncidenceVerdict};
pub use relation::{dynamical_relation_scan, RelationFlag, RelationScan, RelationScanConfig, DEFAULT_ACCUMULATION_TOL};
pub use subalgebra::{
    bracket_residual, killing_kernel, killing_signature, nilpotent_incidence_check, subalgebra_point,
    NilpotentIncidence, SubalgebraPoint,
};
pub use xbar::{complex_in_xbar, in_xbar, kernel_of, outside_theorem_hypotheses, CompactPoint};

pub type Result<T> = std::result::Result<T, DomainError>;
