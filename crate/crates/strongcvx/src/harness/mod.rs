//! Reproducible verification harness.
//!
//! The harness turns every operation in this crate into a *named check*: a
//! seeded sampling loop that records ordered `(lhs, rhs)` pairs under an
//! explicit tolerance policy and emits a [`VerificationReport`]. Reports
//! serialize to text, JSON and CSV, echo their full configuration, and are
//! bit-for-bit reproducible for a fixed seed.

pub mod checks;
pub mod config;
pub mod report;
pub mod sampling;
pub mod tolerance;

pub use checks::{find_check, run_suite, spectrum_box_for, CheckDef, REGISTRY};
pub use config::{parse_config_text, FileConfig, RunConfig};
pub use report::{emit_report, ReportFormat, TrialRecorder, VerificationReport};
pub use sampling::{
    rng_for, sample_floored_weights, sample_points, sample_unit_vector, sample_weights,
    RNG_ALGORITHM,
};
pub use tolerance::ToleranceConfig;
