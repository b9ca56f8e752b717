//! Continued-fraction engine: canonical expansions, convergents, tails,
//! the measure function psi and the approximation qualities.

pub mod expansion;
pub mod literal;
pub mod measure;

pub use expansion::{CFExpansion, Convergent};
pub use literal::parse_cf;
pub use measure::{approx_quality, left_limit, psi, psi_brute_force, quality_sweep, MeasureSample};
