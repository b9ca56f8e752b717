//! Exact continued fractions, quadratic surds and the discrete parts of the
//! Dirichlet and Lagrange spectra.
//!
//! Everything here computes in exact arithmetic: surd fields for the values,
//! certified rational enclosures for nested radicals, and integer sign
//! determination for every ordering. Floating point appears nowhere in a
//! result path.

pub mod bounds;
pub mod cf;
pub mod error;
pub mod exact;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use cf::{CFExpansion, Convergent};
pub use exact::{BigRat, BoundOrdering, BoundValue, QuadSurd, RadExpr, RatInterval};
