//! Exact arithmetic layer: arbitrary-precision rationals, quadratic surds,
//! certified interval arithmetic and comparison of surds against nested
//! radical bound values.

pub mod bigrat;
pub mod expr;
pub mod interval;
pub mod radical;
pub mod squarefree;
pub mod surd;

pub use bigrat::BigRat;
pub use expr::parse_surd;
pub use interval::RatInterval;
pub use radical::{bound_cmp, BoundOrdering, BoundValue, RadExpr, SquareCertificate};
pub use surd::QuadSurd;
