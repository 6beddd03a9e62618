//! Exact symbolic engine for the 3-dimensional quantum Euclidean space.
//!
//! The crate implements, over the exact coefficient field Q(s) with q = s^2:
//!
//! * [`scalar`] — rational-function arithmetic (the coefficient field),
//! * [`rmatrix`] — the 9x9 braid matrix of the quantum rotation group, the
//!   covariant metric and the spectral projectors,
//! * [`algebra`] — the extended coordinate algebra with PBW normal ordering,
//!   equality decision, star involution and numeric evaluation,
//! * [`calculus`] — covariant 1-forms, the frame basis, the exterior algebra,
//!   the differential and the form-level involution,
//! * [`connection`] — tensor squares of 1-forms, generalized flips, the two
//!   torsion-free linear connections, metric and curvature,
//! * [`expr`] — a small expression language (parser, printer, evaluator),
//! * [`verify`] — the named identity-check suites behind `rq3 verify`.
//!
//! Everything is computed symbolically; numeric mode re-evaluates results at
//! exact rational values of s as a cross-check.

mod poly;

pub mod algebra;
pub mod calculus;
pub mod connection;
pub mod expr;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod verify;

pub use algebra::AlgElem;
pub use scalar::{Scalar, ScalarError};
