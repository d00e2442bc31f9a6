//! Exact counts and circle-method asymptotics for p-core partitions, with
//! high-precision verification of the accompanying trigonometric sums.
//!
//! Numeric routines are generic over [`Real`]; the crate-root aliases fix the
//! multiprecision instantiation used by the CLI and the acceptance suite.

pub mod arith;
pub mod asymptotics;
pub mod error;
pub mod fourier;
pub mod scalar;
pub mod series;
pub mod special;

pub use arith::Rational;
pub use error::{Error, Result};
pub use scalar::{Mpf, PrecisionConfig, Real};

/// Real value at the configured decimal precision.
pub type HPValue = Mpf;
/// Complex value at the configured decimal precision.
pub type HPComplex = scalar::Cx<Mpf>;
