//! Exact linear algebra for Hopf trusses, their cocycles and modules.

pub mod algfile;
pub mod coalgebra;
pub mod cocycle;
pub mod error;
pub mod field;
pub mod hopfmodule;
pub mod hopftruss;
pub mod linalg;
pub mod module;
pub mod report;
pub mod settruss;

pub use error::{AlgebraError, Result};
pub use field::{Field, FieldSpec, Fp, Rational};
pub use linalg::LinMap;
pub use report::{Check, Residual, VerificationReport};

/// Linear maps over the rationals.
pub type QMap = LinMap<Rational>;
/// Linear maps over a prime field.
pub type FpMap = LinMap<Fp>;
