//! Exact generalized Tribonacci numbers, quaternions and spinors.
//!
//! * [`sequences`]: `V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}` and companion-matrix powers.
//! * [`quaternions`]: Hamilton algebra over exact rationals and Tribonacci quaternions.
//! * [`spinors`]: the map `σ(q) = [q3 + i q0; q1 + i q2]`, conjugations and breve matrices.
//! * [`analytic`]: Binet formulas in complex floating point and exact generating functions.
//! * [`identities`]: oracle-backed verification reports.
//! * [`cli`]: the `tribspin` command-line front end.

pub mod analytic;
pub mod cli;
pub mod error;
pub mod identities;
pub mod quaternions;
pub mod scalar;
pub mod sequences;
pub mod spinors;

pub use error::{Error, Result};
pub use identities::{IdentityId, Status, VerificationReport};
pub use quaternions::Quaternion;
pub use scalar::{Gauss, Scalar};
pub use sequences::SeqParams;
pub use spinors::{SpinMatrix2, Spinor};
