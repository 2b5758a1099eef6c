//! Exact rational toolkit for measurement compatibility on polytopic state
//! spaces.
//!
//! A state space is a polytope `K` given by its vertices with rational
//! coordinates. Observables are affine functionals on `K`, measurements are
//! finite families of non-negative functionals summing to the unit, and every
//! question the crate answers — joint measurability, orthogonality, Riesz
//! decomposability — reduces to a rational linear program whose outcome is
//! either an explicit witness or a machine-checkable Farkas certificate.
//!
//! The headline fact the scan harness exercises: every pair of 2-outcome
//! measurements on `K` is compatible exactly when `K` is a simplex. See the
//! `book/` guide for a walkthrough.
//!
//! ```
//! use gptcompat::geometry::{SpaceSpec, sample_effect};
//! use gptcompat::compat::{compatible_2outcome, CompatibilityVerdict};
//!
//! let square = SpaceSpec::Hypercube(2).build();
//! let a = sample_effect(&square, 1);
//! let b = sample_effect(&square, 2);
//! let verdict = compatible_2outcome(&a, &b).unwrap();
//! match verdict {
//!     CompatibilityVerdict::Compatible { joint } => assert!(joint.is_valid()),
//!     CompatibilityVerdict::Incompatible { .. } => {}
//! }
//! ```

pub mod compat;
mod error;
pub mod format;
pub mod geometry;
pub mod lp;
pub mod rat;
pub mod riesz;

pub use error::{Error, Result};
pub use rat::Rational;
