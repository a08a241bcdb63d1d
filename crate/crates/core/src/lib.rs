//! Exact simple Hurwitz numbers `h_{g,μ}`.
//!
//! `h_{g,μ}` counts connected genus-`g` covers of the sphere with one branch
//! point of profile `μ` and `r = 2g - 2 + ℓ(μ) + |μ|` simple branch points,
//! each weighted by the inverse of its automorphism count. All arithmetic is
//! exact rational.
//!
//! Modules:
//! - [`partition`]: partitions, their statistics and enumeration;
//! - [`symfunc`]: power-sum polynomials, characters, the cut-and-join operator;
//! - [`series`]: truncated generating series with `log` and `exp`;
//! - [`engine`]: the recursion, `log τ` by two routes, closed forms, the cache;
//! - [`oracle`]: brute-force counting in `S_d`;
//! - [`analysis`]: audits over computed ranges;
//! - [`fixtures`]: reference tables of known values.

pub mod analysis;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod partition;
pub mod series;
pub mod symfunc;

/// Exact rational numbers with arbitrary-precision numerator and denominator.
pub type BigRat = num_rational::BigRational;

pub use analysis::{AuditRecord, AuditReport, Check, ParityScan};
pub use engine::{compute, keys_up_to, HurwitzCache, Method};
pub use error::{HurwitzError, Result};
pub use partition::{MultiIndex, Partition};
pub use series::GenSeries;
pub use symfunc::PowerSumPoly;
