//! Exact arithmetic for reciprocal complements of Euclidean domains.
//!
//! Given a Euclidean domain D with fraction field K, the reciprocal
//! complement R(D) is the subring of K generated by the reciprocals of the
//! nonzero elements of D. This crate makes the structure of R(D)
//! machine-checkable for four concrete instances — the integers, the
//! Gaussian integers, `F_p[x]` and `Q[x]`:
//!
//! * unit-fraction decomposition with verifiable certificates
//!   ([`decompose`]), including the Euclidean recursion that works whenever
//!   `f(num) <= f(den)`, plus greedy, harmonic-peel and distinctification
//!   front ends over the integers;
//! * membership and valuation in R(D), the either-way split of a fraction
//!   or its inverse, and the field/DVR dichotomy classifier ([`recip`]);
//! * reciprocals of `Q[x]`-polynomials rewritten as unit-fraction sums
//!   from `Z[x]` ([`extension`]);
//! * a bounded exhaustive search oracle for corroborating membership claims
//!   without trusting the analytic route ([`search`]).
//!
//! Everything is exact: arbitrary-precision integers and rationals
//! throughout, no floating point. All values are immutable after
//! construction and all operations are pure, so the whole API is safe for
//! unrestricted concurrent use.

pub mod decompose;
pub mod domain;
pub mod error;
pub mod extension;
pub mod fraction;
pub mod instances;
pub mod recip;
pub mod search;
pub mod zexpand;

pub use domain::{Branch, DivisionResult, EuclideanDomain, EuclideanValue, UnitGroup};
pub use error::{Error, ParseError};
pub use fraction::Fraction;
pub use instances::{AnyDomain, DomainKind};
