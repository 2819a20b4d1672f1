//! Topological quandle structures on intervals, balls, the real line and
//! chart patches of manifolds, with grid-based verification of the axioms.
//!
//! A [`ContinuumSpec`] describes a construction; [`ContinuumQuandle::new`]
//! validates it and gives pure evaluation, right multiplications and their
//! inverses. The [`verify`] functions measure axiom residuals over uniform
//! grids, [`locus`] extracts the trivial locus and the nonisomorphism
//! certificate built on it, and [`curves`] tabulates right multiplications.

pub mod curves;
pub mod locus;
mod point;
mod quandle;
mod spec;
pub mod verify;

pub use curves::{right_mul_curves, CurveRow};
pub use locus::{
    certify, locus_from_deviations, nonisomorphism_certificate, trivial_deviation_chunk,
    trivial_locus, Certificate,
    LocusInvariant, LocusReport,
};
pub use point::{Domain, Point};
pub use quandle::{ContinuumQuandle, DEFAULT_BOX_HALF_WIDTH, MAX_FAMILY_DIM, OPEN_MARGIN};
pub use spec::{ArctanChart, BallChart, BallVariant, Chart, ContinuumSpec, Exponent};
pub use verify::{
    verify_distributivity, verify_homeomorphism, verify_homeomorphism_all, verify_idempotency,
    verify_inverse, verify_proof_cases, Check, ProofCase, VerificationReport,
    DEFAULT_INVERSE_TOLERANCE, DEFAULT_TOLERANCE,
};

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ContinuumError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exponent h({eps}) = {value} is not a valid power (need h(0) = 1 and h > 0)")]
    InvalidExponent { eps: f64, value: f64 },
    #[error("expected a point of dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {point:?} is outside the domain")]
    OutOfDomain { point: Vec<f64> },
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("grid of {per_axis} points per axis is too small (minimum {min})")]
    GridTooSmall { per_axis: usize, min: usize },
    #[error("{operation} is not available for {kind}")]
    Unsupported { operation: &'static str, kind: &'static str },
}
