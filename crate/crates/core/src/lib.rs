//! Finite and topological quandles.
//!
//! `qtop-core` is the allocation-only (`no_std` + `alloc`) half of the
//! project. It contains:
//!
//! - [`finite`]: quandles and racks given by operation tables, the classical
//!   constructors (trivial, dihedral, Alexander, conjugation, core), exhaustive
//!   axiom checks, the inner automorphism group and isomorphism search.
//! - [`continuum`]: piecewise topological quandle structures on intervals,
//!   balls, the real line and chart-transported manifolds, with grid-based
//!   axiom verification and trivial-locus analysis.
//! - [`braid`]: the braid group action on tuples over a quandle and the
//!   fixed-point sets of braid words.
//! - [`poly`]: exact rational checks deciding which bivariate polynomials can
//!   be quandle or rack operations on the closed unit interval.
//!
//! File formats, the command-line tool and threaded sweeps live in the `qtop`
//! crate.
#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod braid;
pub mod continuum;
pub mod finite;
pub mod poly;

pub use braid::{BraidError, BraidWord, FixedPointSet};
pub use continuum::{
    ContinuumError, ContinuumQuandle, ContinuumSpec, LocusReport, Point, VerificationReport,
};
pub use finite::{FiniteError, FiniteQuandle, GroupTable, Perm, PermGroupSummary};
pub use poly::{BiPoly, PolyError, QuandleVerdict, RackVerdict};
