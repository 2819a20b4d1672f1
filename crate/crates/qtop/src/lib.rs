//! Standard-library companion to `qtop-core`: JSON and CSV formats, short
//! names for common constructions, threaded sweeps and the `qtop` CLI.

pub mod cli;
pub mod csv;
pub mod format;
pub mod names;
pub mod parallel;
