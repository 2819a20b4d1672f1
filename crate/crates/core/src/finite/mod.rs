//! Finite racks and quandles given by operation tables.
//!
//! Tables are oriented so that `table[a][b] = a ▷ b`; the right
//! multiplication `R_b : a ↦ a ▷ b` is the permutation read down column `b`.

mod group;
mod iso;
mod perm;
mod quandle;

pub use group::GroupTable;
pub use iso::{are_isomorphic, are_isomorphic_bounded, check_isomorphism, ISO_SEARCH_BOUND};
pub use perm::{closure, orbits, Perm};
pub use quandle::{
    check_quandle, check_rack, inner_group, inner_group_bounded, is_connected, make_alexander,
    make_conj, make_core, make_dihedral, make_trivial, Axiom, AxiomReport, AxiomVerdict,
    FiniteQuandle, PermGroupSummary, Violation, INNER_GROUP_LIMIT,
};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteError {
    #[error("a quandle needs at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry table[{row}][{col}] = {value} is outside the carrier of size {size}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },
    #[error("gcd({t}, {n}) = {gcd}: right multiplication is not bijective, so axiom II fails")]
    NotInvertible { n: usize, t: i64, gcd: u64 },
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("column {column} is not a permutation (rows {first} and {second} both map to {value})")]
    ColumnNotBijective { column: usize, first: usize, second: usize, value: usize },
    #[error("not a permutation")]
    NotAPermutation,
    #[error("generated group exceeds {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("isomorphism search bound exceeded: size {size} > bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}
