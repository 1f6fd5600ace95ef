//! Finitely generated groups given by presentations or as `ℤ^d`.
//!
//! A finite-index subgroup `H` of an infinite group is brought down to a
//! finite one: coset enumeration gives the permutation action on `H\G`,
//! whose image is finite and whose point stabilizer plays the role of `H`.
//! The kernel of that action is the core of `H` (the largest normal subgroup
//! of `G` inside it), so subgroups between `H` and `G` correspond exactly to
//! subgroups between the stabilizer and the image, indices included.
//! Sublattices of `ℤ^d` go through the Smith normal form instead.

pub mod coset;
pub mod lattice;
pub mod low_index;
pub mod word;

use thiserror::Error;

use crate::group::GroupError;

pub use coset::{coset_action_group, coset_action_group_with_limit, coset_enumerate, CosetTable, DEFAULT_MAX_COSETS};
pub use lattice::{hnf_sublattices, smith_normal_form, smith_quotient, IntegerMatrix};
pub use low_index::{low_index_subgroups, low_index_subgroups_with_budget, DEFAULT_LOW_INDEX_BUDGET};
pub use word::{parse_presentation, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FgError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{name}` at position {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("coset enumeration did not close within {limit} cosets")]
    CosetLimitExceeded { limit: usize },
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("index {max_index} exceeds the low-index budget of {budget}")]
    BudgetExceeded { max_index: usize, budget: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bad matrix: {message}")]
    MatrixParse { message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}
