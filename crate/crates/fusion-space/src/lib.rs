//! Fusion-tree bases for chains (alpha, l1, ..., lk), their indefinite metric,
//! the qubit encoding in (alpha, sigma^{2n}) and the control-channel basis of H_n.

mod code;
mod control;
mod space;
mod tree;

use anyon_data::AnyonError;
use thiserror::Error;

pub use code::{Decoded, QubitCode};
pub use control::{control_basis_transform, control_tree_sign, ControlBasis};
pub use space::{gram, gram_matrix, is_computational, qubit_layout, tree_sign, Basis, Gram, IndefSpace};
pub use tree::{enumerate_basis, lex_cmp, FusionTree};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("no admissible fusion tree")]
    EmptyBasis,
    #[error("malformed fusion tree: {0}")]
    BadTree(String),
    #[error("not a qubit space")]
    NotQubitSpace,
    #[error(transparent)]
    Anyon(#[from] AnyonError),
}
