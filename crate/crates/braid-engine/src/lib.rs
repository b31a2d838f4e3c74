//! Affine braid generators as F-conjugated R-moves on fusion-tree bases,
//! word evaluation and matrix analysis (blocks, orders, eigenphases).

pub mod analysis;
pub mod closed_form;
mod engine;
mod word;

use anyon_data::AnyonError;
use fusion_space::SpaceError;
use thiserror::Error;

pub use analysis::{block_decompose, eigenphases, matrix_order, on_qubit, qubit_tensor, Blocks, Order};
pub use engine::{BraidEngine, BraidMatrix, Step};
pub use word::{BraidWord, Generator, Letter};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BraidError {
    #[error("cannot parse braid word: {0}")]
    Parse(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("labelling not preserved: {0}")]
    LeakyPermutation(String),
    #[error("matrix is not block diagonal (off-block norm {0:.3e})")]
    NotBlockDiagonal(f64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("no order found within {0}")]
    NotFoundWithin(usize),
    #[error(transparent)]
    Anyon(#[from] AnyonError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}
