//! Gate compilation on the (alpha, psi, sigma, sigma) sector: the D and W braids,
//! Reichardt's leakage-suppressing recursion, brute-force search for low-leakage
//! seed words and the controlled two-qubit gate they induce.

mod controlled;
mod protocol;
mod reichardt;
mod search;

use anyon_data::AnyonError;
use braid_engine::BraidError;
use fusion_space::SpaceError;
use thiserror::Error;

pub use controlled::{controlled_gate, schmidt_rank, trivial_actions, ControlledGate};
pub use protocol::{
    build_d, build_w, evaluate_psi, evaluate_vacuum, psi_leaves, vacuum_leaves, Protocol, D_WORD, SEARCH_WORD, W_WORD,
};
pub use reichardt::{
    convergence_csv, diagonal_phases, law_defect, leakage_norms, reichardt_iterate, reichardt_iterate_extended,
    reichardt_step, reichardt_word, LeakageReport, LAW_TOL_DEEP, LAW_TOL_SHALLOW, MAX_DEPTH,
};
pub use search::{search_low_leakage, SearchConfig, SearchHit};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GateError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("D must be diagonal (off-diagonal norm {0:.3e})")]
    NotDiagonal(f64),
    #[error("iteration depth {0} exceeds the cap of {MAX_DEPTH}")]
    DepthExceeded(usize),
    #[error("precision exhausted at k = {k}: fifth-power law defect {defect:.3e}")]
    PrecisionExhausted { k: usize, defect: f64 },
    #[error("psi-sector action leaks into the vacuum sector ({0:.3e})")]
    NotBlockDiagonal(f64),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Anyon(#[from] AnyonError),
}
