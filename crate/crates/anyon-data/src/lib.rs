//! Categorical data of the Ising model extended by one family of alpha-type anyons:
//! fusion rules, modified dimension, bubble coefficients, R-symbols and F-symbols,
//! evaluated in `f64` or in multi-precision through the [`Real`] trait.

pub mod bubble;
pub mod dump;
mod error;
pub mod fsym;
pub mod fusion;
pub mod label;
pub mod linalg;
pub mod params;
pub mod real;
pub mod rsym;

pub use bubble::{bubble_pop, bubble_sign, modified_dimension, s_sign, t_sign};
pub use error::AnyonError;
pub use fsym::{f_matrix, f_tilde, FMatrix};
pub use fusion::{admissible, fuse, multiplicity};
pub use label::{pair_count, parse_labels, Label};
pub use linalg::CMat;
pub use params::{AlphaSpec, ModelParams, DEFAULT_TOL};
pub use real::{set_mp_precision, Mp, Real};
pub use rsym::{monodromy, r_symbol};
