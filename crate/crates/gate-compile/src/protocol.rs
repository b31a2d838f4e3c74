use anyon_data::linalg::CMat;
use anyon_data::{Label, ModelParams, Real};
use braid_engine::{BraidEngine, BraidMatrix, BraidWord};

use crate::GateError;

/// The phase braid: two full wraps of the psi strand.
pub const D_WORD: &str = "X^2";
/// The seed braid W.
pub const W_WORD: &str = "b2^2 X b2^2 X b2^-2";
/// Best seed found by exhaustive search up to 9 syllables at alpha = 12/5.
pub const SEARCH_WORD: &str = "b2 X^-1 b2^2 X b2^-2 X^2 b2^-1 X b2^-2";

pub fn psi_leaves() -> Vec<Label> {
    vec![Label::ALPHA, Label::Psi, Label::Sigma, Label::Sigma]
}

pub fn vacuum_leaves() -> Vec<Label> {
    vec![Label::ALPHA, Label::Vacuum, Label::Sigma, Label::Sigma]
}

/// Evaluates a word on the psi sector (psi_0..psi_3).
pub fn evaluate_psi<T: Real>(engine: &BraidEngine<T>, word: &BraidWord) -> Result<BraidMatrix<T>, GateError> {
    Ok(engine.evaluate(word, &psi_leaves(), Label::ALPHA)?)
}

/// Evaluates the same word with the psi strand replaced by the vacuum.
pub fn evaluate_vacuum<T: Real>(engine: &BraidEngine<T>, word: &BraidWord) -> Result<BraidMatrix<T>, GateError> {
    Ok(engine.evaluate(word, &vacuum_leaves(), Label::ALPHA)?)
}

pub fn build_d<T: Real>(engine: &BraidEngine<T>) -> Result<BraidMatrix<T>, GateError> {
    evaluate_psi(engine, &D_WORD.parse()?)
}

pub fn build_w<T: Real>(engine: &BraidEngine<T>) -> Result<BraidMatrix<T>, GateError> {
    evaluate_psi(engine, &W_WORD.parse()?)
}

/// A seed word together with D, evaluated on both control sectors.
pub struct Protocol<T: Real = f64> {
    pub engine: BraidEngine<T>,
    pub seed: BraidWord,
    pub d_word: BraidWord,
    pub w: CMat<T>,
    pub d: CMat<T>,
    pub w_vacuum: CMat<T>,
    pub d_vacuum: CMat<T>,
}

impl<T: Real> Protocol<T> {
    pub fn new(params: ModelParams<T>, seed: BraidWord) -> Result<Self, GateError> {
        let engine = BraidEngine::new(params);
        let d_word: BraidWord = D_WORD.parse()?;
        let w = evaluate_psi(&engine, &seed)?.matrix;
        let d = evaluate_psi(&engine, &d_word)?.matrix;
        let w_vacuum = evaluate_vacuum(&engine, &seed)?.matrix;
        let d_vacuum = evaluate_vacuum(&engine, &d_word)?.matrix;
        Ok(Protocol { engine, seed, d_word, w, d, w_vacuum, d_vacuum })
    }
}
