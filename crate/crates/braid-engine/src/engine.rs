use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use anyon_data::linalg::{identity, inverse, CMat};
use anyon_data::{f_matrix, monodromy, r_symbol, AnyonError, Label, ModelParams, Real};
use fusion_space::{Basis, IndefSpace};
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::word::{BraidWord, Generator};
use crate::BraidError;

/// One elementary crossing as a map between two labelled bases.
#[derive(Clone, Debug)]
pub struct Step<T: Real = f64> {
    pub from: Arc<Basis>,
    pub to: Arc<Basis>,
    pub matrix: CMat<T>,
}

/// Matrix of a braid word from the basis of `from` to the basis of `to`.
#[derive(Clone, Debug)]
pub struct BraidMatrix<T: Real = f64> {
    pub matrix: CMat<T>,
    pub from: Arc<Basis>,
    pub to: Arc<Basis>,
    /// Global phase multiplied into `matrix` (one unless a caller opted in).
    pub phase: Complex<T>,
}

impl<T: Real> BraidMatrix<T> {
    pub fn is_operator(&self) -> bool {
        self.from.leaves == self.to.leaves && self.from.charge == self.to.charge
    }

    pub fn with_phase(mut self, phase: Complex<T>) -> Self {
        self.matrix = self.matrix.map(|z| z * phase.clone());
        self.phase *= phase;
        self
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

type BasisKey = (Vec<Label>, Label);
type StepKey = (Vec<Label>, Label, Generator, bool);

/// Builds generator matrices from F- and R-symbols and evaluates words.
/// Generator matrices are memoized; the caches are safe to share across threads.
pub struct BraidEngine<T: Real = f64> {
    params: ModelParams<T>,
    bases: RwLock<HashMap<BasisKey, Arc<Basis>>>,
    steps: RwLock<HashMap<StepKey, Arc<Step<T>>>>,
}

fn swapped(leaves: &[Label], i: usize, j: usize) -> Vec<Label> {
    let mut l = leaves.to_vec();
    l.swap(i, j);
    l
}

impl<T: Real> BraidEngine<T> {
    pub fn new(params: ModelParams<T>) -> Self {
        BraidEngine { params, bases: RwLock::default(), steps: RwLock::default() }
    }

    pub fn params(&self) -> &ModelParams<T> {
        &self.params
    }

    pub fn basis(&self, leaves: &[Label], charge: Label) -> Result<Arc<Basis>, BraidError> {
        let key = (leaves.to_vec(), charge);
        if let Some(b) = self.bases.read().expect("basis cache").get(&key) {
            return Ok(b.clone());
        }
        let b = Arc::new(Basis::new(leaves, charge)?);
        self.bases.write().expect("basis cache").insert(key, b.clone());
        Ok(b)
    }

    pub fn space(&self, leaves: &[Label], charge: Label) -> Result<IndefSpace, BraidError> {
        Ok(IndefSpace::from_basis(&self.params, (*self.basis(leaves, charge)?).clone())?)
    }

    /// One crossing of `gen` (or its inverse) on the labelled basis.
    pub fn step(&self, leaves: &[Label], charge: Label, gen: Generator, inv: bool) -> Result<Arc<Step<T>>, BraidError> {
        let key = (leaves.to_vec(), charge, gen, inv);
        if let Some(s) = self.steps.read().expect("step cache").get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(self.build_step(leaves, charge, gen, inv)?);
        self.steps.write().expect("step cache").insert(key, s.clone());
        Ok(s)
    }

    fn build_step(&self, leaves: &[Label], charge: Label, gen: Generator, inv: bool) -> Result<Step<T>, BraidError> {
        let p = &self.params;
        let invalid = || BraidError::InvalidGenerator(format!("{gen} on {} leaves", leaves.len()));
        match gen {
            Generator::Wrap => {
                if leaves.len() < 2 {
                    return Err(invalid());
                }
                let from = self.basis(leaves, charge)?;
                let diag: Vec<Complex<T>> = from
                    .trees
                    .iter()
                    .map(|t| {
                        let m = monodromy(p, leaves[1], leaves[0], t.chain()[1])?;
                        Ok(if inv { Complex::<T>::one() / m } else { m })
                    })
                    .collect::<Result<_, AnyonError>>()?;
                let matrix = anyon_data::linalg::diagonal(&diag);
                Ok(Step { to: from.clone(), from, matrix })
            }
            Generator::Half => {
                if leaves.len() < 2 {
                    return Err(invalid());
                }
                let from = self.basis(leaves, charge)?;
                let target = swapped(leaves, 0, 1);
                let to = self.basis(&target, charge)?;
                let mut matrix = CMat::<T>::zeros(to.dim(), from.dim());
                for (j, t) in from.trees.iter().enumerate() {
                    let chain = t.chain();
                    // Forward from (l0, l1) picks R^{l1 l0}; the inverse undoes the forward move from (l1, l0).
                    let r = if inv {
                        Complex::<T>::one() / r_symbol(p, leaves[0], leaves[1], chain[1])?
                    } else {
                        r_symbol(p, leaves[1], leaves[0], chain[1])?
                    };
                    let i = to.index_of_chain(&chain[1..]).ok_or_else(|| BraidError::LeakyPermutation(t.compact()))?;
                    matrix[(i, j)] = r;
                }
                Ok(Step { from, to, matrix })
            }
            Generator::Exchange(i) => {
                if i < 2 || i >= leaves.len() {
                    return Err(invalid());
                }
                let pos = i - 1;
                if inv {
                    let target = swapped(leaves, pos, pos + 1);
                    let fwd = self.step(&target, charge, gen, false)?;
                    let matrix = inverse(&fwd.matrix)
                        .ok_or_else(|| BraidError::Anyon(AnyonError::SingularParameter(format!("{gen} is not invertible"))))?;
                    return Ok(Step { from: fwd.to.clone(), to: fwd.from.clone(), matrix });
                }
                self.exchange_forward(leaves, charge, pos)
            }
        }
    }

    /// Swap of leaves `pos` and `pos + 1` (pos >= 1):
    /// M[t', t] = sum_n (F^{acb}_d)^{-1}[m', n] R^{cb}_n F^{abc}_d[n, m].
    fn exchange_forward(&self, leaves: &[Label], charge: Label, pos: usize) -> Result<Step<T>, BraidError> {
        let p = &self.params;
        let from = self.basis(leaves, charge)?;
        let target = swapped(leaves, pos, pos + 1);
        let to = self.basis(&target, charge)?;
        let (b, c) = (leaves[pos], leaves[pos + 1]);
        let mut matrix = CMat::<T>::zeros(to.dim(), from.dim());
        for (j, t) in from.trees.iter().enumerate() {
            let chain = t.chain();
            let (a, m, d) = (chain[pos - 1], chain[pos], chain[pos + 1]);
            let f1 = f_matrix(p, a, b, c, d)?;
            let f2 = f_matrix(p, a, c, b, d)?;
            let f2_inv = f2.inverse()?;
            let col = f1.col(m).ok_or(BraidError::Anyon(AnyonError::UnsupportedFamily(a, b, c, d)))?;
            for (k, &n) in f1.rows.iter().enumerate() {
                let amp = f1.data[(k, col)].clone();
                if amp.is_zero() {
                    continue;
                }
                let r = r_symbol(p, c, b, n)?;
                let k2 = f2.row(n).ok_or(BraidError::Anyon(AnyonError::UnsupportedFamily(a, c, b, d)))?;
                for (jj, &m2) in f2.cols.iter().enumerate() {
                    let mut new_chain = chain[1..].to_vec();
                    new_chain[pos - 1] = m2;
                    let Some(row) = to.index_of_chain(&new_chain) else {
                        continue;
                    };
                    matrix[(row, j)] = matrix[(row, j)].clone() + f2_inv[(jj, k2)].clone() * r.clone() * amp.clone();
                }
            }
        }
        Ok(Step { from, to, matrix })
    }

    /// Evaluates a word starting from the given labelling; the end labelling may differ.
    pub fn evaluate_map(&self, word: &BraidWord, leaves: &[Label], charge: Label) -> Result<BraidMatrix<T>, BraidError> {
        let start = self.basis(leaves, charge)?;
        let mut current = start.clone();
        let mut m = identity::<T>(start.dim());
        for (gen, inv) in word.steps() {
            let s = self.step(&current.leaves, charge, gen, inv)?;
            m = &s.matrix * m;
            current = s.to.clone();
        }
        Ok(BraidMatrix { matrix: m, from: start, to: current, phase: Complex::one() })
    }

    /// Evaluates a word that must return the leaves to their starting labels.
    pub fn evaluate(&self, word: &BraidWord, leaves: &[Label], charge: Label) -> Result<BraidMatrix<T>, BraidError> {
        let m = self.evaluate_map(word, leaves, charge)?;
        if !m.is_operator() {
            let end: Vec<String> = m.to.leaves.iter().map(|l| l.token()).collect();
            return Err(BraidError::LeakyPermutation(format!("word {word} ends on ({})", end.join(","))));
        }
        Ok(m)
    }

    /// `gen^power` as an operator on the labelled basis.
    pub fn generator_matrix(&self, leaves: &[Label], charge: Label, gen: Generator, power: i32) -> Result<BraidMatrix<T>, BraidError> {
        self.evaluate(&BraidWord::single(gen, power), leaves, charge)
    }
}
