//! Block structure, projective order and eigenphases of evaluated braids.

use anyon_data::linalg::{identity, kron, max_diff, CMat};
use num_complex::Complex;

use crate::BraidError;

/// Diagonal blocks over a computational / noncomputational partition.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub computational: CMat,
    pub noncomputational: CMat,
    /// Largest entry connecting the two parts.
    pub leakage: f64,
}

fn submatrix(m: &CMat, rows: &[usize], cols: &[usize]) -> CMat {
    CMat::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

/// Splits `m` along `mask` (true = computational); fails when the off-block part exceeds `tol`.
pub fn block_decompose(m: &CMat, mask: &[bool], tol: f64) -> Result<Blocks, BraidError> {
    if m.nrows() != mask.len() || m.ncols() != mask.len() {
        return Err(BraidError::ShapeMismatch(format!("{}x{} matrix, mask of {}", m.nrows(), m.ncols(), mask.len())));
    }
    let comp: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
    let rest: Vec<usize> = (0..mask.len()).filter(|&i| !mask[i]).collect();
    let leak = |r: &[usize], c: &[usize]| submatrix(m, r, c).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let leakage = leak(&comp, &rest).max(leak(&rest, &comp));
    if leakage > tol {
        return Err(BraidError::NotBlockDiagonal(leakage));
    }
    Ok(Blocks { computational: submatrix(m, &comp, &comp), noncomputational: submatrix(m, &rest, &rest), leakage })
}

/// Least powers at which `m` becomes scalar (projective) or the identity (strict).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Order {
    pub projective: usize,
    pub strict: Option<usize>,
}

fn scalar_defect(m: &CMat) -> (f64, Complex<f64>) {
    let n = m.nrows();
    let lambda = m.trace() / n as f64;
    let unit = if lambda.norm() > 0.0 { lambda / lambda.norm() } else { Complex::new(1.0, 0.0) };
    (max_diff(m, &identity::<f64>(n).map(|z| z * unit)), unit)
}

/// Projective order up to `max_n`; the strict order is searched up to `max_n` as well.
pub fn matrix_order(m: &CMat, max_n: usize, tol: f64) -> Result<Order, BraidError> {
    if m.nrows() != m.ncols() {
        return Err(BraidError::ShapeMismatch(format!("{}x{} is not square", m.nrows(), m.ncols())));
    }
    let id = identity::<f64>(m.nrows());
    let mut power = m.clone();
    let mut projective = None;
    for k in 1..=max_n {
        let (defect, unit) = scalar_defect(&power);
        if defect < tol {
            projective.get_or_insert(k);
            if (unit - 1.0).norm() < tol && max_diff(&power, &id) < tol {
                return Ok(Order { projective: projective.unwrap_or(k), strict: Some(k) });
            }
        }
        power = &power * m;
    }
    match projective {
        Some(p) => Ok(Order { projective: p, strict: None }),
        None => Err(BraidError::NotFoundWithin(max_n)),
    }
}

/// Arguments of the eigenvalues of a 2x2 matrix after removing sqrt(det).
pub fn eigenphases(m: &CMat) -> Result<(f64, f64), BraidError> {
    if m.shape() != (2, 2) {
        return Err(BraidError::ShapeMismatch("eigenphases needs a 2x2 matrix".into()));
    }
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let half = m.trace() / 2.0;
    let disc = (half * half - det).sqrt();
    let norm = det.sqrt();
    Ok((((half + disc) / norm).arg(), ((half - disc) / norm).arg()))
}

/// Tensor product over qubits where `factors[k]` acts on qubit k and qubit 0 varies fastest.
pub fn qubit_tensor(factors: &[CMat]) -> CMat {
    factors.iter().fold(identity::<f64>(1), |acc, f| kron(f, &acc))
}

/// `a` on qubit `k` of `n`, identity elsewhere.
pub fn on_qubit(a: &CMat, k: usize, n: usize) -> CMat {
    let factors: Vec<CMat> = (0..n).map(|i| if i == k { a.clone() } else { identity(a.nrows()) }).collect();
    qubit_tensor(&factors)
}
