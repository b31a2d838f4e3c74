//! Closed-form single-qubit generators on (alpha, sigma, sigma) with their global phases.
//! Basis order: |0> = (alpha+1), |1> = (alpha-1).

use anyon_data::linalg::{diagonal, CMat};
use anyon_data::real::principal_sqrt;
use anyon_data::{bubble_pop, AnyonError, Label, ModelParams, Real};
use num_complex::Complex;
use num_traits::One;

/// Phase that makes the wrap special unitary on H1.
pub fn wrap_phase<T: Real>(p: &ModelParams<T>) -> Complex<T> {
    -p.q()
}

/// Phase that makes the sigma-sigma exchange special unitary on H1.
pub fn exchange_phase<T: Real>(p: &ModelParams<T>) -> Complex<T> {
    p.q_pow(&T::from_ratio(-3, 2))
}

/// diag(q^alpha, q^-alpha)
pub fn wrap_h1<T: Real>(p: &ModelParams<T>) -> CMat<T> {
    let a = p.alpha().clone();
    diagonal(&[p.q_pow(&a), p.q_pow(&(-a))])
}

/// q^-1 [[(1+q^2)/(1-q^{2a}), q^-1 r], [q^-1 r, (1+q^2)/(1-q^{-2a})]] with
/// r = sqrt(B^{(a+1) s}_a) / sqrt(B^{a s}_{a-1}).
pub fn exchange_h1<T: Real>(p: &ModelParams<T>) -> Result<CMat<T>, AnyonError> {
    let a = p.alpha().clone();
    let one = Complex::<T>::one();
    let q = p.q();
    let q2 = q.clone() * q.clone();
    let q_inv = one.clone() / q;
    let b_plus = bubble_pop(p, Label::Alpha(1), Label::Sigma, Label::ALPHA)?;
    let b_minus = bubble_pop(p, Label::ALPHA, Label::Sigma, Label::Alpha(-1))?;
    let r = principal_sqrt(&b_plus) / principal_sqrt(&b_minus);
    let two = T::from_i64(2);
    let d0 = (one.clone() + q2.clone()) / (one.clone() - p.q_pow(&(two.clone() * a.clone())));
    let d1 = (one.clone() + q2) / (one.clone() - p.q_pow(&(-(two * a))));
    let off = q_inv.clone() * r;
    Ok(CMat::from_row_slice(2, 2, &[d0, off.clone(), off, d1]).map(|z| z * q_inv.clone()))
}
