//! Small dense complex matrix helpers that work for any [`Real`] scalar.

use nalgebra::DMatrix;
use num_complex::{Complex, Complex64 as C64};
use num_traits::{One, Zero};

use crate::real::{to_c64, Real};

pub type CMat<T = f64> = DMatrix<Complex<T>>;

pub fn identity<T: Real>(n: usize) -> CMat<T> {
    CMat::<T>::identity(n, n)
}

pub fn diagonal<T: Real>(d: &[Complex<T>]) -> CMat<T> {
    let n = d.len();
    CMat::<T>::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { Complex::zero() })
}

pub fn signature<T: Real>(signs: &[i8]) -> CMat<T> {
    let d: Vec<Complex<T>> = signs.iter().map(|&s| Complex::new(T::from_i64(s as i64), T::zero())).collect();
    diagonal(&d)
}

pub fn adjoint<T: Real>(m: &CMat<T>) -> CMat<T> {
    CMat::<T>::from_fn(m.ncols(), m.nrows(), |i, j| m[(j, i)].conj())
}

pub fn scale<T: Real>(m: &CMat<T>, z: &Complex<T>) -> CMat<T> {
    m.map(|x| x * z.clone())
}

/// Gauss-Jordan inverse with partial pivoting; `None` if a pivot vanishes.
pub fn inverse<T: Real>(m: &CMat<T>) -> Option<CMat<T>> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    let mut a = m.clone();
    let mut inv = identity::<T>(n);
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[(i, col)].norm_sqr().partial_cmp(&a[(j, col)].norm_sqr()).unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[(pivot, col)].norm_sqr().is_zero() {
            return None;
        }
        a.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        let p = Complex::<T>::one() / a[(col, col)].clone();
        for j in 0..n {
            a[(col, j)] = a[(col, j)].clone() * p.clone();
            inv[(col, j)] = inv[(col, j)].clone() * p.clone();
        }
        for i in 0..n {
            if i == col {
                continue;
            }
            let f = a[(i, col)].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(col, j)].clone();
                inv[(i, j)] = inv[(i, j)].clone() - f.clone() * inv[(col, j)].clone();
            }
        }
    }
    Some(inv)
}

/// Determinant by Gaussian elimination.
pub fn determinant<T: Real>(m: &CMat<T>) -> Complex<T> {
    let n = m.nrows();
    let mut a = m.clone();
    let mut det = Complex::<T>::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm_sqr().partial_cmp(&a[(j, col)].norm_sqr()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(col);
        if a[(pivot, col)].norm_sqr().is_zero() {
            return Complex::zero();
        }
        if pivot != col {
            a.swap_rows(col, pivot);
            det = -det;
        }
        let d = a[(col, col)].clone();
        det *= d.clone();
        for i in col + 1..n {
            let f = a[(i, col)].clone() / d.clone();
            for j in col..n {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(col, j)].clone();
            }
        }
    }
    det
}

pub fn to_f64_matrix<T: Real>(m: &CMat<T>) -> CMat<f64> {
    m.map(|z| to_c64(&z))
}

/// Largest entry modulus.
pub fn max_abs<T: Real>(m: &CMat<T>) -> f64 {
    m.iter().map(|z| to_c64(z).norm()).fold(0.0, f64::max)
}

pub fn max_diff<T: Real>(a: &CMat<T>, b: &CMat<T>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    max_abs(&(a - b))
}

/// max |M^dagger J_out M - J_in|.
pub fn pseudo_unitarity_defect<T: Real>(m: &CMat<T>, j_in: &[i8], j_out: &[i8]) -> f64 {
    if m.nrows() != j_out.len() || m.ncols() != j_in.len() {
        return f64::INFINITY;
    }
    let lhs = adjoint(m) * signature::<T>(j_out) * m;
    max_diff(&lhs, &signature(j_in))
}

/// Kronecker product A (x) B.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Mp;

    fn sample() -> CMat {
        CMat::from_row_slice(2, 2, &[c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(3.0, 0.5)])
    }

    #[test]
    fn inverse_round_trip() {
        let m = sample();
        let inv = inverse(&m).unwrap();
        assert!(max_diff(&(&m * &inv), &identity(2)) < 1e-14);
        assert!(inverse::<f64>(&CMat::zeros(2, 2)).is_none());
    }

    #[test]
    fn determinant_matches_nalgebra() {
        let m = sample();
        assert!((determinant(&m) - m.determinant()).norm() < 1e-14);
    }

    #[test]
    fn generic_inverse_in_multiprecision() {
        let m = sample().map(|z| Complex::new(Mp::from_f64(z.re), Mp::from_f64(z.im)));
        let inv = inverse(&m).unwrap();
        assert!(max_diff(&(&m * &inv), &identity(2)) < 1e-60);
    }

    #[test]
    fn defect_of_signature_is_zero() {
        let j = [1i8, -1];
        assert_eq!(pseudo_unitarity_defect::<f64>(&signature(&j), &j, &j), 0.0);
    }
}
