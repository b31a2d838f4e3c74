use num_complex::Complex;
use num_traits::One;

use crate::bubble::{s_sign, t_sign};
use crate::error::AnyonError;
use crate::label::Label;
use crate::params::ModelParams;
use crate::real::Real;

fn signed<T: Real>(sign: i8, z: Complex<T>) -> Complex<T> {
    if sign < 0 {
        -z
    } else {
        z
    }
}

/// R^{ba}_c: the phase for exchanging `b` (left) and `a` (right) in channel `c`.
pub fn r_symbol<T: Real>(p: &ModelParams<T>, b: Label, a: Label, c: Label) -> Result<Complex<T>, AnyonError> {
    use Label::*;
    let unsupported = || AnyonError::UnsupportedTriple(b, a, c);
    let qp = |num: i64, den: i64, scale: i64, beta: &T| {
        let x = T::from_ratio(num, den) + T::from_ratio(scale, den) * beta.clone();
        p.q_pow(&x)
    };
    match (b, a, c) {
        (x, Vacuum, y) | (Vacuum, x, y) if x == y => return Ok(Complex::one()),
        (Psi, Sigma, S32) | (Sigma, Psi, S32) | (Psi, Sigma, Sigma) => return Ok(p.q()),
        (Sigma, Psi, Sigma) => return Ok(p.q_pow(&T::from_i64(3))),
        (Sigma, Sigma, Psi) => return Ok(p.q_pow(&T::from_ratio(1, 2))),
        (Sigma, Sigma, Vacuum) => return Ok(p.q_pow(&T::from_ratio(5, 2))),
        _ => {}
    }
    let (alpha_first, k, other) = match (b, a) {
        (Alpha(k), o) => (true, k, o),
        (o, Alpha(k)) => (false, k, o),
        _ => return Err(unsupported()),
    };
    let Alpha(kc) = c else {
        return Err(unsupported());
    };
    let beta = p.value(Alpha(k));
    let s = s_sign(&beta)?;
    let t = t_sign(&beta)?;
    let r = match (alpha_first, other, kc - k) {
        (_, Psi, 2) => qp(3, 1, 1, &beta),
        (true, Psi, 0) => signed(s, qp(1, 1, -1, &beta)),
        (true, Psi, -2) => signed(t, qp(1, 1, -3, &beta)),
        (false, Psi, 0) => signed(s, qp(3, 1, 1, &beta)),
        (false, Psi, -2) => signed(t, qp(5, 1, 1, &beta)),
        (_, Sigma, 1) => qp(3, 2, 1, &beta),
        (true, Sigma, -1) => signed(s, qp(-1, 2, -3, &beta)),
        (false, Sigma, -1) => signed(s, qp(7, 2, 1, &beta)),
        _ => return Err(unsupported()),
    };
    Ok(r)
}

/// Full double exchange R^{ab}_c R^{ba}_c.
pub fn monodromy<T: Real>(p: &ModelParams<T>, a: Label, b: Label, c: Label) -> Result<Complex<T>, AnyonError> {
    let m = r_symbol(p, a, b, c)? * r_symbol(p, b, a, c)?;
    if m.norm_sqr().is_zero() {
        return Err(AnyonError::SingularParameter(format!("monodromy ({a},{b};{c})")));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use Label::*;

    fn params(a: f64) -> ModelParams {
        ModelParams::from_f64(a).unwrap()
    }

    fn cis(x: f64) -> Complex<f64> {
        Complex::from_polar(1.0, x)
    }

    #[test]
    fn sigma_sigma_psi() {
        let r = r_symbol(&params(2.4), Sigma, Sigma, Psi).unwrap();
        assert!((r - cis(PI / 8.0)).norm() < 1e-15);
    }

    #[test]
    fn alpha_sigma_upper() {
        let r = r_symbol(&params(2.4), Alpha(0), Sigma, Alpha(1)).unwrap();
        assert!((r - cis(PI * 2.7 / 4.0)).norm() < 1e-14);
    }

    #[test]
    fn alpha_sigma_lower_carries_s_sign() {
        let r = r_symbol(&params(2.4), Alpha(0), Sigma, Alpha(-1)).unwrap();
        assert!((r + cis(-PI * 4.1 / 4.0)).norm() < 1e-14);
    }

    #[test]
    fn psi_rows_both_orders() {
        let p = params(2.4);
        let b = 2.4;
        let (s, t) = (-1.0, 1.0);
        let q = |x: f64| cis(PI * x / 4.0);
        let cases = [
            (Alpha(0), Psi, Alpha(2), q(3.0 + b)),
            (Alpha(0), Psi, Alpha(0), s * q(1.0 - b)),
            (Alpha(0), Psi, Alpha(-2), t * q(1.0 - 3.0 * b)),
            (Psi, Alpha(0), Alpha(2), q(3.0 + b)),
            (Psi, Alpha(0), Alpha(0), s * q(3.0 + b)),
            (Psi, Alpha(0), Alpha(-2), t * q(5.0 + b)),
            (Sigma, Alpha(0), Alpha(1), q((3.0 + b) / 2.0)),
            (Sigma, Alpha(0), Alpha(-1), s * q((7.0 + b) / 2.0)),
        ];
        for (x, y, c, want) in cases {
            assert!((r_symbol(&p, x, y, c).unwrap() - want).norm() < 1e-13, "{x} {y} {c}");
        }
    }

    #[test]
    fn ising_rows() {
        let p = params(2.4);
        let q = |x: f64| cis(PI * x / 4.0);
        assert!((r_symbol(&p, Sigma, Psi, Sigma).unwrap() - q(3.0)).norm() < 1e-15);
        assert!((r_symbol(&p, Psi, Sigma, Sigma).unwrap() - q(1.0)).norm() < 1e-15);
        assert!((r_symbol(&p, Sigma, Sigma, Vacuum).unwrap() - q(2.5)).norm() < 1e-15);
        assert_eq!(r_symbol(&p, Alpha(2), Vacuum, Alpha(2)).unwrap(), Complex::new(1.0, 0.0));
    }

    #[test]
    fn untabulated() {
        let p = params(2.4);
        assert!(matches!(r_symbol(&p, Psi, Psi, Vacuum), Err(AnyonError::UnsupportedTriple(..))));
        assert!(r_symbol(&p, Alpha(0), Sigma, Alpha(0)).is_err());
    }
}
