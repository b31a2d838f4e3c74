use crate::error::AnyonError;
use crate::label::Label;
use crate::params::ModelParams;
use crate::real::Real;

fn quarter_turn<T: Real>(x: &T) -> T {
    x.clone() * T::pi() / T::from_i64(4)
}

/// d_alpha = -4 sin(pi alpha / 4) / sin(pi alpha).
pub fn modified_dimension<T: Real>(alpha: &T) -> Result<T, AnyonError> {
    let a = alpha.to_f64();
    if a.fract() == 0.0 {
        return Err(AnyonError::IntegerAlpha(a));
    }
    let den = (alpha.clone() * T::pi()).sin();
    if den.abs().to_f64() < 1e-14 {
        return Err(AnyonError::IntegerAlpha(a));
    }
    Ok(-T::from_i64(4) * quarter_turn(alpha).sin() / den)
}

fn residue(alpha: f64, period: f64) -> Result<f64, AnyonError> {
    if !alpha.is_finite() || alpha.fract() == 0.0 {
        return Err(AnyonError::IntegerAlpha(alpha));
    }
    Ok(alpha.rem_euclid(period))
}

/// s_alpha: +1 on (0,1) u (5,8) mod 8, -1 on (1,5).
pub fn s_sign<T: Real>(alpha: &T) -> Result<i8, AnyonError> {
    let r = residue(alpha.to_f64(), 8.0)?;
    Ok(if !(1.0..=5.0).contains(&r) { 1 } else { -1 })
}

/// t_alpha: +1 on (0,1) u (2,4) mod 4, -1 on (1,2).
pub fn t_sign<T: Real>(alpha: &T) -> Result<i8, AnyonError> {
    let r = residue(alpha.to_f64(), 4.0)?;
    Ok(if !(1.0..=2.0).contains(&r) { 1 } else { -1 })
}

/// Bubble coefficient B^{ab}_c.
pub fn bubble_pop<T: Real>(p: &ModelParams<T>, a: Label, b: Label, c: Label) -> Result<T, AnyonError> {
    use Label::*;
    let unsupported = || AnyonError::UnsupportedTriple(a, b, c);
    let sq2 = || T::from_i64(2).sqrt();
    match (a, b, c) {
        (x, Vacuum, y) | (Vacuum, x, y) if x == y => return Ok(T::one()),
        (Sigma, Sigma, Psi) | (Psi, Sigma, S32) | (Sigma, Psi, S32) => return Ok(T::one()),
        (Sigma, Sigma, Vacuum) | (Sigma, Psi, Sigma) => return Ok(-sq2()),
        (Psi, Sigma, Sigma) => return Ok(-T::one() / sq2()),
        _ => {}
    }
    let (Alpha(ka), Alpha(kc)) = (a, c) else {
        return Err(unsupported());
    };
    let beta = p.value(a);
    let th = quarter_turn(&beta);
    let name = || format!("B^({a},{b})_{c} at alpha = {}", p.alpha_f64());
    let cot = |x: &T| -> Result<T, AnyonError> {
        let s = x.sin();
        p.guard(&s, 1.0, name)?;
        Ok(x.cos() / s)
    };
    let tan = |x: &T| -> Result<T, AnyonError> {
        let c = x.cos();
        p.guard(&c, 1.0, name)?;
        Ok(x.sin() / c)
    };
    let ratio = |num: T, den: T| -> Result<T, AnyonError> {
        p.guard(&den, num.abs().to_f64(), name)?;
        Ok(num / den)
    };
    match (b, kc - ka) {
        (Sigma, 1) | (Psi, 2) => Ok(T::one()),
        (Sigma, -1) => ratio(sq2(), cot(&th)? - T::one()),
        (Psi, -2) => {
            let x = quarter_turn(&(beta - T::from_i64(2)));
            Ok(T::from_i64(2) * cot(&x)?)
        }
        (Psi, 0) => {
            let half = th.clone() * T::from_i64(2);
            ratio(sq2() * half.cos(), T::one() - half.sin())
        }
        (S32, 1) => ratio(sq2(), T::one() - tan(&th)?),
        (S32, -1) => ratio(T::from_i64(2) + T::from_i64(2) * tan(&th)?, cot(&th)? - T::one()),
        _ => Err(unsupported()),
    }
}

/// Sign of a bubble coefficient, rejecting vanishing values.
pub fn bubble_sign<T: Real>(p: &ModelParams<T>, a: Label, b: Label, c: Label) -> Result<i8, AnyonError> {
    let v = bubble_pop(p, a, b, c)?;
    p.guard(&v, 1.0, || format!("B^({a},{b})_{c} vanishes at alpha = {}", p.alpha_f64()))?;
    Ok(if v.is_negative() { -1 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{PI, SQRT_2};
    use Label::*;

    fn params(a: f64) -> ModelParams {
        ModelParams::from_f64(a).unwrap()
    }

    #[test]
    fn dimension_at_twelve_fifths_is_minus_four() {
        let p = ModelParams::<f64>::parse("12/5").unwrap();
        assert_relative_eq!(modified_dimension(p.alpha()).unwrap(), -4.0, epsilon = 1e-12);
    }

    #[test]
    fn dimension_at_one_half() {
        assert_relative_eq!(modified_dimension(&0.5).unwrap(), -4.0 * (PI / 8.0).sin(), epsilon = 1e-15);
    }

    #[test]
    fn dimension_at_two_point_seven() {
        // -4 sin(0.675 pi) / sin(2.7 pi), evaluated independently to 20 digits.
        assert_relative_eq!(modified_dimension(&2.7).unwrap(), -4.215684813953004, epsilon = 1e-12);
        assert!(modified_dimension(&3.0).is_err());
    }

    #[test]
    fn fixed_bubbles() {
        let p = params(2.4);
        assert_eq!(bubble_pop(&p, Sigma, Sigma, Psi).unwrap(), 1.0);
        assert_relative_eq!(bubble_pop(&p, Sigma, Sigma, Vacuum).unwrap(), -SQRT_2);
        assert_relative_eq!(bubble_pop(&p, Psi, Sigma, Sigma).unwrap(), -1.0 / SQRT_2);
        assert_relative_eq!(bubble_pop(&p, Sigma, Psi, Sigma).unwrap(), -SQRT_2);
        assert_eq!(bubble_pop(&p, Alpha(3), Vacuum, Alpha(3)).unwrap(), 1.0);
    }

    #[test]
    fn alpha_sigma_lower_channel_at_twelve_fifths() {
        let p = ModelParams::<f64>::parse("12/5").unwrap();
        let b = bubble_pop(&p, Alpha(0), Sigma, Alpha(-1)).unwrap();
        let expect = SQRT_2 / (-1.0 + 1.0 / (3.0 * PI / 5.0).tan());
        assert_relative_eq!(b, expect, epsilon = 1e-14);
        assert_relative_eq!(b, -1.0674, epsilon = 1e-4);
    }

    #[test]
    fn shifted_rows_use_shifted_value() {
        let p = params(2.4);
        let direct = SQRT_2 / (-1.0 + 1.0 / (PI * 3.4 / 4.0).tan());
        assert_relative_eq!(bubble_pop(&p, Alpha(1), Sigma, Alpha(0)).unwrap(), direct, epsilon = 1e-14);
    }

    #[test]
    fn psi_rows() {
        let p = params(2.4);
        let x = 2.4f64;
        assert_relative_eq!(bubble_pop(&p, Alpha(0), Psi, Alpha(-2)).unwrap(), 2.0 / (PI * (x - 2.0) / 4.0).tan(), epsilon = 1e-13);
        let mid = SQRT_2 * (PI * x / 2.0).cos() / (1.0 - (PI * x / 2.0).sin());
        assert_relative_eq!(bubble_pop(&p, Alpha(0), Psi, Alpha(0)).unwrap(), mid, epsilon = 1e-13);
    }

    #[test]
    fn s32_rows_are_exposed() {
        let p = params(2.4);
        let t = (PI * 2.4 / 4.0).tan();
        assert_relative_eq!(bubble_pop(&p, Alpha(0), S32, Alpha(1)).unwrap(), SQRT_2 / (1.0 - t), epsilon = 1e-13);
        assert_relative_eq!(bubble_pop(&p, Alpha(0), S32, Alpha(-1)).unwrap(), (2.0 + 2.0 * t) / (-1.0 + 1.0 / t), epsilon = 1e-12);
    }

    #[test]
    fn singular_and_unsupported() {
        // cot(pi/4) = 1 makes the lower sigma channel blow up at alpha = 1 + 8k.
        let p = params(1.0 + 1e-13);
        assert!(matches!(bubble_pop(&p, Alpha(0), Sigma, Alpha(-1)), Err(AnyonError::SingularParameter(_))));
        assert!(matches!(bubble_pop(&params(2.4), Psi, Psi, P2), Err(AnyonError::UnsupportedTriple(..))));
        assert!(bubble_pop(&params(2.4), Alpha(0), Sigma, Alpha(0)).is_err());
    }

    #[test]
    fn sign_functions() {
        assert_eq!(s_sign(&2.4).unwrap(), -1);
        assert_eq!(t_sign(&2.4).unwrap(), 1);
        assert_eq!(s_sign(&5.5).unwrap(), 1);
        assert_eq!(s_sign(&0.5).unwrap(), 1);
        assert_eq!(t_sign(&1.5).unwrap(), -1);
        assert_eq!(t_sign(&-0.5).unwrap(), 1);
        assert!(s_sign(&4.0).is_err());
    }

    #[test]
    fn computational_bubbles_negative_in_definite_regime() {
        let p = params(2.4);
        assert_eq!(bubble_sign(&p, Alpha(0), Sigma, Alpha(-1)).unwrap(), -1);
        assert_eq!(bubble_sign(&p, Alpha(1), Sigma, Alpha(0)).unwrap(), -1);
    }
}
