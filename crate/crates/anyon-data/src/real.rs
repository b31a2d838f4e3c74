//! Scalar abstraction so the same algebra runs in `f64` or in multi-precision.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use astro_float::{BigFloat, Consts, RoundingMode};
use num_complex::Complex;
use num_traits::{Num, NumAssign, One, Zero};

/// Real field operations needed by the model.
pub trait Real:
    Clone + fmt::Debug + fmt::Display + PartialOrd + Send + Sync + 'static + Num + NumAssign + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn pi() -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn sqrt(&self) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    /// e^{i x}
    fn cis(&self) -> Complex<Self> {
        Complex::new(self.cos(), self.sin())
    }
}

impl Real for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}

static MP_BITS: AtomicUsize = AtomicUsize::new(384);
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

/// Sets the working precision (in bits) of [`Mp`] arithmetic for all threads.
pub fn set_mp_precision(bits: usize) {
    MP_BITS.store(bits.max(64), AtomicOrdering::Relaxed);
}

pub fn mp_precision() -> usize {
    MP_BITS.load(AtomicOrdering::Relaxed)
}

/// Multi-precision real backed by `astro-float`.
#[derive(Clone, PartialEq)]
pub struct Mp(pub BigFloat);

impl Mp {
    fn p() -> usize {
        mp_precision()
    }
}

impl fmt::Debug for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialOrd for Mp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl Zero for Mp {
    fn zero() -> Self {
        Mp(BigFloat::from_i64(0, Self::p()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Mp {
    fn one() -> Self {
        Mp(BigFloat::from_i64(1, Self::p()))
    }
}

macro_rules! mp_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $op:ident) => {
        impl $trait for Mp {
            type Output = Mp;
            fn $method(self, rhs: Mp) -> Mp {
                Mp(self.0.$op(&rhs.0, Mp::p(), RM))
            }
        }
        impl $assign_trait for Mp {
            fn $assign(&mut self, rhs: Mp) {
                self.0 = self.0.$op(&rhs.0, Mp::p(), RM);
            }
        }
    };
}

mp_binop!(Add, add, AddAssign, add_assign, add);
mp_binop!(Sub, sub, SubAssign, sub_assign, sub);
mp_binop!(Mul, mul, MulAssign, mul_assign, mul);
mp_binop!(Div, div, DivAssign, div_assign, div);

impl Rem for Mp {
    type Output = Mp;
    fn rem(self, rhs: Mp) -> Mp {
        Mp(self.0.rem(&rhs.0))
    }
}

impl RemAssign for Mp {
    fn rem_assign(&mut self, rhs: Mp) {
        self.0 = self.0.rem(&rhs.0);
    }
}

impl Neg for Mp {
    type Output = Mp;
    fn neg(self) -> Mp {
        Mp(self.0.neg())
    }
}

impl Num for Mp {
    type FromStrRadixErr = &'static str;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err("only radix 10 is supported");
        }
        let v = CONSTS.with(|cc| BigFloat::parse(s, astro_float::Radix::Dec, Mp::p(), RM, &mut cc.borrow_mut()));
        if v.is_nan() {
            Err("not a number")
        } else {
            Ok(Mp(v))
        }
    }
}

impl Real for Mp {
    fn from_f64(x: f64) -> Self {
        Mp(BigFloat::from_f64(x, Self::p()))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        let p = Self::p();
        Mp(BigFloat::from_i64(num, p).div(&BigFloat::from_i64(den, p), p, RM))
    }
    fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        match self.0.as_raw_parts() {
            Some((words, _, sign, exp, _)) => {
                let top = *words.last().unwrap_or(&0) as f64;
                let mag = top * 2f64.powi(exp - 64);
                if sign.is_negative() {
                    -mag
                } else {
                    mag
                }
            }
            None => f64::NAN,
        }
    }
    fn pi() -> Self {
        CONSTS.with(|cc| Mp(cc.borrow_mut().pi(Self::p(), RM)))
    }
    fn sin(&self) -> Self {
        CONSTS.with(|cc| Mp(self.0.sin(Self::p(), RM, &mut cc.borrow_mut())))
    }
    fn cos(&self) -> Self {
        CONSTS.with(|cc| Mp(self.0.cos(Self::p(), RM, &mut cc.borrow_mut())))
    }
    fn sqrt(&self) -> Self {
        Mp(self.0.sqrt(Self::p(), RM))
    }
}

/// Principal square root of a real, as a complex number (`+i sqrt|x|` for negative `x`).
pub fn principal_sqrt<T: Real>(x: &T) -> Complex<T> {
    if x.is_negative() {
        Complex::new(T::zero(), (-x.clone()).sqrt())
    } else {
        Complex::new(x.sqrt(), T::zero())
    }
}

/// Converts a complex scalar to `Complex64`.
pub fn to_c64<T: Real>(z: &Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mp_matches_f64_at_double_precision() {
        let x = Mp::from_ratio(12, 5);
        let s = (x * Mp::pi() / Mp::from_i64(4)).sin();
        assert!((s.to_f64() - (0.6 * std::f64::consts::PI).sin()).abs() < 1e-15);
    }

    #[test]
    fn mp_to_f64_handles_sign_and_scale() {
        assert_eq!(Mp::from_f64(-3.0).to_f64(), -3.0);
        assert_eq!(Mp::from_f64(0.75).to_f64(), 0.75);
        let tiny = Mp::from_f64(1e-70).to_f64();
        assert!((tiny / 1e-70 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mp_resolves_beyond_double() {
        let one = Mp::one();
        let eps = Mp::from_f64(1e-40);
        let d = (one.clone() + eps.clone()) - one;
        assert!((d.to_f64() / 1e-40 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn principal_sqrt_of_negative_is_imaginary() {
        let z = principal_sqrt(&-4.0f64);
        assert_eq!(z, Complex::new(0.0, 2.0));
    }
}
