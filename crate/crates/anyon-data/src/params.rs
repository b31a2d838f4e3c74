use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::AnyonError;
use crate::label::Label;
use crate::real::Real;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Base alpha, kept exact when given as a fraction or a plain decimal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AlphaSpec {
    Ratio(i64, i64),
    Float(f64),
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl AlphaSpec {
    pub fn ratio(num: i64, den: i64) -> Result<Self, AnyonError> {
        if den == 0 {
            return Err(AnyonError::BadAlpha(format!("{num}/0")));
        }
        let g = gcd(num, den).max(1) * den.signum();
        Ok(AlphaSpec::Ratio(num / g, den / g))
    }

    pub fn value<T: Real>(&self) -> T {
        match *self {
            AlphaSpec::Ratio(n, d) => T::from_ratio(n, d),
            AlphaSpec::Float(x) => T::from_f64(x),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value::<f64>()
    }

    pub fn is_integer(&self) -> bool {
        match *self {
            AlphaSpec::Ratio(n, d) => n % d == 0,
            AlphaSpec::Float(x) => x.fract() == 0.0,
        }
    }
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlphaSpec::Ratio(n, 1) => write!(f, "{n}"),
            AlphaSpec::Ratio(n, d) => write!(f, "{n}/{d}"),
            AlphaSpec::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for AlphaSpec {
    type Err = AnyonError;

    /// Accepts `12/5`, plain decimals such as `2.4` (parsed exactly), or any float literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AnyonError::BadAlpha(s.to_string());
        if let Some((n, d)) = s.split_once('/') {
            let n = n.trim().parse::<i64>().map_err(|_| bad())?;
            let d = d.trim().parse::<i64>().map_err(|_| bad())?;
            return AlphaSpec::ratio(n, d);
        }
        let plain = s.trim_start_matches(['+', '-']);
        if !plain.is_empty() && plain.chars().all(|c| c.is_ascii_digit() || c == '.') && plain.matches('.').count() <= 1 {
            let (int, frac) = plain.split_once('.').unwrap_or((plain, ""));
            if int.len() + frac.len() <= 17 {
                let digits = format!("{int}{frac}");
                let mut num = digits.parse::<i64>().map_err(|_| bad())?;
                if s.starts_with('-') {
                    num = -num;
                }
                return AlphaSpec::ratio(num, 10i64.pow(frac.len() as u32));
            }
        }
        s.parse::<f64>().ok().filter(|x| x.is_finite()).map(AlphaSpec::Float).ok_or_else(bad)
    }
}

/// Base parameter of the model together with the numeric tolerance.
#[derive(Clone, Debug)]
pub struct ModelParams<T: Real = f64> {
    spec: AlphaSpec,
    alpha: T,
    tol: f64,
}

impl ModelParams<f64> {
    pub fn from_f64(alpha: f64) -> Result<Self, AnyonError> {
        Self::new(AlphaSpec::Float(alpha))
    }

    /// Accepts "12/5", exact decimals such as "2.4", or any float literal.
    pub fn parse(alpha: &str) -> Result<Self, AnyonError> {
        Self::new(alpha.parse()?)
    }
}

impl<T: Real> ModelParams<T> {
    pub fn new(spec: AlphaSpec) -> Result<Self, AnyonError> {
        Self::with_tol(spec, DEFAULT_TOL)
    }

    pub fn with_tol(spec: AlphaSpec, tol: f64) -> Result<Self, AnyonError> {
        let x = spec.to_f64();
        if !x.is_finite() {
            return Err(AnyonError::BadAlpha(spec.to_string()));
        }
        if spec.is_integer() {
            return Err(AnyonError::IntegerAlpha(x));
        }
        Ok(ModelParams { spec, alpha: spec.value(), tol })
    }

    /// The same parameters evaluated in another scalar type.
    pub fn convert<U: Real>(&self) -> ModelParams<U> {
        ModelParams { spec: self.spec, alpha: self.spec.value(), tol: self.tol }
    }

    pub fn spec(&self) -> AlphaSpec {
        self.spec
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn alpha_f64(&self) -> f64 {
        self.spec.to_f64()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn set_tol(&mut self, tol: f64) {
        self.tol = tol;
    }

    /// Whether alpha lies in (2, 3), where the computational metric is definite.
    pub fn definite_regime(&self) -> bool {
        let a = self.alpha_f64();
        a > 2.0 && a < 3.0
    }

    /// q = e^{i pi / 4}.
    pub fn q(&self) -> Complex<T> {
        self.q_pow(&T::one())
    }

    /// q^x = e^{i pi x / 4}.
    pub fn q_pow(&self, x: &T) -> Complex<T> {
        (x.clone() * T::pi() / T::from_i64(4)).cis()
    }

    /// Numeric value of a label: alpha + k for `Alpha(k)`, the q-spin otherwise.
    pub fn value(&self, label: Label) -> T {
        match label {
            Label::Alpha(k) => self.alpha.clone() + T::from_i64(k as i64),
            other => T::from_f64(other.fixed_spin().unwrap_or(0.0)),
        }
    }

    pub(crate) fn guard(&self, den: &T, scale: f64, what: impl FnOnce() -> String) -> Result<(), AnyonError> {
        if den.abs().to_f64() < self.tol * scale.max(1.0) {
            Err(AnyonError::SingularParameter(what()))
        } else {
            Ok(())
        }
    }
}
