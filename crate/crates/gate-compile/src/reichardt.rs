use std::f64::consts::PI;

use anyon_data::linalg::{inverse, CMat};
use anyon_data::real::to_c64;
use anyon_data::{set_mp_precision, ModelParams, Mp, Real};
use braid_engine::BraidWord;
use serde_json::{json, Value};

use crate::protocol::Protocol;
use crate::GateError;

pub const MAX_DEPTH: usize = 4;
/// Allowed relative deviation from the fifth-power law for k = 1, 2.
pub const LAW_TOL_SHALLOW: f64 = 1e-6;
/// Allowed relative deviation from k = 3 on; beyond it the iteration reports exhausted precision.
pub const LAW_TOL_DEEP: f64 = 1e-3;

/// One iterate W_k on the psi sector.
#[derive(Clone, Debug)]
pub struct LeakageReport {
    pub word: BraidWord,
    pub k: usize,
    /// |<psi_2|W_k|psi_3>|, the unitary block.
    pub su2: f64,
    /// |<psi_0|W_k|psi_1>|, the block with indefinite metric.
    pub su11: f64,
    /// Computational diagonal phases (psi_1, psi_2) with their mean removed.
    pub theta: [f64; 2],
    /// Arguments of all four diagonal entries.
    pub raw_phases: [f64; 4],
    pub word_length: usize,
    /// Largest relative deviation of either norm from the fifth power of the previous one.
    pub law_defect: Option<f64>,
}

impl LeakageReport {
    pub fn max_norm(&self) -> f64 {
        self.su2.max(self.su11)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "word": self.word.to_string(),
            "k": self.k,
            "su2": self.su2,
            "su11": self.su11,
            "psi01": self.su11,
            "psi23": self.su2,
            "theta": self.theta,
            "raw_phases": self.raw_phases,
            "len": self.word_length,
            "law_defect": self.law_defect,
        })
    }
}

fn check_square<T: Real>(m: &CMat<T>, n: usize, what: &str) -> Result<(), GateError> {
    if m.shape() != (n, n) {
        return Err(GateError::ShapeMismatch(format!("{what} is {}x{}, expected {n}x{n}", m.nrows(), m.ncols())));
    }
    Ok(())
}

/// W D W^-1 D^3 W D^3 W^-1 D W
pub fn reichardt_step<T: Real>(w: &CMat<T>, d: &CMat<T>) -> Result<CMat<T>, GateError> {
    let n = w.nrows();
    check_square(w, n, "W")?;
    check_square(d, n, "D")?;
    let off = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| to_c64(&d[(i, j)]).norm())
        .fold(0.0, f64::max);
    if off > 1e-12 {
        return Err(GateError::NotDiagonal(off));
    }
    let w_inv = inverse(w).ok_or_else(|| GateError::ShapeMismatch("W is singular".into()))?;
    let d3 = d * d * d;
    // Leftmost factor acts first, so the matrix product runs right to left.
    Ok(w * d * &w_inv * &d3 * w * &d3 * &w_inv * d * w)
}

/// Word of W_{k+1} built from the word of W_k and D.
pub fn reichardt_word(w: &BraidWord, d: &BraidWord) -> BraidWord {
    let wi = w.inverse();
    let d3 = d.repeat(3);
    w.then(d).then(&wi).then(&d3).then(w).then(&d3).then(&wi).then(d).then(w).reduced()
}

/// (|<psi_2|W|psi_3>|, |<psi_0|W|psi_1>|)
pub fn leakage_norms<T: Real>(w: &CMat<T>) -> (f64, f64) {
    (to_c64(&w[(2, 3)]).norm(), to_c64(&w[(0, 1)]).norm())
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y - 2.0 * PI
    } else {
        y
    }
}

/// Computational phases with the mean removed, and the raw diagonal arguments.
pub fn diagonal_phases<T: Real>(w: &CMat<T>) -> ([f64; 2], [f64; 4]) {
    let raw: [f64; 4] = std::array::from_fn(|i| to_c64(&w[(i, i)]).arg());
    let mean = (raw[1] + raw[2]) / 2.0;
    ([wrap(raw[1] - mean), wrap(raw[2] - mean)], raw)
}

/// Relative deviation of `next` from `prev^5`, evaluated in the working precision.
pub fn law_defect<T: Real>(prev: &CMat<T>, next: &CMat<T>) -> f64 {
    let norm = |z: &num_complex::Complex<T>| (z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone()).sqrt();
    [(0, 1), (2, 3)]
        .iter()
        .map(|&(i, j)| {
            let p = norm(&prev[(i, j)]);
            let target = p.clone() * p.clone() * p.clone() * p.clone() * p;
            let got = norm(&next[(i, j)]);
            if target.is_zero() {
                got.to_f64()
            } else {
                ((got - target.clone()) / target).abs().to_f64()
            }
        })
        .fold(0.0, f64::max)
}

fn report<T: Real>(w: &CMat<T>, word: &BraidWord, k: usize, law: Option<f64>) -> LeakageReport {
    let (su2, su11) = leakage_norms(w);
    let (theta, raw_phases) = diagonal_phases(w);
    LeakageReport { word: word.clone(), k, su2, su11, theta, raw_phases, word_length: word.crossing_count(), law_defect: law }
}

/// Iterates the recursion k times from the protocol's seed and checks the fifth-power law.
pub fn reichardt_iterate<T: Real>(proto: &Protocol<T>, k: usize) -> Result<Vec<LeakageReport>, GateError> {
    if k > MAX_DEPTH {
        return Err(GateError::DepthExceeded(k));
    }
    let mut w = proto.w.clone();
    let mut word = proto.seed.clone();
    let mut out = vec![report(&w, &word, 0, None)];
    for i in 1..=k {
        let next = reichardt_step(&w, &proto.d)?;
        let defect = law_defect(&w, &next);
        if defect.is_nan() || defect > LAW_TOL_DEEP {
            return Err(GateError::PrecisionExhausted { k: i, defect });
        }
        word = reichardt_word(&word, &proto.d_word);
        out.push(report(&next, &word, i, Some(defect)));
        w = next;
    }
    Ok(out)
}

/// Same as [`reichardt_iterate`] with every symbol evaluated at `bits` of binary precision.
pub fn reichardt_iterate_extended(
    params: &ModelParams<f64>,
    seed: &BraidWord,
    k: usize,
    bits: usize,
) -> Result<Vec<LeakageReport>, GateError> {
    set_mp_precision(bits);
    let proto = Protocol::<Mp>::new(params.convert::<Mp>(), seed.clone())?;
    reichardt_iterate(&proto, k)
}

/// CSV table with columns k, su2, su11, ratio_law_defect.
pub fn convergence_csv(reports: &[LeakageReport]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "su2", "su11", "ratio_law_defect"])?;
    for r in reports {
        let law = r.law_defect.map(|d| format!("{d:e}")).unwrap_or_default();
        w.write_record([r.k.to_string(), format!("{:e}", r.su2), format!("{:e}", r.su11), law])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}
