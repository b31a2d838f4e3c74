//! Property checks over the whole pipeline, runnable as one deterministic battery.

pub mod checks;
pub mod pentagon;
mod sample;

use std::fmt;

use anyon_data::ModelParams;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use pentagon::{pentagon_sweep, standard_sweep, PentagonSweep};
pub use sample::{near_singular, sample_alphas, GUARD_BAND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// Measured defect, reported whatever the status.
    pub defect: f64,
    pub detail: String,
}

impl CheckResult {
    pub fn new(name: &str, status: Status, defect: f64, detail: impl Into<String>) -> Self {
        CheckResult { name: name.to_string(), status, defect, detail: detail.into() }
    }

    /// Pass when `defect <= tol`.
    pub fn within(name: &str, defect: f64, tol: f64, detail: impl Into<String>) -> Self {
        let status = if defect <= tol { Status::Pass } else { Status::Fail };
        Self::new(name, status, defect, detail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": self.status.to_string(),
            "defect": if self.defect.is_finite() { json!(self.defect) } else { json!(null) },
            "detail": self.detail,
        })
    }
}

type Check = fn(&ModelParams, u64) -> CheckResult;

const CHECKS: &[Check] = &[
    checks::affine_relation,
    checks::b2_order,
    checks::b2_x_b2_squared_order,
    checks::blocks,
    checks::closed_forms,
    checks::computational_positive,
    checks::control_transform,
    checks::controlled_gate_entangles,
    checks::d_identity,
    checks::diagonal_phases_k3,
    checks::dimensions,
    checks::encode_decode,
    checks::fifth_power_law,
    checks::f_pseudo_unitarity,
    checks::pentagon,
    checks::pseudo_unitarity,
    checks::r_unit_modulus,
    checks::signature_h1,
    checks::signature_h2,
    checks::st_periodicity,
    checks::vacuum_triviality,
    checks::w_leakage,
];

/// Runs every check; the report is sorted by name and depends only on `(params, seed)`.
pub fn run_all(params: &ModelParams, seed: u64) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = CHECKS.par_iter().map(|c| c(params, seed)).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn failures(report: &[CheckResult]) -> usize {
    report.iter().filter(|r| r.status == Status::Fail).count()
}

pub fn report_json(report: &[CheckResult]) -> Value {
    json!({
        "checks": report.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        "failures": failures(report),
        "skipped": report.iter().filter(|r| r.status == Status::Skipped).count(),
    })
}
