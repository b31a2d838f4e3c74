//! JSON rendering of the model tables and of complex matrices.

use num_complex::Complex64 as C64;
use serde_json::{json, Map, Value};

use crate::bubble::{bubble_pop, modified_dimension, s_sign, t_sign};
use crate::error::AnyonError;
use crate::fsym::f_matrix;
use crate::label::Label;
use crate::linalg::CMat;
use crate::params::ModelParams;
use crate::rsym::r_symbol;

/// `[re, im]`; serde_json writes the shortest decimal that re-parses to the same bits.
pub fn complex_json(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn matrix_json(m: &CMat) -> Value {
    Value::Array((0..m.nrows()).map(|i| Value::Array((0..m.ncols()).map(|j| complex_json(m[(i, j)])).collect())).collect())
}

/// Inverse of [`matrix_json`].
pub fn matrix_from_json(v: &Value) -> Option<CMat> {
    let rows = v.as_array()?;
    let n = rows.len();
    let m = rows.first().map(|r| r.as_array().map(Vec::len)).unwrap_or(Some(0))?;
    let mut out = CMat::zeros(n, m);
    for (i, r) in rows.iter().enumerate() {
        let r = r.as_array()?;
        if r.len() != m {
            return None;
        }
        for (j, z) in r.iter().enumerate() {
            let z = z.as_array()?;
            out[(i, j)] = C64::new(z.first()?.as_f64()?, z.get(1)?.as_f64()?);
        }
    }
    Some(out)
}

fn key(labels: &[Label], out: Label) -> String {
    let ins: Vec<String> = labels.iter().map(|l| l.token()).collect();
    format!("{};{}", ins.join(","), out.token())
}

fn insert_or_reason(map: &mut Map<String, Value>, k: String, v: Result<Value, AnyonError>) {
    map.insert(k, v.unwrap_or_else(|e| json!({ "error": e.to_string() })));
}

/// Every tabulated B, R and F entry with the alpha rows instantiated at the base value.
pub fn model_dump(p: &ModelParams) -> Result<Value, AnyonError> {
    use Label::*;
    let a = Alpha(0);
    let mut b = Map::new();
    let b_rows = [
        (Sigma, Sigma, Psi),
        (Psi, Sigma, S32),
        (Sigma, Psi, S32),
        (Sigma, Sigma, Vacuum),
        (Psi, Sigma, Sigma),
        (Sigma, Psi, Sigma),
        (a, Vacuum, a),
        (a, Sigma, Alpha(1)),
        (a, Sigma, Alpha(-1)),
        (a, Psi, Alpha(2)),
        (a, Psi, a),
        (a, Psi, Alpha(-2)),
        (a, S32, Alpha(1)),
        (a, S32, Alpha(-1)),
    ];
    for (x, y, z) in b_rows {
        insert_or_reason(&mut b, key(&[x, y], z), bubble_pop(p, x, y, z).map(|v| json!(v)));
    }
    let mut r = Map::new();
    let r_rows = [
        (Psi, Sigma, S32),
        (Sigma, Psi, S32),
        (Psi, Sigma, Sigma),
        (Sigma, Psi, Sigma),
        (Sigma, Sigma, Psi),
        (Sigma, Sigma, Vacuum),
        (a, Psi, Alpha(2)),
        (a, Psi, a),
        (a, Psi, Alpha(-2)),
        (Psi, a, Alpha(2)),
        (Psi, a, a),
        (Psi, a, Alpha(-2)),
        (a, Sigma, Alpha(1)),
        (a, Sigma, Alpha(-1)),
        (Sigma, a, Alpha(1)),
        (Sigma, a, Alpha(-1)),
    ];
    for (x, y, z) in r_rows {
        insert_or_reason(&mut r, key(&[x, y], z), r_symbol(p, x, y, z).map(complex_json));
    }
    let mut f = Map::new();
    let f_rows = [
        (Sigma, Sigma, a),
        (Sigma, Sigma, Alpha(2)),
        (Sigma, Sigma, Alpha(-2)),
        (Psi, Sigma, Alpha(1)),
        (Psi, Sigma, Alpha(-1)),
        (Sigma, Psi, Alpha(1)),
        (Sigma, Psi, Alpha(-1)),
    ];
    for (y, z, d) in f_rows {
        let v = f_matrix(p, a, y, z, d).map(|m| {
            json!({
                "rows": m.rows.iter().map(|l| l.token()).collect::<Vec<_>>(),
                "cols": m.cols.iter().map(|l| l.token()).collect::<Vec<_>>(),
                "matrix": matrix_json(&m.data),
            })
        });
        insert_or_reason(&mut f, key(&[a, y, z], d), v);
    }
    Ok(json!({
        "alpha": p.alpha_f64(),
        "d_alpha": modified_dimension(p.alpha())?,
        "B": b,
        "F": f,
        "R": r,
        "s": s_sign(p.alpha())?,
        "t": t_sign(p.alpha())?,
    }))
}
