use anyon_data::linalg::{identity, CMat};
use anyon_data::{Label, ModelParams};
use fusion_space::{control_basis_transform, ControlBasis};
use serde_json::{json, Value};

use crate::GateError;

/// A two-qubit gate on H_2 induced by acting separately on the two control channels.
#[derive(Clone, Debug)]
pub struct ControlledGate {
    /// The gate in the tree basis of H_2.
    pub matrix: CMat,
    /// Restriction to the four computational trees.
    pub computational: CMat,
    /// Largest entry between computational and noncomputational trees.
    pub leakage: f64,
    pub schmidt_rank: usize,
}

impl ControlledGate {
    pub fn to_json(&self) -> Value {
        json!({
            "matrix": anyon_data::dump::matrix_json(&self.matrix),
            "computational": anyon_data::dump::matrix_json(&self.computational),
            "leakage": self.leakage,
            "schmidt_rank": self.schmidt_rank,
        })
    }
}

/// T^-1 (U_vac + U_psi) T where T maps the tree basis of H_2 to the control basis.
pub fn controlled_gate(p: &ModelParams, u_vacuum: &CMat, u_psi: &CMat) -> Result<ControlledGate, GateError> {
    let cb: ControlBasis = control_basis_transform(p, 2)?;
    let vac = cb.sector(Label::Vacuum);
    let psi = cb.sector(Label::Psi);
    if u_vacuum.shape() != (vac.len(), vac.len()) || u_psi.shape() != (psi.len(), psi.len()) {
        return Err(GateError::ShapeMismatch(format!(
            "sector actions must be {0}x{0} and {1}x{1}",
            vac.len(),
            psi.len()
        )));
    }
    let mut block = CMat::zeros(cb.dim(), cb.dim());
    for (sector, u) in [(&vac, u_vacuum), (&psi, u_psi)] {
        for (i, &r) in sector.iter().enumerate() {
            for (j, &c) in sector.iter().enumerate() {
                block[(r, c)] = u[(i, j)];
            }
        }
    }
    let matrix = cb.inverse_transform()? * block * &cb.transform;
    let mask = cb.space.computational_mask.clone();
    let comp: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
    let rest: Vec<usize> = (0..mask.len()).filter(|&i| !mask[i]).collect();
    let mut leakage: f64 = 0.0;
    for &i in &comp {
        for &j in &rest {
            leakage = leakage.max(matrix[(i, j)].norm()).max(matrix[(j, i)].norm());
        }
    }
    let computational = CMat::from_fn(comp.len(), comp.len(), |i, j| matrix[(comp[i], comp[j])]);
    let schmidt_rank = schmidt_rank(&computational, 1e-9);
    Ok(ControlledGate { matrix, computational, leakage, schmidt_rank })
}

/// Operator-Schmidt rank of a two-qubit operator (qubit 0 varies fastest in the index).
pub fn schmidt_rank(m: &CMat, tol: f64) -> usize {
    assert_eq!(m.shape(), (4, 4), "two-qubit operator expected");
    // Realignment: R[(i0, j0), (i1, j1)] = M[i0 + 2 i1, j0 + 2 j1].
    let r = CMat::from_fn(4, 4, |a, b| {
        let (i0, j0) = (a / 2, a % 2);
        let (i1, j1) = (b / 2, b % 2);
        m[(i0 + 2 * i1, j0 + 2 * j1)]
    });
    let sv = r.singular_values();
    let top = sv.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * top).count()
}

/// The identity on both channels.
pub fn trivial_actions(cb: &ControlBasis) -> (CMat, CMat) {
    (identity(cb.sector(Label::Vacuum).len()), identity(cb.sector(Label::Psi).len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use anyon_data::linalg::{c, kron, max_diff};

    #[test]
    fn trivial_actions_give_identity() {
        let p = ModelParams::from_f64(2.4).unwrap();
        let cb = control_basis_transform(&p, 2).unwrap();
        let (v, s) = trivial_actions(&cb);
        let g = controlled_gate(&p, &v, &s).unwrap();
        assert!(max_diff(&g.matrix, &identity(6)) < 1e-12);
        assert_eq!(g.schmidt_rank, 1);
    }

    #[test]
    fn schmidt_rank_of_products_and_cz() {
        let a = CMat::from_row_slice(2, 2, &[c(0.0, 1.0), c(2.0, 0.0), c(1.0, 0.0), c(0.5, 0.0)]);
        let b = CMat::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(3.0, 0.0), c(0.0, -1.0)]);
        assert_eq!(schmidt_rank(&kron(&a, &b), 1e-12), 1);
        let cz = anyon_data::linalg::diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(schmidt_rank(&cz, 1e-12), 2);
    }
}
