use anyon_data::linalg::{adjoint, inverse, signature, CMat};
use anyon_data::{f_matrix, AnyonError, Label, ModelParams, Real};
use num_complex::Complex;
use num_traits::Zero;

use crate::space::{tree_sign, Basis, IndefSpace};
use crate::tree::FusionTree;
use crate::SpaceError;

/// Basis of H_n in which the first two sigmas are fused first into a control
/// channel c in {1, psi}: the trees of (alpha, c, sigma^{2n-2}), vacuum sector first.
#[derive(Clone, Debug)]
pub struct ControlBasis {
    pub entries: Vec<(Label, FusionTree)>,
    pub metric_signs: Vec<i8>,
    /// Coordinates in this basis = transform * coordinates in the tree basis of H_n.
    pub transform: CMat,
    pub space: IndefSpace,
}

impl ControlBasis {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Indices of the entries in the given control channel.
    pub fn sector(&self, c: Label) -> Vec<usize> {
        self.entries.iter().enumerate().filter(|(_, (ch, _))| *ch == c).map(|(i, _)| i).collect()
    }

    pub fn inverse_transform(&self) -> Result<CMat, SpaceError> {
        inverse(&self.transform).ok_or_else(|| SpaceError::Anyon(AnyonError::SingularParameter("control basis transform".into())))
    }

    /// max |T^dagger J_control T - J_tree|.
    pub fn metric_transport_defect(&self) -> f64 {
        let lhs = adjoint(&self.transform) * signature::<f64>(&self.metric_signs) * &self.transform;
        anyon_data::linalg::max_diff(&lhs, &signature(&self.space.metric_signs))
    }
}

/// Change of basis from the tree basis of H_n to the control basis, assembled from
/// F^{alpha sigma sigma}_{a2} at the first two sigma leaves.
pub fn control_basis_transform(p: &ModelParams, n: usize) -> Result<ControlBasis, SpaceError> {
    if n == 0 {
        return Err(SpaceError::NotQubitSpace);
    }
    let space = IndefSpace::qubits(p, n)?;
    let mut entries = Vec::new();
    let mut metric_signs = Vec::new();
    for c in [Label::Vacuum, Label::Psi] {
        let mut leaves = vec![Label::ALPHA, c];
        leaves.extend(std::iter::repeat_n(Label::Sigma, 2 * n - 2));
        let basis = Basis::new(&leaves, Label::ALPHA)?;
        for t in basis.trees {
            // The sigma pair's own bubble enters with one more pair in the (-1)^{n+1} factor.
            let pair = anyon_data::bubble_sign(p, Label::Sigma, Label::Sigma, c)?;
            let extra = usize::from(c == Label::Vacuum);
            metric_signs.push(tree_sign(p, &t, extra)? * pair);
            entries.push((c, t));
        }
    }
    let mut transform = CMat::zeros(entries.len(), space.dim());
    for (col, t) in space.trees().iter().enumerate() {
        let chain = t.chain();
        let (a1, a2) = (chain[1], chain[2]);
        let f = f_matrix(p, Label::ALPHA, Label::Sigma, Label::Sigma, a2)?;
        let Some(m) = f.col(a1) else { continue };
        for (row, (c, ct)) in entries.iter().enumerate() {
            if ct.chain()[1..] != chain[2..] {
                continue;
            }
            if let Some(r) = f.row(*c) {
                transform[(row, col)] = f.data[(r, m)];
            }
        }
    }
    if transform.iter().all(|z: &Complex<f64>| z.is_zero()) {
        return Err(SpaceError::Anyon(AnyonError::SingularParameter("empty control transform".into())));
    }
    Ok(ControlBasis { entries, metric_signs, transform, space })
}

/// Generic-precision helper: the sign of a control-basis tree.
pub fn control_tree_sign<T: Real>(p: &ModelParams<T>, c: Label, tree: &FusionTree) -> Result<i8, SpaceError> {
    let extra = usize::from(c == Label::Vacuum);
    Ok(tree_sign(p, tree, extra)? * anyon_data::bubble_sign(p, Label::Sigma, Label::Sigma, c)?)
}
