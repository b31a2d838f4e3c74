use anyon_data::{bubble_pop, bubble_sign, modified_dimension, pair_count, Label, ModelParams, Real};
use serde_json::{json, Value};

use crate::tree::{enumerate_basis, FusionTree};
use crate::SpaceError;

/// Whether `leaves` is (alpha, sigma^{2n}) with the charge equal to the first leaf.
pub fn qubit_layout(leaves: &[Label], charge: Label) -> Option<usize> {
    let (&first, rest) = leaves.split_first()?;
    let ok = first.is_alpha() && charge == first && rest.len() % 2 == 0 && rest.iter().all(|&l| l == Label::Sigma);
    ok.then_some(rest.len() / 2)
}

/// Positions of the chain at which a computational tree must sit at the first leaf:
/// wherever the accumulated sigma weight (psi counts twice) is even.
fn return_points(leaves: &[Label]) -> Vec<usize> {
    let mut w = 0usize;
    let mut out = Vec::new();
    for (i, l) in leaves.iter().enumerate().skip(1) {
        w += match l {
            Label::Sigma => 1,
            Label::Psi => 2,
            _ => 0,
        };
        if w.is_multiple_of(2) {
            out.push(i);
        }
    }
    out
}

pub fn is_computational(tree: &FusionTree) -> bool {
    let chain = tree.chain();
    let base = tree.leaves[0];
    return_points(&tree.leaves).into_iter().all(|i| chain[i] == base)
}

fn colex_bits(tree: &FusionTree) -> Vec<u8> {
    let chain = tree.chain();
    let base = chain[0];
    (1..chain.len()).step_by(2).map(|i| u8::from(chain[i] != base.shifted(1))).rev().collect()
}

/// An ordered fusion-tree basis with no metric attached.
#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    pub leaves: Vec<Label>,
    pub charge: Label,
    pub trees: Vec<FusionTree>,
}

impl Basis {
    /// Lexicographic order, except that (alpha, sigma^{2n}) spaces list computational
    /// trees first (first qubit varying fastest) followed by the rest in lexicographic order.
    pub fn new(leaves: &[Label], charge: Label) -> Result<Self, SpaceError> {
        let mut trees = enumerate_basis(leaves, charge)?;
        if qubit_layout(leaves, charge).is_some() {
            let (mut comp, rest): (Vec<_>, Vec<_>) = trees.into_iter().partition(is_computational);
            comp.sort_by_key(colex_bits);
            comp.extend(rest);
            trees = comp;
        }
        Ok(Basis { leaves: leaves.to_vec(), charge, trees })
    }

    pub fn dim(&self) -> usize {
        self.trees.len()
    }

    pub fn index_of(&self, tree: &FusionTree) -> Option<usize> {
        self.trees.iter().position(|t| t == tree)
    }

    /// Index of the tree with the given chain a1..ak.
    pub fn index_of_chain(&self, chain: &[Label]) -> Option<usize> {
        self.trees.iter().position(|t| t.chain()[1..] == *chain)
    }

    pub fn computational_mask(&self) -> Vec<bool> {
        self.trees.iter().map(is_computational).collect()
    }
}

/// Diagonal metric of a basis: signs plus the overall scale |d_root|.
#[derive(Clone, Debug, PartialEq)]
pub struct Gram {
    pub signs: Vec<i8>,
    pub scale: f64,
}

/// Sign of <t, t>: (-1)^{n+1} sign(d_root) prod sign(B) over the tree's vertices.
pub fn tree_sign<T: Real>(p: &ModelParams<T>, tree: &FusionTree, extra_pairs: usize) -> Result<i8, SpaceError> {
    let n = pair_count(&tree.leaves) + extra_pairs;
    let d = modified_dimension(&p.value(tree.root))?;
    let mut s: i8 = if n % 2 == 1 { 1 } else { -1 };
    if d.is_negative() {
        s = -s;
    }
    for (a, l, c) in tree.vertices() {
        s *= bubble_sign(p, a, l, c)?;
    }
    Ok(s)
}

pub fn gram<T: Real>(p: &ModelParams<T>, basis: &Basis) -> Result<Gram, SpaceError> {
    let signs = basis.trees.iter().map(|t| tree_sign(p, t, 0)).collect::<Result<Vec<_>, _>>()?;
    let scale = modified_dimension(&p.value(basis.charge))?.abs().to_f64();
    Ok(Gram { signs, scale })
}

/// Full Gram matrix in the unnormalized tree basis, built by popping bubbles from the
/// first vertex upward: a mismatch of internal labels gives zero, matching labels give
/// the product of bubble coefficients times (-1)^{n+1} d_root.
pub fn gram_matrix(p: &ModelParams, basis: &Basis) -> Result<Vec<Vec<f64>>, SpaceError> {
    let n = basis.dim();
    let mut g = vec![vec![0.0; n]; n];
    for (i, ti) in basis.trees.iter().enumerate() {
        for (j, tj) in basis.trees.iter().enumerate() {
            let (ci, cj) = (ti.chain(), tj.chain());
            let mut v = 1.0;
            for k in 1..ci.len() {
                if ci[k] != cj[k] {
                    v = 0.0;
                    break;
                }
                v *= bubble_pop(p, ci[k - 1], ti.leaves[k], ci[k])?;
            }
            if v != 0.0 {
                let pairs = pair_count(&ti.leaves);
                let sign = if pairs % 2 == 1 { 1.0 } else { -1.0 };
                v *= sign * modified_dimension(&p.value(ti.root))?;
            }
            g[i][j] = v;
        }
    }
    Ok(g)
}

/// A basis with its indefinite metric.
#[derive(Clone, Debug, PartialEq)]
pub struct IndefSpace {
    pub basis: Basis,
    pub metric_signs: Vec<i8>,
    pub scale: f64,
    pub computational_mask: Vec<bool>,
}

impl IndefSpace {
    pub fn new<T: Real>(p: &ModelParams<T>, leaves: &[Label], charge: Label) -> Result<Self, SpaceError> {
        Self::from_basis(p, Basis::new(leaves, charge)?)
    }

    pub fn from_basis<T: Real>(p: &ModelParams<T>, basis: Basis) -> Result<Self, SpaceError> {
        let Gram { signs, scale } = gram(p, &basis)?;
        let computational_mask = basis.computational_mask();
        Ok(IndefSpace { basis, metric_signs: signs, scale, computational_mask })
    }

    /// H_n = (alpha, sigma^{2n}) at charge alpha.
    pub fn qubits<T: Real>(p: &ModelParams<T>, n: usize) -> Result<Self, SpaceError> {
        let mut leaves = vec![Label::ALPHA];
        leaves.extend(std::iter::repeat_n(Label::Sigma, 2 * n));
        Self::new(p, &leaves, Label::ALPHA)
    }

    /// The four-dimensional psi-sector (alpha, psi, sigma, sigma) at charge alpha.
    pub fn psi_sector<T: Real>(p: &ModelParams<T>) -> Result<Self, SpaceError> {
        Self::new(p, &[Label::ALPHA, Label::Psi, Label::Sigma, Label::Sigma], Label::ALPHA)
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn trees(&self) -> &[FusionTree] {
        &self.basis.trees
    }

    pub fn signature(&self) -> (usize, usize) {
        let pos = self.metric_signs.iter().filter(|&&s| s > 0).count();
        (pos, self.metric_signs.len() - pos)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "leaves": self.basis.leaves.iter().map(|l| l.token()).collect::<Vec<_>>(),
            "charge": self.basis.charge.token(),
            "basis": self.basis.trees.iter().map(|t| t.compact()).collect::<Vec<_>>(),
            "metric": self.metric_signs,
            "scale": self.scale,
            "computational": self.computational_mask,
        })
    }
}
