use crate::error::AnyonError;
use crate::label::Label;

/// Fusion outcomes of `a x b`, each with multiplicity one, in a fixed order
/// (alpha shifts descending, then vacuum before the heavier channel).
pub fn fuse(a: Label, b: Label) -> Result<Vec<Label>, AnyonError> {
    use Label::*;
    let out = match (a, b) {
        (Vacuum, x) | (x, Vacuum) => vec![x],
        (Alpha(k), Sigma) | (Sigma, Alpha(k)) => vec![Alpha(k + 1), Alpha(k - 1)],
        (Alpha(k), Psi) | (Psi, Alpha(k)) => vec![Alpha(k + 2), Alpha(k), Alpha(k - 2)],
        (Sigma, Sigma) => vec![Vacuum, Psi],
        (Sigma, Psi) | (Psi, Sigma) => vec![Sigma, S32],
        (Psi, Psi) => vec![Vacuum, P2],
        _ => return Err(AnyonError::UnsupportedPair(a, b)),
    };
    Ok(out)
}

/// N^c_{ab} is 0 or 1 for every tabulated pair.
pub fn multiplicity(a: Label, b: Label, c: Label) -> Result<u32, AnyonError> {
    Ok(fuse(a, b)?.contains(&c) as u32)
}

pub fn admissible(a: Label, b: Label, c: Label) -> bool {
    multiplicity(a, b, c).map(|n| n == 1).unwrap_or(false)
}
