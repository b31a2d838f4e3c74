use std::fmt;
use std::str::FromStr;

use crate::error::AnyonError;

/// Anyon type. `Alpha(k)` is the alpha-type anyon with value `alpha + k`,
/// where `alpha` is the base parameter held by [`crate::ModelParams`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Vacuum,
    Sigma,
    Psi,
    S32,
    P2,
    Alpha(i32),
}

impl Label {
    pub const ALPHA: Label = Label::Alpha(0);

    pub fn is_alpha(self) -> bool {
        matches!(self, Label::Alpha(_))
    }

    pub fn shift(self) -> Option<i32> {
        match self {
            Label::Alpha(k) => Some(k),
            _ => None,
        }
    }

    /// Shifts an alpha-type label; other labels are returned unchanged.
    pub fn shifted(self, by: i32) -> Label {
        match self {
            Label::Alpha(k) => Label::Alpha(k + by),
            other => other,
        }
    }

    /// q-spin for the fixed labels. Alpha-type spin depends on the base parameter.
    pub fn fixed_spin(self) -> Option<f64> {
        match self {
            Label::Vacuum => Some(0.0),
            Label::Sigma => Some(0.5),
            Label::Psi => Some(1.0),
            Label::S32 => Some(1.5),
            Label::P2 => Some(2.0),
            Label::Alpha(_) => None,
        }
    }

    /// Half the q-spin weight this leaf contributes to the qubit-count convention.
    pub(crate) fn sigma_weight(self) -> usize {
        match self {
            Label::Sigma => 1,
            Label::Psi => 2,
            _ => 0,
        }
    }

    /// Compact token: `a`, `a+1`, `s`, `psi`, `1`, `s32`, `p2`.
    pub fn token(self) -> String {
        match self {
            Label::Vacuum => "1".into(),
            Label::Sigma => "s".into(),
            Label::Psi => "psi".into(),
            Label::S32 => "s32".into(),
            Label::P2 => "p2".into(),
            Label::Alpha(0) => "a".into(),
            Label::Alpha(k) => format!("a{k:+}"),
        }
    }
}

/// Counts the qubit-convention weight of a leaf sequence: sigmas plus two per psi, halved.
pub fn pair_count(leaves: &[Label]) -> usize {
    leaves.iter().map(|l| l.sigma_weight()).sum::<usize>() / 2
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for Label {
    type Err = AnyonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        let label = match t.as_str() {
            "1" | "vac" | "vacuum" => Label::Vacuum,
            "s" | "sigma" => Label::Sigma,
            "psi" => Label::Psi,
            "s32" => Label::S32,
            "p2" => Label::P2,
            "a" | "alpha" => Label::Alpha(0),
            _ => {
                let rest = t.strip_prefix("alpha").or_else(|| t.strip_prefix('a'));
                match rest.and_then(|r| r.strip_prefix('+').unwrap_or(r).parse::<i32>().ok()) {
                    Some(k) => Label::Alpha(k),
                    None => return Err(AnyonError::BadToken(s.to_string())),
                }
            }
        };
        Ok(label)
    }
}

/// Parses a comma-separated label list such as `a,psi,s,s`.
pub fn parse_labels(s: &str) -> Result<Vec<Label>, AnyonError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}
