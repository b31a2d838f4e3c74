use thiserror::Error;

use crate::Label;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnyonError {
    #[error("alpha must be non-integer, got {0}")]
    IntegerAlpha(f64),
    #[error("fusion of {0} and {1} is not tabulated")]
    UnsupportedPair(Label, Label),
    #[error("symbol ({0}, {1}; {2}) is not tabulated")]
    UnsupportedTriple(Label, Label, Label),
    #[error("F-symbol family ({0}, {1}, {2}; {3}) is not tabulated")]
    UnsupportedFamily(Label, Label, Label, Label),
    #[error("singular parameter in {0}")]
    SingularParameter(String),
    #[error("unrecognised label token {0:?}")]
    BadToken(String),
    #[error("invalid alpha {0:?}")]
    BadAlpha(String),
}
