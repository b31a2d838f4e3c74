use anyon_data::AnyonError;
use braid_engine::BraidError;
use fusion_space::SpaceError;
use gate_compile::GateError;
use serde_json::json;

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub code: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: "Usage", message: message.into(), code: EXIT_USAGE }
    }

    pub fn io(e: std::io::Error) -> Self {
        CliError { kind: "Io", message: e.to_string(), code: EXIT_NUMERIC }
    }

    /// One-line JSON object for stderr.
    pub fn to_line(&self) -> String {
        json!({ "error": self.kind, "message": self.message, "code": self.code }).to_string()
    }
}

fn anyon_kind(e: &AnyonError) -> (&'static str, i32) {
    match e {
        AnyonError::IntegerAlpha(_) => ("IntegerAlpha", EXIT_NUMERIC),
        AnyonError::SingularParameter(_) => ("SingularParameter", EXIT_NUMERIC),
        AnyonError::UnsupportedPair(..) => ("UnsupportedPair", EXIT_NUMERIC),
        AnyonError::UnsupportedTriple(..) => ("UnsupportedTriple", EXIT_NUMERIC),
        AnyonError::UnsupportedFamily(..) => ("UnsupportedFamily", EXIT_NUMERIC),
        AnyonError::BadToken(_) => ("BadToken", EXIT_USAGE),
        AnyonError::BadAlpha(_) => ("BadAlpha", EXIT_USAGE),
    }
}

fn space_kind(e: &SpaceError) -> (&'static str, i32) {
    match e {
        SpaceError::EmptyBasis => ("EmptyBasis", EXIT_NUMERIC),
        SpaceError::BadTree(_) => ("BadTree", EXIT_USAGE),
        SpaceError::NotQubitSpace => ("NotQubitSpace", EXIT_USAGE),
        SpaceError::Anyon(a) => anyon_kind(a),
    }
}

fn braid_kind(e: &BraidError) -> (&'static str, i32) {
    match e {
        BraidError::Parse(_) => ("Parse", EXIT_USAGE),
        BraidError::InvalidGenerator(_) => ("InvalidGenerator", EXIT_USAGE),
        BraidError::LeakyPermutation(_) => ("LeakyPermutation", EXIT_NUMERIC),
        BraidError::NotBlockDiagonal(_) => ("NotBlockDiagonal", EXIT_NUMERIC),
        BraidError::ShapeMismatch(_) => ("ShapeMismatch", EXIT_NUMERIC),
        BraidError::NotFoundWithin(_) => ("NotFoundWithin", EXIT_NUMERIC),
        BraidError::Anyon(a) => anyon_kind(a),
        BraidError::Space(s) => space_kind(s),
    }
}

fn gate_kind(e: &GateError) -> (&'static str, i32) {
    match e {
        GateError::ShapeMismatch(_) => ("ShapeMismatch", EXIT_NUMERIC),
        GateError::NotDiagonal(_) => ("NotDiagonal", EXIT_NUMERIC),
        GateError::DepthExceeded(_) => ("DepthExceeded", EXIT_USAGE),
        GateError::PrecisionExhausted { .. } => ("PrecisionExhausted", EXIT_NUMERIC),
        GateError::NotBlockDiagonal(_) => ("NotBlockDiagonal", EXIT_NUMERIC),
        GateError::Braid(b) => braid_kind(b),
        GateError::Space(s) => space_kind(s),
        GateError::Anyon(a) => anyon_kind(a),
    }
}

macro_rules! from_lib_error {
    ($ty:ty, $classify:ident) => {
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                let (kind, code) = $classify(&e);
                CliError { kind, message: e.to_string(), code }
            }
        }
    };
}

from_lib_error!(AnyonError, anyon_kind);
from_lib_error!(SpaceError, space_kind);
from_lib_error!(BraidError, braid_kind);
from_lib_error!(GateError, gate_kind);

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError { kind: "Csv", message: e.to_string(), code: EXIT_NUMERIC }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_errors_keep_the_innermost_kind() {
        let e: CliError = GateError::Braid(BraidError::Anyon(AnyonError::IntegerAlpha(3.0))).into();
        assert_eq!((e.kind, e.code), ("IntegerAlpha", EXIT_NUMERIC));
        let e: CliError = BraidError::Parse("b9".into()).into();
        assert_eq!(e.code, EXIT_USAGE);
        let line = e.to_line();
        assert!(!line.contains('\n'));
        assert_eq!(serde_json::from_str::<serde_json::Value>(&line).unwrap()["error"], "Parse");
    }
}
