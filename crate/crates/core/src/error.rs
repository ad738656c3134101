//! Crate-wide error type.
//!
//! Some variants are ordinary failures (bad input, unknown variable); others
//! are mathematical conclusions in their own right. A divisibility violation,
//! for instance, is exactly the statement that a candidate relation cannot
//! hold. [`Error::is_obstruction`] separates the two so callers (the CLI in
//! particular) can map them to different exit codes.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mismatched variable lists: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },

    #[error(
        "series inversion of `{base}` in `{var}`: the {var}^0 slice must be a nonzero constant"
    )]
    NonInvertibleSeries { base: String, var: String },

    #[error("symmetric powers of classes with symbolic generators ({generators}) are not defined at class level; use the measure-level symmetric-square formula instead")]
    SymbolicSymmetricPower { generators: String },

    #[error("class is not a polynomial in L (contains {generators})")]
    NotPureLefschetz { generators: String },

    #[error("generator `{name}` is not declared in the table")]
    MissingGenerator { name: String },

    #[error("point count unavailable: generator `{name}` is not flagged effective")]
    PointCountUnavailable { name: String },

    #[error("invalid generator table: {reason}")]
    InvalidGeneratorTable { reason: String },

    #[error("non-integer coefficient {coefficient} at {monomial}")]
    NonIntegerCoefficient {
        monomial: String,
        coefficient: String,
    },

    #[error("{dividend} is not divisible by {divisor}: offending monomial {monomial}")]
    DivisibilityViolation {
        dividend: String,
        divisor: String,
        monomial: String,
    },

    #[error("malformed Poincare polynomial: {reason}")]
    MalformedPoincare { reason: String },

    #[error("domain error: {reason}")]
    Domain { reason: String },

    #[error("refusing Groebner computation in {variables} variables (limit {limit})")]
    ScaleGuard { variables: usize, limit: usize },

    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    /// True for errors that express a mathematical obstruction rather than a
    /// malformed request. The CLI maps these to exit code 2.
    pub fn is_obstruction(&self) -> bool {
        matches!(
            self,
            Error::SymbolicSymmetricPower { .. }
                | Error::DivisibilityViolation { .. }
                | Error::PointCountUnavailable { .. }
        )
    }
}
