use crate::signature::Signature;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("grade {grade} out of range for an algebra with {dim} generators")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("generator index {index} out of range for an algebra with {dim} generators")]
    UnknownGenerator { index: usize, dim: usize },

    #[error("metric is degenerate: the pseudoscalar has no inverse")]
    DegenerateMetric,

    #[error("frame vectors are linearly dependent")]
    SingularFrame,

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("duality mismatch: cannot combine an element of {} with an element of {}", space(*.left), space(*.right))]
    DualityMismatch { left: bool, right: bool },

    #[error("tag mismatch: expected an element of {}, found one of {}", space(*.expected), space(*.found))]
    TagMismatch { expected: bool, found: bool },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix has shape {rows}x{cols}, expected {dim}x{dim}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        dim: usize,
    },
}

fn space(is_dual: bool) -> &'static str {
    if is_dual {
        "G*"
    } else {
        "G"
    }
}
