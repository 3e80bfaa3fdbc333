use crate::Frame;

/// Errors raised by the algebra.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension {0} is outside 1..=16")]
    InvalidDimension(usize),
    #[error("expected {expected} arguments, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("forms belong to different frames (n={} and n={})", left.dim(), right.dim())]
    FrameMismatch { left: Frame, right: Frame },
    #[error("blade indices must be strictly ascending and within the frame")]
    InvalidBlade,
    #[error("grade {grade} is outside 0..={max}")]
    GradeOutOfRange { grade: usize, max: usize },
    #[error("form is not homogeneous")]
    NotHomogeneous,
    #[error("expected a point (grade 1, mass 1)")]
    NotAPoint,
    #[error("expected a vector (grade 1, mass 0)")]
    NotAVector,
    #[error("total weight is zero: the system has no barycenter")]
    NoBarycenter,
    #[error("empty system")]
    EmptySystem,
    #[error("grades must sum to {expected}, found {found}")]
    GradeMismatch { expected: usize, found: usize },
    #[error("the simplex basis is degenerate")]
    DegenerateBasis,
    #[error("grade {0} is not supported here")]
    UnsupportedGrade(usize),
    #[error("operation requires dimension {required}, frame has {found}")]
    UnsupportedDimension { required: usize, found: usize },
    #[error("form is not a pure k-vector")]
    NotPureVector,
    #[error("surface is not closed: the boundary bivector is nonzero")]
    NotClosed,
    #[error("axis points coincide")]
    DegenerateAxis,
}
