use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix must be square and non-empty ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operator is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error("operator is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },
    #[error("operator is not positive definite (smallest eigenvalue {smallest:.3e})")]
    NotPositive { smallest: f64 },
    #[error("antilinear operator is not an involution (residual {residual:.3e})")]
    NotInvolution { residual: f64 },
    #[error("vectors are not real-linearly independent")]
    RealDependent,
    #[error("a standard subspace of C^{ambient} needs exactly {ambient} basis vectors, got {count}")]
    WrongBasisCount { ambient: usize, count: usize },
    #[error("H ∩ iH ≠ {{0}}: the subspace is not separating")]
    NotSeparating,
    #[error("fixed-point space of the involution has real dimension {found}, expected {expected}")]
    KernelDimension { expected: usize, found: usize },
    #[error("K is not contained in H (residual {residual:.3e})")]
    NotContained { residual: f64 },
    #[error("matrix is singular beyond tolerance")]
    Singular,
    #[error("determinant is not 1 (|det - 1| = {residual:.3e})")]
    DeterminantNotOne { residual: f64 },
    #[error("element is not in SU(2) (residual {residual:.3e})")]
    NotSpecialUnitary { residual: f64 },
    #[error("axis must be 1, 2 or 3 (got {0})")]
    InvalidAxis(u8),
    #[error("excluded null orbit: massless momentum along the x3 axis has no orbit coordinates")]
    ExcludedNullOrbit,
    #[error("momentum is not on the positive mass shell: {0}")]
    OffShell(String),
    #[error("boost parameter {parameter} is not a multiple of the rapidity step {step}")]
    NotCommensurate { parameter: f64, step: f64 },
    #[error("sample closure exceeded the budget of {budget} points")]
    ClosureBudget { budget: usize },
    #[error("translation phases do not separate samples {0} and {1}")]
    PhasesNotSeparating(usize, usize),
    #[error("mass labels must be distinct (duplicate {0})")]
    DuplicateMass(f64),
    #[error("invalid spin label 2s = {0}")]
    InvalidSpin(i64),
    #[error("cutoff {cutoff} is below n/2 = {lower}")]
    InvalidCutoff { cutoff: f64, lower: f64 },
    #[error("boost matrix needs m > 0")]
    Massless,
    #[error("J Δ J ≠ Δ^-1 (residual {residual:.3e})")]
    ModularRelation { residual: f64 },
    #[error("covariance inconsistency: {0}")]
    Covariance(String),
    #[error("V does not commute with the conjugation of K (residual {residual:.3e})")]
    NotReal { residual: f64 },
    #[error("unknown wedge: {0}")]
    UnknownWedge(String),
    #[error("unknown element: {0}")]
    UnknownElement(String),
    #[error("spectrum contains a non-positive eigenvalue {0}")]
    NonPositiveEigenvalue(f64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("malformed JSON in {source_name}: {reason}")]
    Parse { source_name: String, reason: String },
}
