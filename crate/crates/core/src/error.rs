use thiserror::Error;

/// Errors raised by the algebra kernel.
///
/// Numeric diagnostics are carried as `f64` regardless of the scalar field.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {dim} outside supported range 1..={cap}")]
    DimensionOutOfRange { dim: usize, cap: usize },

    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("blade mask {mask} out of range for dimension {dim}")]
    MaskOutOfRange { mask: u32, dim: usize },

    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("input is not a vector (grade-1 multivector)")]
    NotAVector,

    #[error("non-finite value in input")]
    NonFinite,

    #[error("singular extensor: |det| = {det:e} at or below threshold {threshold:e}")]
    SingularExtensor { det: f64, threshold: f64 },

    #[error("extensor is not symmetric: ‖s − s†‖∞ = {residual:e}")]
    NotSymmetric { residual: f64 },

    #[error("Jacobi eigensolver did not converge within {rotations} rotations")]
    NoConvergence { rotations: usize },

    #[error("degenerate metric: eigenvalue {eigenvalue:e} at or below threshold {threshold:e}")]
    DegenerateMetric { eigenvalue: f64, threshold: f64 },

    #[error("signature ({p},{q}) does not match dimension {dim}")]
    SignatureMismatch { dim: usize, p: usize, q: usize },

    #[error("extensor is not η-orthogonal: ‖Λ†∘η∘Λ − η‖∞ = {residual:e}")]
    NotEtaOrthogonal { residual: f64 },

    #[error("extensor is not b-orthogonal: ‖l†∘l − i‖∞ = {residual:e}")]
    NotOrthogonal { residual: f64 },

    #[error("scale factor rho[{index}] is zero")]
    ZeroRho { index: usize },

    #[error("invalid basis pair: reciprocity residual {residual:e}")]
    InvalidBasis { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
