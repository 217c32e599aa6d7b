use thiserror::Error;

/// Errors surfaced by the computational kernel.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {p} too small: need p > number of variables + 2 = {min}")]
    ModulusTooSmall { p: u64, min: u64 },
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("mismatched ring: {0}")]
    RingMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("generator is not homogeneous (offending term of degree {found}, expected {expected})")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("ideal generator is zero")]
    ZeroGenerator,
    #[error("basis is not marked as a Groebner basis")]
    NotGroebnerBasis,
    #[error("unit ideal: quotient ring is zero")]
    UnitIdeal,
    #[error("expected an Artinian quotient but Hilbert function does not vanish")]
    NotArtinian,
    #[error("quotient ring has Krull dimension 0; no Hilbert polynomial")]
    DimensionZero,
    #[error("all parametrizing forms are proportional: image is degenerate")]
    DegenerateImage,
    #[error("saturation did not stabilize within {0} quotient rounds")]
    SaturationDiverged(usize),
    #[error("generic initial ideal unstable after {trials} trials: candidates {candidates:?}")]
    GinUnstable { trials: usize, candidates: Vec<String> },
    #[error("genericity failure in {what}: trials disagree: {values:?}")]
    GenericityFailure { what: String, values: Vec<String> },
    #[error("resolution map is not minimal: unit entry at map {map}, row {row}, column {col}")]
    NotMinimal { map: usize, row: usize, col: usize },
    #[error("monomial ideal is not stable")]
    NotStable,
    #[error("{0}")]
    Precondition(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
