use thiserror::Error;

use crate::cartan::RootLatticeVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports.
///
/// Variants carry enough context to print a one-line diagnostic; [`Error::code`]
/// gives a stable machine-readable tag for each kind.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix at ({row}, {col}): {reason}")]
    NotGcm {
        row: usize,
        col: usize,
        reason: &'static str,
    },
    #[error("matrix is not symmetrizable (cycle through ({row}, {col}) is inconsistent)")]
    NotSymmetrizable { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("root {0} has zero norm")]
    ZeroNorm(RootLatticeVector),
    #[error("offset {0:?} is not an integral root-lattice vector")]
    NonIntegralOffset(Vec<String>),
    #[error("vector {0} is not of the form rho - w rho")]
    NotAWeylElement(RootLatticeVector),
    #[error("height {height} exceeds the table bound {bound}")]
    OutOfBounds { height: i64, bound: u32 },
    #[error("computation needs roots of height {needed}, beyond the window {bound}")]
    HeightBoundExceeded { needed: i64, bound: u32 },
    #[error("element is not in the integral Weyl group (stuck at word [{}])", fmt_word(.residue))]
    NotInIntegralWeylGroup { residue: Vec<usize> },
    #[error("weight is not integrally dominant: coroot pairing with {root} is negative")]
    NotIntegrallyDominant { root: RootLatticeVector },
    #[error("elements are not comparable in the Bruhat order")]
    NotComparable,
    #[error("window is not an upper ideal above the base element: {0}")]
    WindowNotUpperIdeal(&'static str),
    #[error("canonical basis solve failed at [{}]: {reason}", fmt_word(.at))]
    SolveFailure {
        at: Vec<usize>,
        reason: &'static str,
    },
    #[error("coefficient mismatch between the monodromic and classical routes: {0}")]
    CoefficientMismatch(String),
    #[error("hypotheses of the character formula are not verified: {0}")]
    HypothesesNotVerified(String),
    #[error("negative multiplicity {value} at offset {offset}")]
    NegativeMultiplicity {
        offset: RootLatticeVector,
        value: i64,
    },
    #[error("datum is not an indecomposable affine Cartan matrix")]
    NotAffine,
    #[error("the null root pairs to zero with lambda + rho")]
    NullPairingZero,
    #[error("element is not the longest in its isotropy coset; longest is [{}]", fmt_word(.hint))]
    NotLongestInCoset { hint: Vec<usize> },
    #[error("enumeration exceeded {0} elements")]
    EnumerationLimit(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Stable short tag, used as the `ERROR <code>:` prefix by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotGcm { .. } => "not-gcm",
            Error::NotSymmetrizable { .. } => "not-symmetrizable",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::ZeroNorm(_) => "zero-norm",
            Error::NonIntegralOffset(_) => "non-integral-offset",
            Error::NotAWeylElement(_) => "not-a-weyl-element",
            Error::OutOfBounds { .. } => "out-of-bounds",
            Error::HeightBoundExceeded { .. } => "height-bound-exceeded",
            Error::NotInIntegralWeylGroup { .. } => "not-in-integral-weyl-group",
            Error::NotIntegrallyDominant { .. } => "not-integrally-dominant",
            Error::NotComparable => "not-comparable",
            Error::WindowNotUpperIdeal(_) => "window-not-upper-ideal",
            Error::SolveFailure { .. } => "solve-failure",
            Error::CoefficientMismatch(_) => "coefficient-mismatch",
            Error::HypothesesNotVerified(_) => "hypotheses-not-verified",
            Error::NegativeMultiplicity { .. } => "negative-multiplicity",
            Error::NotAffine => "not-affine",
            Error::NullPairingZero => "null-pairing-zero",
            Error::NotLongestInCoset { .. } => "not-longest-in-coset",
            Error::EnumerationLimit(_) => "enumeration-limit",
            Error::InternalInconsistency(_) => "internal-inconsistency",
        }
    }
}

fn fmt_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
