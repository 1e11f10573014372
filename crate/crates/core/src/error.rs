use thiserror::Error;

/// Errors surfaced by constructors and solvers.
///
/// Axiom checks never error: they return a [`crate::CheckReport`]. Errors are
/// reserved for malformed input (dimension mismatches), unsatisfiable
/// requests (no inverse, no antipode) and violated constructor
/// preconditions.
#[derive(Debug, Error)]
pub enum HopfError {
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("{0} is not a prime")]
    NotAPrime(u64),
    #[error("element is not invertible{0}")]
    NotInvertible(String),
    #[error("antipode matrix is singular")]
    SingularAntipode,
    #[error("bialgebra has no two-sided antipode: {0}")]
    NotAHopfAlgebra(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("construction requires characteristic != 2")]
    CharacteristicTwo,
    #[error("underlying algebra is not commutative")]
    NotCommutative,
    #[error("Hopf algebra is not cocommutative")]
    NotCocommutative,
    #[error("hopf check failed: {0}")]
    HopfCheckFailed(String),
    #[error("brace check failed: {0}")]
    BraceCheckFailed(String),
    #[error("counits of the two coalgebra halves differ: {0}")]
    CounitMismatch(String),
    #[error("harrison 2-cocycle check failed: {0}")]
    HarrisonCheckFailed(String),
    #[error("long copairing check failed: {0}")]
    LongCheckFailed(String),
    #[error("cocycle check failed: {0}")]
    CocycleCheckFailed(String),
    #[error("weak R-matrix check failed: {0}")]
    RMatrixCheckFailed(String),
    #[error("matched pair check failed: {0}")]
    MatchedCheckFailed(String),
    #[error("matched pair roles differ, need A = H as Hopf data")]
    RolesDiffer,
    #[error("second coproduct does not factor through the coactions: {0}")]
    CoproductFactorizationFailed(String),
    #[error("phi coaction fails the double-coproduct compatibility: {0}")]
    PhiBraceConditionFailed(String),
    #[error("auxiliary coaction fails its compatibility on the first factor: {0}")]
    RhoPrimeConditionAFailed(String),
    #[error("auxiliary coaction fails its compatibility on the second factor: {0}")]
    RhoPrimeConditionHFailed(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("comodule bialgebra check failed: {0}")]
    ComoduleBialgebraCheckFailed(String),
    #[error("unknown zoo object: {0}")]
    UnknownZooObject(String),
}
