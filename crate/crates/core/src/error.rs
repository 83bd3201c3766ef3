use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid prime point: {0}")]
    InvalidPoint(String),
    #[error("spectrum of {0} is not enumerable")]
    NonEnumerable(String),
    #[error("factorization limit exceeded: {0}")]
    FactorizationLimit(String),
    #[error("no symbolic rule for {0}")]
    UnsupportedSymbolic(String),
    #[error("slot {slot} out of range for a product of {len} factors")]
    BadSlot { slot: usize, len: usize },
    #[error("supplement ring needs at least one variable, got {0}")]
    BadArity(usize),
    #[error("{0} variables exceeds the brute-force oracle bound")]
    TooManyVars(usize),
    #[error("spectrum has {0} points, above the exhaustive-check bound")]
    SpectrumTooLarge(usize),
    #[error("unsupported map: {0}")]
    UnsupportedMap(String),
    #[error("prime is not tame")]
    WildPrimeUnsupported,
    #[error("no lying-over prime found: {0}")]
    NotFound(String),
}
