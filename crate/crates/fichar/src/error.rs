use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Classification used by front ends to pick an exit code: domain errors
/// are bad inputs or unsupported queries, invariant violations mean the
/// library caught itself producing something inconsistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Invariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot pad {base} to total {total}: need total ≥ |λ| + λ₁ = {min}")]
    PadTooSmall {
        base: String,
        total: usize,
        min: usize,
    },

    #[error("partition size {lambda} does not match cycle-type degree {degree}")]
    SizeMismatch { lambda: usize, degree: usize },

    #[error("class functions have different ranks: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not the character of a module: {0}")]
    NotACharacter(String),

    #[error("numeric evaluation requested but expression has symbolic coefficient {0}")]
    SymbolicCoefficient(String),

    #[error("filtration has no quotients")]
    EmptyFiltration,

    #[error("spectral grid not converged: {0}")]
    NotConverged(String),

    #[error("interpolation system is singular for λ = {0}")]
    InterpolationSingular(String),

    #[error("rank n = {n} too small: the extension description needs n ≥ 2")]
    RankTooSmall { n: usize },

    #[error("no stored stable decomposition for (n, i) = ({n}, {i})")]
    NoStoredDecomposition { n: usize, i: usize },

    #[error("s = {s} is below the stable range (valid from s ≥ {valid_from})")]
    BelowStableRange { s: usize, valid_from: usize },

    #[error("partition size {size} exceeds the configured cutoff {max}")]
    MaxSizeExceeded { size: usize, max: usize },

    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InterpolationSingular(_)
            | Error::CrossCheckFailed(_)
            | Error::NotConverged(_) => ErrorKind::Invariant,
            _ => ErrorKind::Domain,
        }
    }
}
