use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("invalid bicoloring: {0}")]
    InvalidBicoloring(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("index interval needs its point set to be resolved to coordinates")]
    UnresolvedIndexRange,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("bicolorings {0:?} do not meet the size-2k color threshold")]
    NonQualifyingBicoloring(Vec<usize>),

    #[error("bicolorings {indices:?} have fewer than {m} points of some color")]
    NotMRestricted { m: usize, indices: Vec<usize> },

    #[error("no axis has pairwise distinct coordinates")]
    NoSeparatingAxis,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("no candidate range balances bicolorings {0:?}")]
    InfeasibleRow(Vec<usize>),

    #[error("no cover of size at most {0} exists")]
    BudgetExceeded(usize),

    #[error("set system does not cover elements {0:?}")]
    UncoveredElements(Vec<usize>),

    #[error("range {0} balances a bicoloring but isolates no set pair")]
    UnmappableRange(usize),

    #[error("bicoloring {0} has no balanced range among the constructed ranges")]
    MissingCertificate(usize),

    #[error("colors are monochromatic")]
    MonochromaticInput,

    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
