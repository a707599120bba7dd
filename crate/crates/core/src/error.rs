use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("word length {0} is outside the supported range 1..={max}", max = crate::polyr::MAX_LEN)]
    UnsupportedLength(usize),
    #[error("polynomial of degree {degree} does not fit below x^{bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("{what}: {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("unmapped codon {0}")]
    UnmappedCodon(String),
    #[error("invalid nucleotide {0:?}")]
    InvalidNucleotide(char),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("length {0} is odd; the structure results require even length")]
    OddLength(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
