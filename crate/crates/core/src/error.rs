use alloc::string::String;
use thiserror::Error;

/// Errors from the permutation and pattern grammars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty token at offset {0}")]
    EmptyToken(usize),
    #[error("invalid character {ch:?} at offset {offset}")]
    InvalidChar { ch: char, offset: usize },
    #[error("invalid integer token {0:?}")]
    InvalidToken(String),
    #[error("token {0:?} mixes the compact and comma grammars")]
    MixedGrammar(String),
    #[error("values are not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("pattern length {0} exceeds 9")]
    PatternTooLong(usize),
    #[error("empty pattern")]
    EmptyPattern,
    #[error("consecutive dashes at offset {0}")]
    ConsecutiveDashes(usize),
    #[error("pattern starts or ends with a dash")]
    DanglingDash,
    #[error("glue flags have length {got}, expected {expected}")]
    GlueLength { expected: usize, got: usize },
    #[error("unknown pattern set {0:?}")]
    UnknownSet(String),
    #[error("pattern set is empty")]
    EmptySet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PositionError {
    #[error("expected {expected} positions, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("position {position} out of range for length {len}")]
    OutOfRange { position: usize, len: usize },
    #[error("positions are not strictly increasing")]
    NotIncreasing,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {n} is above the enumeration cutoff {cutoff}")]
    CutoffExceeded { n: usize, cutoff: usize },
    #[error("n = {0} exceeds the packed level limit of 16")]
    TooLong(usize),
    #[error("member has length {got}, level has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("first value {first} out of range 1..={n}")]
    BadPrefix { first: u32, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("input permutation is empty")]
    Empty,
    #[error("input has length {got}, need at least {min}")]
    TooShort { min: usize, got: usize },
    #[error("last value is not 2")]
    LastNotTwo,
    #[error(transparent)]
    Level(#[from] EnumerateError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Position(#[from] PositionError),
    #[error("positions {0:?} are not an occurrence of a pattern in B")]
    NotBOccurrence([usize; 4]),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence table is empty")]
    Empty,
    #[error("index ranges {computed:?} and {reference:?} do not overlap")]
    DisjointRanges {
        computed: (i64, i64),
        reference: (i64, i64),
    },
}
