use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("vertex index {index} is not in a table of {size}")]
    InvalidVertex { index: usize, size: usize },
    #[error("vertex `{0}` is not a vertex of the complex")]
    NotInComplex(String),
    #[error("skeleton dimension {s} outside -1..={dim}")]
    SkeletonOutOfRange { s: isize, dim: isize },
    #[error("the Alexander dual of the full simplex is the void complex")]
    VoidDual,
    #[error("n = {n} outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("multiplicity spec does not cover vertex `{0}`")]
    MissingMultiplicity(String),
    #[error("multiplicity for `{0}` must be at least 1")]
    ZeroMultiplicity(String),
    #[error("part {0} has fewer than two vertices")]
    PartTooSmall(usize),
    #[error("expected {expected} parts, got {got}")]
    PartCount { expected: usize, got: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("invalid subset label `{0}`")]
    BadSubsetLabel(String),
}
