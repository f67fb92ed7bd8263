use thiserror::Error;

/// Errors raised by the kernel.
///
/// The variant names double as the stable error identifiers printed by the
/// command-line front end, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("indices must be strictly increasing")]
    NotIncreasing,
    #[error("partitions cover different ground sets ({left} vs {right} elements)")]
    PartitionMismatch { left: usize, right: usize },
    #[error("{what} exceeds the configured bound {bound}")]
    SizeLimit { what: String, bound: usize },
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series must have constant term 1")]
    NotUnitConstantTerm,
    #[error("matrix dimensions do not match ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("coproduct is not an algebra morphism on {0}")]
    NotAMorphism(String),
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("invalid commutation graph: {0}")]
    InvalidGraph(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("not a set partition: {0}")]
    InvalidPartition(String),
}

impl Error {
    /// Stable identifier of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotIncreasing => "NotIncreasing",
            Error::PartitionMismatch { .. } => "PartitionMismatch",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::NoAntipode(_) => "NoAntipode",
            Error::OrderMismatch(..) => "OrderMismatch",
            Error::NonzeroConstantTerm => "NonzeroConstantTerm",
            Error::NotUnitConstantTerm => "NotUnitConstantTerm",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::NotAMorphism(_) => "NotAMorphism",
            Error::NotARepresentation(_) => "NotARepresentation",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::UnknownLetter(_) => "UnknownLetter",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::MalformedMatrix(_) => "MalformedMatrix",
            Error::InvalidPartition(_) => "InvalidPartition",
        }
    }

    /// Whether the error is a mathematical obstruction rather than bad input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::NoAntipode(_)
                | Error::SizeLimit { .. }
                | Error::PartitionMismatch { .. }
                | Error::NotAMorphism(_)
                | Error::NonzeroConstantTerm
                | Error::NotUnitConstantTerm
                | Error::OrderMismatch(..)
                | Error::DimensionMismatch(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
