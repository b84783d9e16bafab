use thiserror::Error;

use crate::hypergraph::Violation;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad parameter or configuration (k too large, mu <= 0, missing seed, ...).
    Config,
    /// Malformed input data.
    Data,
    /// A numerical routine could not produce a result.
    Numerical,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("hyperedge {edge}: {violation}")]
    InvalidHypergraph { edge: usize, violation: Violation },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("hyperedge {edge} has no seed vertex")]
    MissingSeed { edge: usize },

    #[error("sample {vertex} has zero norm and cannot be normalized")]
    ZeroNormSample { vertex: usize },

    #[error("simplex of degree {k} is degenerate in {d} dimensions")]
    DegenerateVolume { k: usize, d: usize },

    #[error("hyperface {face} has a vanishing cofactor (parallel or degenerate faces)")]
    ParallelFace { face: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("requested {requested} nonzero eigenpairs but only {available} exist ({null_dim} zero eigenvalues, i.e. that many components)")]
    Rank {
        requested: usize,
        available: usize,
        null_dim: usize,
    },

    #[error("class {class} has no labeled vertex")]
    MissingClassSeed { class: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidParameter(_) | Error::MissingSeed { .. } | Error::MissingClassSeed { .. } => {
                ErrorKind::Config
            }
            Error::InvalidHypergraph { .. }
            | Error::InvalidData(_)
            | Error::ZeroNormSample { .. }
            | Error::LengthMismatch { .. }
            | Error::Parse { .. } => ErrorKind::Data,
            Error::DegenerateVolume { .. }
            | Error::ParallelFace { .. }
            | Error::NotSymmetric(_)
            | Error::NotPositiveDefinite
            | Error::Rank { .. } => ErrorKind::Numerical,
        }
    }
}
