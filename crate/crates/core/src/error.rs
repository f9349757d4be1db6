use thiserror::Error;

use crate::linalg::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    /// The facet list was empty, or contained only the empty set.
    #[error("no facets")]
    NoFacets,

    #[error("not a face: {0}")]
    NotAFace(String),

    /// The contrastar of the empty face is the void complex, which has no
    /// representation.
    #[error("contrastar of the empty face is the void complex")]
    EmptyContrastar,

    #[error("face limit exceeded: the complex has more than {limit} faces")]
    FaceLimit { limit: usize },

    #[error("subset limit exceeded: {count} vertex subsets to check, limit is {limit}")]
    SubsetLimit { count: u128, limit: u128 },

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown complex name: {0}")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
