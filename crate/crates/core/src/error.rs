use crate::rootdata::Weight;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown or unsupported Cartan type `{0}`")]
    UnknownType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} has {got} coordinates, expected {expected}")]
    RankMismatch {
        weight: Weight,
        got: usize,
        expected: usize,
    },
    #[error("{what} would have {size} elements, above the cap of {cap}")]
    CapExceeded {
        what: String,
        size: u128,
        cap: usize,
    },
    #[error("colour index {index} out of range for rank {rank}")]
    BadColour { index: usize, rank: usize },
    #[error("element index {index} out of range (size {size})")]
    BadElement { index: usize, size: usize },
    #[error("{0} - {1} is not dominant")]
    NotDominated(Weight, Weight),
    #[error("colour tuple is empty, contains zero, or is linearly dependent")]
    BadColours,
    #[error("highest weights differ: {0} vs {1}")]
    HighestWeightMismatch(Weight, Weight),
    #[error("paths are not composable: range {range} differs from source {source_vertex}")]
    NotComposable { range: usize, source_vertex: usize },
    #[error("degree {0:?} has the wrong number of entries")]
    BadDegree(Vec<u32>),
    #[error("tensor lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("shift position out of range: ({0}, {1}) in a string of length {2}")]
    BadPosition(usize, usize, usize),
    #[error("adjacent transposition {index} out of range for {factors} factors")]
    BadTransposition { index: usize, factors: usize },
    #[error("{0:?} is not a reduced word for the longest element")]
    BadReducedWord(Vec<usize>),
    #[error("inconsistent crystal data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
