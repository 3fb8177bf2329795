use thiserror::Error;

/// Errors raised by configuration handling, the bijection and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad character {ch:?} at column {position}")]
    BadCharacter { ch: char, position: usize },
    #[error("{slots} colored slots in a configuration of {columns} columns")]
    InvalidSlotCount { slots: usize, columns: usize },
    #[error("malformed subset pair: {0}")]
    InvalidSubset(String),
    #[error("configuration is not ordered")]
    NotOrdered,
    #[error("configuration has towers")]
    NotTowerFree,
    #[error("column {position} is odd; compression needs towers and empty columns only")]
    HasOddColumns { position: usize },
    #[error("columns {first} and {second} are towers of different colors")]
    MixedColumn { first: usize, second: usize },
    #[error("malformed section: {0}")]
    MalformedSection(String),
    #[error("configuration is not in the image of the bijection: {0}")]
    NotInImage(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("series constant term must be 1")]
    NonUnitConstantTerm,
    #[error("cannot differentiate {requested} times a series of order {order}")]
    OrderExhausted { requested: usize, order: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
