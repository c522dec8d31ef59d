use crate::partition::Partition;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{op} is undefined for a = 0")]
    ZeroRowWidth { op: &'static str },

    #[error("operator {op} does not take parameter `{param}`")]
    UnexpectedParameter {
        op: &'static str,
        param: &'static str,
    },

    #[error("operator {op} requires parameter `{param}`")]
    MissingParameter {
        op: &'static str,
        param: &'static str,
    },

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown basis `{0}`")]
    UnknownBasis(String),

    #[error("no image assigned to basis element indexed by {0}")]
    MissingAssignment(Partition),

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
