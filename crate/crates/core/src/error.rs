use thiserror::Error;

/// Errors produced by graph construction, solvers and searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the {1}-vertex limit")]
    SizeOverflow(usize, usize),
    #[error("vertex index {0} out of range for order {1}")]
    InvalidVertex(usize, usize),
    #[error("parameter {name} = {value} violates: {rule}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        rule: &'static str,
    },
    #[error("order {0} exceeds cap {1} for this operation")]
    CapExceeded(usize, usize),
    #[error("malformed graph6 input: {0}")]
    BadGraph6(String),
    #[error("vertex sets do not partition the vertex set")]
    NotAPartition,
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("the searched family is empty")]
    EmptyFamily,
    #[error("graph has no edges")]
    NoEdges,
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("bad manifest: {0}")]
    BadManifest(String),
}

pub type Result<T> = std::result::Result<T, Error>;
