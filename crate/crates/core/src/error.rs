use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("ordering has length {got}, expected {expected}")]
    OrderingMismatch { expected: usize, got: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("digraph contains a directed cycle")]
    Cyclic,
    #[error("arc ({0}, {1}) is not in the host digraph")]
    ArcNotInHost(usize, usize),
    #[error("{what}: size {actual} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("clause {0} contains a literal and its negation")]
    TautologicalClause(usize),
    #[error("valuation does not satisfy the formula")]
    Unsatisfied,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("variable {0} is forced both true and false")]
    ConflictingAssignment(usize),
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::GuardExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
