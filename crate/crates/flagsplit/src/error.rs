use crate::cartan::CartanType;

/// Errors produced by group generation, interval algebra, and the splitting
/// laboratory.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown Cartan family `{0}` (expected one of A B C D E F G)")]
    UnknownFamily(String),

    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse `{0}` as a Cartan type (expected e.g. \"A3\", \"B2\", \"G2\")")]
    ParseCartan(String),

    #[error("group {cartan} has order {order}, above the cap of {cap} elements")]
    OrderCapExceeded {
        cartan: CartanType,
        order: u128,
        cap: usize,
    },

    #[error("element id {id} out of range for a group of order {order}")]
    ForeignElement { id: usize, order: usize },

    #[error("word letter {letter} out of range for rank {rank}")]
    BadWordLetter { letter: usize, rank: usize },

    #[error("empty interval: `{v}` is not Bruhat-below `{w}`")]
    EmptyInterval { v: String, w: String },

    #[error("interval {0} is not a member of the system")]
    NotInSystem(String),

    #[error("not a splitting: trace is not 1")]
    NotASplitting,

    #[error("matrix is singular over F_{0}")]
    SingularMatrix(u64),

    #[error("unsupported chart parameters: {0}")]
    UnsupportedChart(String),

    #[error("big-cell construction failed: {0}")]
    Construction(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
