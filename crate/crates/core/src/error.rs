use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside the supported range 1..=64")]
    InvalidOrder(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{u}-{v} is already an edge")]
    AlreadyEdge { u: usize, v: usize },
    #[error("{u}-{v} is an edge, not a non-edge")]
    NotANonEdge { u: usize, v: usize },
    #[error("path endpoints must be distinct")]
    EqualEndpoints,
    #[error("order {n} too small here (need n >= {min})")]
    OrderTooSmall { n: usize, min: usize },
    #[error("half-size {p} too small (need p >= {min})")]
    HalfSizeTooSmall { p: usize, min: usize },
    #[error("cycle templates exist only for the even/odd ladder families")]
    NoTemplate,
    #[error("edge budget {m_budget} does not license this filter (needs m < {threshold})")]
    BudgetTooHigh { m_budget: usize, threshold: usize },
    #[error("enumeration supports at most {max} vertices, got {n}; shard larger orders externally")]
    EnumTooLarge { n: usize, max: usize },
    #[error("cannot place {m} edges on {slots} vertex pairs")]
    TooManyEdges { m: usize, slots: usize },
    #[error("rank {rank} out of range (total {total})")]
    RankOutOfRange { rank: u64, total: u64 },
    #[error("certification at n = {0} is an overnight-scale run; pass the long-run option to allow it")]
    LongRunRequired(usize),
    #[error("constructed graph for n = {0} failed its own expandability check")]
    UpperWitnessFailed(usize),
    #[error("pruning filter rejected an expandable graph (n = {n}, m = {m}, rank = {rank})")]
    FilterOracleDisagreement { n: usize, m: usize, rank: u64 },
    #[error("invalid JSON: {0}")]
    BadJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
