use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} is a loop")]
    LoopArgument(usize),
    #[error("contraction set is dependent")]
    DependentContraction,
    #[error("ground set of size {n} exceeds the brute-force limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("constraint subsets are not pairwise disjoint")]
    OverlappingConstraints,
    #[error("level {a} outside valid range [{lo}, {hi}]")]
    BadRange { a: usize, lo: usize, hi: usize },
    #[error("blocks do not form a set partition of the ground set")]
    NotAPartition,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("quotient {0} is below 1")]
    BadQuotient(u64),
    #[error("no candidate split exists (B = 1)")]
    NoCandidate,
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("edge {0} is a bridge or a loop; tree ratio undefined")]
    DegenerateEdge(usize),
    #[error("elements {0} and {1} are parallel")]
    ParallelPair(usize, usize),
    #[error("required hypothesis not met: {0}")]
    PreconditionUnmet(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
