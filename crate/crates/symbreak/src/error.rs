use thiserror::Error;

/// Errors produced by graph construction, group enumeration, and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge ({0},{0}) is not allowed")]
    InvalidEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("disjoint union needs at least one part")]
    EmptyUnion,
    #[error("graph6 parse error: {0}")]
    ParseError(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("permutation degrees differ ({0} vs {1})")]
    DegreeError(usize, usize),
    #[error("group closure exceeded the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("coloring search budget of {0} candidates exceeded")]
    SearchBudgetExceeded(u64),
    #[error("formula needs k >= theta: k = {k}, theta = {theta}")]
    FormulaInapplicable { k: usize, theta: usize },
    #[error("graph has no non-identity automorphism")]
    NoSymmetry,
    #[error("connection set is not closed under inverses")]
    NotSymmetric,
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameters outside the Sym(n+1) regime (needs n = 2k+1 and i = (k+1)/2)")]
    NotApplicable,
    #[error("component {0} is not connected")]
    InvalidComponent(usize),
    #[error("exhaustive scan is limited to 7 vertices; got {0}")]
    TooLarge(usize),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
