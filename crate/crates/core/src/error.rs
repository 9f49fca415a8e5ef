use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    NoIdentity(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("row or column {0} is not a permutation")]
    NotAPermutationRow(usize),
    #[error("size cap exceeded: {what} = {size} > {cap}")]
    SizeCapExceeded { what: String, size: String, cap: String },
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("relations do not define a finite group")]
    InfiniteGroup,
    #[error("invalid cochain at {tuple:?}: {reason}")]
    InvalidCochain { tuple: Vec<usize>, reason: String },
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("invalid partial representation: {0}")]
    InvalidRep(String),
    #[error("not a sub-bimodule: {0}")]
    NotASubbimodule(String),
    #[error("no decomposition of 1_x for x = {0}")]
    NoDecomposition(usize),
    #[error("not unital: {0}")]
    NotUnital(String),
    #[error("associativity fails on homogeneous triple {0:?}")]
    AssociativityFailure(Vec<usize>),
    #[error("map is not bilinear: {0}")]
    NotBilinear(String),
    #[error("map is not bijective: {0}")]
    NotBijective(String),
    #[error("not an isomorphism family: {0}")]
    NotAnIsoFamily(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("invalid partial action: {0}")]
    InvalidAction(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn cap(what: impl Into<String>, size: impl ToString, cap: impl ToString) -> Self {
        Error::SizeCapExceeded { what: what.into(), size: size.to_string(), cap: cap.to_string() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
