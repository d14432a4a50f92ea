use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` occurs in both operands")]
    LabelClash(String),
    #[error("`{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("{what}: {value} exceeds the limit {limit}")]
    BoundExceeded {
        what: String,
        value: usize,
        limit: usize,
    },
    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),
    #[error("lattice is not distributive: {0}")]
    NotDistributive(String),
    #[error("no isomorphism found")]
    IsoNotFound,
    #[error("poset has no decomposition into disjoint maximal chains")]
    NotHyperPlanar,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("check `{check}` failed: {witness}")]
    TheoremViolated { check: String, witness: String },
    #[error("exponent vector is not in the semigroup")]
    NotInSemigroup,
    #[error("point set is not a sublattice of N^2: {0}")]
    NotASublattice(String),
    #[error("point set is not connected by unit steps: {0}")]
    NotConnected(String),
    #[error("result is empty")]
    EmptyResult,
    #[error("lattice is not simple after removing end chains")]
    NotSimpleAfterReduction,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn bound(what: impl Into<String>, value: usize, limit: usize) -> Self {
        Error::BoundExceeded {
            what: what.into(),
            value,
            limit,
        }
    }

    pub fn violated(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::TheoremViolated {
            check: check.into(),
            witness: witness.into(),
        }
    }
}
