use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} is not an integer: {value}")]
    NotIntegral { what: String, value: String },

    #[error("pole at parameter value {0}")]
    Pole(String),

    #[error("parameter {param} = {value} is not admissible for {formula}")]
    Inadmissible {
        formula: String,
        param: String,
        value: String,
    },

    #[error("inputs are linearly dependent")]
    Dependent,

    #[error("input must be imaginary (trace zero)")]
    NotImaginary,

    #[error("matrix is singular")]
    Singular,

    #[error("algebra tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),

    #[error("element does not lie in the {0} subalgebra")]
    NotInSubalgebra(String),

    #[error("invalid root system {0}")]
    InvalidRootSystem(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight has {got} coordinates, rank is {rank}")]
    WeightRank { got: usize, rank: usize },

    #[error("decomposition bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("non-decomposable residue: {0}")]
    Residue(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("point is at infinity (s = 0)")]
    AtInfinity,

    #[error("point lies on the tangential quartic: {0}")]
    TangentialQuartic(String),

    #[error("zero input")]
    ZeroInput,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
