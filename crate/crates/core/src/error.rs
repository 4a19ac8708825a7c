use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Two elements share a weight; the induced order on the ground set is not total.
    #[error("weight vector has tied coordinates at elements {0} and {1}")]
    TiedWeights(usize, usize),

    #[error("weight vector must be strictly positive, element {0} is not")]
    NonPositiveWeight(usize),

    #[error("element {0} of the inversion set is a loop of the matroid")]
    LoopInInversionSet(usize),

    #[error("set is not a face of the complex")]
    NotAFace,

    /// No kernel vector of the matrix has support exactly the given circuit.
    #[error("no linear form with support exactly {0:?}")]
    InconsistentCircuit(Vec<usize>),

    #[error("resource cutoff exceeded: {0}")]
    ResourceCutoff(String),

    #[error("newton iteration did not converge after {iterations} steps (gradient norm {gradient_norm:e})")]
    NonConvergence { iterations: usize, gradient_norm: f64 },

    #[error("offset vector is not generic: {0}")]
    NotGeneric(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Process exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Malformed(_) => 2,
            Error::TiedWeights(..)
            | Error::NonPositiveWeight(_)
            | Error::LoopInInversionSet(_)
            | Error::NotGeneric(_) => 3,
            Error::NotAFace
            | Error::InconsistentCircuit(_)
            | Error::NonConvergence { .. }
            | Error::Inconsistent(_) => 4,
            Error::ResourceCutoff(_) => 5,
        }
    }
}
