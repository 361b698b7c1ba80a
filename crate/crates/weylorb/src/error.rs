use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse diagram label {0:?}")]
    ParseDiagram(String),

    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{op} is not supported for diagram {diagram}")]
    Unsupported { op: &'static str, diagram: String },

    #[error("Weyl group order {order} exceeds the limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not strictly dominant")]
    NotStrictlyDominant(String),

    #[error("|phi_rho(x)| = {value:e} is below the threshold {threshold:e}; perturb x")]
    NearSingular { value: f64, threshold: f64 },

    #[error("transform plan is not invertible: labels {i} and {j} are not separated (Gram entry {value:e})")]
    NonInvertiblePlan { i: usize, j: usize, value: f64 },

    #[error("signal length {got} does not match the expected length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("tuple {0} is not monotone as required")]
    NonMonotone(String),

    #[error("branch rule {rule} cannot be applied to {diagram}")]
    IncompatibleRule { rule: String, diagram: String },

    #[error("quadrature needs {needed} points but the budget is {budget}")]
    QuadratureBudget { needed: u64, budget: u64 },

    #[error("parameters outside the convergence region: {0}")]
    Divergent(String),

    #[error("point is too close to the boundary for a stencil of step {0}")]
    TooCloseToBoundary(f64),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
