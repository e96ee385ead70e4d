use num::BigUint;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The operation is only defined for strictly positive input.
    #[error("input must be strictly positive")]
    NonPositiveInput,

    /// Factorization gave up: after trial division and the rho budget a
    /// composite cofactor is still standing.
    #[error("factorization limit exceeded; unfactored cofactor {cofactor}")]
    FactorizationLimitExceeded { cofactor: BigUint },

    /// `x = tau` is the pole of `y = (tau x + 1)/(x - tau)`.
    #[error("x = tau is a pole of the curve parametrization")]
    PoleInput,

    /// Integer-point enumeration needs `1/tau` to be a positive integer.
    #[error("1/tau is not a positive integer")]
    NonIntegralInverseTau,

    /// The requested parameters do not produce a genuine triangle.
    #[error("parameters yield a degenerate triangle")]
    DegenerateTriangle,

    /// A parameter is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    /// The coordinates do not satisfy the curve equation they claim to.
    #[error("point does not lie on the curve")]
    NotOnCurve,
}

pub type Result<T> = std::result::Result<T, Error>;
