//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch between operands")]
    GridMismatch,

    #[error("signal is not {side}: relative energy {leak:.3e} on the opposite side exceeds {tol:.3e}")]
    WrongSupport { side: &'static str, leak: f64, tol: f64 },

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("evaluation point is a pole of the symbol")]
    EvalAtPole,

    #[error("evaluation point must lie in the closed right half-plane")]
    OutsideHalfPlane,

    #[error("time argument {0} is not a nonnegative multiple of the grid spacing")]
    NotGridMultiple(f64),

    #[error("resolvent point must have positive real part")]
    ResolventPoint,

    #[error("generator domain violation: image fails square-integrability/causality check ({0})")]
    GeneratorDomain(String),

    #[error("feedthrough limit did not converge; subtract a known constant from the symbol first")]
    FeedthroughUndefined,

    #[error("symbol is not inner within tolerance (boundary deviation {0:.3e})")]
    NotInner(f64),

    #[error("state is not in the model space within tolerance (residual {0:.3e})")]
    NotInModelSpace(f64),

    #[error("zero signal where a nonzero one is required")]
    ZeroSignal,

    #[error("horizon exceeded: {0}")]
    HorizonExceeded(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
