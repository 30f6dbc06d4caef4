use thiserror::Error;

pub type Result<T> = std::result::Result<T, WalkError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("coin angle {0} is outside the open interval (0, 2π)")]
    GammaOutOfRange(f64),

    #[error("coin angle {0} is a forbidden value (π/2, π or 3π/2, where c·s vanishes)")]
    ForbiddenGamma(f64),

    #[error("coin state is not normalized: squared norm {0}")]
    NotNormalized(f64),

    #[error("unsupported coin dimension {0}; expected 2 or 4")]
    UnsupportedCoinDim(usize),

    #[error("coin dimension mismatch: expected {expected}, found {found}")]
    CoinDimMismatch { expected: usize, found: usize },

    #[error("walk would reach |x| or |y| = {needed} but the window half-width is {half_width}")]
    WindowOverflow { needed: usize, half_width: usize },

    #[error("lattice windows differ: {0} vs {1}")]
    WindowMismatch(usize, usize),

    #[error("states are at different times: {0} vs {1}")]
    TimeMismatch(usize, usize),

    #[error("sign index must be 0 or 1, got {0}")]
    InvalidSignIndex(u8),

    #[error("initial coin states are not a paired choice: {0}")]
    UnpairedInit(String),

    #[error("degenerate momentum ({kx}, {ky}): closed-form eigensystem is singular")]
    Degenerate { kx: f64, ky: f64 },

    #[error("hermitian eigensolver did not converge on a {0}x{0} matrix")]
    EigenNoConvergence(usize),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}
