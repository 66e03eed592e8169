use thiserror::Error;

#[derive(Debug, Error)]
pub enum GfcppError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series truncation failed: {0}")]
    Truncation(String),

    #[error("series argument out of the certified convergence range: {0}")]
    DivergenceGuard(String),

    #[error("rejection sampler stalled after {0} iterations")]
    SamplerStall(usize),

    #[error(
        "calendar time {t} exceeds the simulated subordinator supremum {sup}; \
         extend the operational-time horizon"
    )]
    Coverage { t: f64, sup: f64 },

    #[error("moment undefined: {0}")]
    MomentUndefined(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GfcppError>;
