use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("grid resolution error: {0}")]
    Resolution(String),

    #[error("contour error: {0}")]
    Contour(String),

    #[error("rank decision ambiguous: singular values {gap_lo:.3e} / {gap_hi:.3e} have gap ratio < 10")]
    Rank { gap_lo: f64, gap_hi: f64 },

    #[error("chain consistency error: {0}")]
    Consistency(String),

    #[error("unsupported scope: {0}")]
    Scope(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("inversion line Im λ = {height} passes within {distance:.3e} of eigenvalue {offender}")]
    Line {
        height: f64,
        offender: Complex64,
        distance: f64,
    },

    #[error("log-grid error: {0}")]
    Grid(String),

    #[error("annulus fit error: {0}")]
    Annulus(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
