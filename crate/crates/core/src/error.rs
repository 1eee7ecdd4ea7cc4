//! Crate-wide error type.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("empty dataset")]
    EmptyDataset,
    #[error("row {row}: dimension mismatch (expected {expected}, got {got})")]
    DimensionMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("row {row}: non-finite attribute value")]
    NonFiniteAttribute { row: usize },
    #[error("row {row}: choice must be -1 or +1 (got {got})")]
    InvalidChoice { row: usize, got: i8 },
    #[error("row {row}: response time must be positive and finite (got {got})")]
    InvalidTime { row: usize, got: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("train size {n_train} out of range for dataset of size {n}")]
    BadSplit { n_train: usize, n: usize },
    #[error("row {row}: ratio function returned a non-finite value")]
    NonFiniteRatio { row: usize },

    #[error(
        "series did not converge within {max_terms} terms (t/b^2 = {t_over_b2}); \
         tolerance too tight for this regime"
    )]
    SeriesDivergence { max_terms: usize, t_over_b2: f64 },
    #[error("rejection sampler exceeded {cap} proposals at b*v = {bv}; envelope failure")]
    RejectionCap { cap: u64, bv: f64 },
    #[error("path simulation exceeded the step cap of {cap} steps")]
    StepCap { cap: u64 },
    #[error("noise rate must lie in [0, 0.5): got {got}")]
    InvalidNoiseRate { got: f64 },

    #[error("SGD iterate became non-finite at step {step}; the step size is too large for this diameter")]
    SgdDivergence { step: usize },
    #[error("logistic fit diverged (norm exceeded {limit:e}); data are separable, use reg > 0")]
    PerfectSeparation { limit: f64 },
    #[error("inconsistent boundary estimates: m'u = {inner} must be positive")]
    InconsistentEstimates { inner: f64 },
    #[error(
        "moment matching failed: empirical mean response time {observed} \
         outside the attainable range [{lo}, {hi}]"
    )]
    MomentBracket { observed: f64, lo: f64, hi: f64 },
    #[error(
        "no restart reached stationarity: best gradient norm {best_grad:e} at loss {best_loss}"
    )]
    NoStationaryPoint { best_grad: f64, best_loss: f64 },
    #[error("need at least {needed} batches of equal size")]
    BadBatches { needed: usize },
    #[error("money weight must be positive to define a discount factor (got {got})")]
    NonPositiveMoneyWeight { got: f64 },
}

impl Error {
    /// Whether the error stems from invalid input rather than a numerical
    /// failure mid-computation. The CLI maps this to its exit codes.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::EmptyDataset
                | Error::DimensionMismatch { .. }
                | Error::NonFiniteAttribute { .. }
                | Error::InvalidChoice { .. }
                | Error::InvalidTime { .. }
                | Error::InvalidParam(_)
                | Error::BadSplit { .. }
                | Error::InvalidNoiseRate { .. }
                | Error::BadBatches { .. }
        )
    }
}
