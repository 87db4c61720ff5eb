use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("window too small: j_max = {j_max} < n_max = {n_max}; enable truncation to clip the support")]
    WindowTooSmall { n_max: usize, j_max: usize },

    #[error("coefficient sequence `{name}` has {len} entries, the supported maximum is {max}")]
    SupportTooLong { name: &'static str, len: usize, max: usize },

    #[error("g has a pole at z = {re} {im:+}i (boundary determinant vanishes)")]
    Pole { re: f64, im: f64 },

    #[error("residue undefined: {0}")]
    ResidueUndefined(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A numerical self-check failed (branch inconsistency, unresolved grid, ...).
    #[error("numerical diagnostic failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Numerical(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
