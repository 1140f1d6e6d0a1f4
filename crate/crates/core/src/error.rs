//! Error type shared by every module of the crate.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A scalar failed its domain invariant.
    #[error("{what} must be {requirement}, got {value}")]
    Domain {
        what: &'static str,
        requirement: &'static str,
        value: f64,
    },

    /// A formula was invoked outside its regime of validity. The message
    /// names the violated inequality.
    #[error("regime violation: {0}")]
    Regime(String),

    /// An allocation was requested over an empty channel list.
    #[error("at least one channel is required")]
    NoChannels,

    /// Two vectors that must be index-aligned have different lengths.
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// The allocation oracle was asked for too coarse a discretization.
    #[error("oracle needs at least {min} quanta, got {got}")]
    TooFewSteps { min: usize, got: usize },
}

impl Error {
    pub(crate) fn domain(what: &'static str, requirement: &'static str, value: f64) -> Self {
        Error::Domain {
            what,
            requirement,
            value,
        }
    }
}
