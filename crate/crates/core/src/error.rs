use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Reason a PNM header or body was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PnmErrorKind {
    BadMagic,
    MalformedHeader(&'static str),
    UnsupportedMaxval(u32),
    TruncatedBody { expected: usize, found: usize },
}

impl std::fmt::Display for PnmErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PnmErrorKind::BadMagic => write!(f, "expected magic P5 or P6"),
            PnmErrorKind::MalformedHeader(what) => write!(f, "malformed header: {what}"),
            PnmErrorKind::UnsupportedMaxval(v) => write!(f, "unsupported maxval {v} (only 255)"),
            PnmErrorKind::TruncatedBody { expected, found } => {
                write!(f, "truncated body: expected {expected} bytes, found {found}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("pnm parse error at byte {offset}: {kind}")]
    Pnm { offset: usize, kind: PnmErrorKind },

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("channel {channel} out of range for {channels}-channel image")]
    ChannelOutOfRange { channel: usize, channels: usize },

    #[error("{0} filter requires a guidance image")]
    MissingGuide(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn pnm(offset: usize, kind: PnmErrorKind) -> Self {
        Error::Pnm { offset, kind }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// Shape errors map to a distinct process exit status in the CLI.
    pub fn is_shape_error(&self) -> bool {
        matches!(self, Error::DimensionMismatch { .. })
    }
}
