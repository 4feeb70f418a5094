use thiserror::Error;

/// Errors raised by construction, verification and serialization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width {0} is outside the supported range 1..=62")]
    InvalidWidth(u32),

    #[error("value {value} does not fit in {width} bits")]
    ValueOutOfRange { value: u64, width: u32 },

    #[error("bit index {index} is outside 1..={width}")]
    BitIndex { index: u32, width: u32 },

    #[error("variable x{var} is not bound by an assignment of width {width}")]
    UnboundVariable { var: u32, width: usize },

    #[error("invalid interval: need a < b <= 2^n, got a={a}, b={b}, n={n}")]
    InvalidInterval { n: u32, a: u64, b: u64 },

    #[error("{0}")]
    Usage(String),

    #[error("width {width} exceeds the limit of {limit}")]
    WidthLimit { width: u32, limit: u32 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("wire {wire} is read before it is driven (gate {gate})")]
    DanglingWire { wire: usize, gate: usize },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// True for caller mistakes (bad flags, violated preconditions), as
    /// opposed to resource guards or malformed input files.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::WidthLimit { .. } | Error::Parse { .. } | Error::DanglingWire { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
