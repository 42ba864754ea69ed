use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation (negative,
    /// NaN, infinite, or a negative value for an unsigned format).
    Domain(&'static str),
    /// Level or index widths (or float parameters) out of the supported range.
    InvalidFormat(&'static str),
    /// A format name could not be parsed.
    UnknownFormat,
    /// Operands or words belong to different formats.
    FormatMismatch,
    /// Exhaustive enumeration was requested for a format that is too wide.
    Capacity {
        width: u32,
        limit: u32,
    },
    /// Stepping past the largest (or below the smallest) representable value.
    Range,
    DivisionByZero,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InvalidFormat(what) => write!(f, "invalid format: {what}"),
            Error::UnknownFormat => f.write_str("unknown format name"),
            Error::FormatMismatch => f.write_str("operands belong to different formats"),
            Error::Capacity { width, limit } => {
                write!(f, "format is {width} bits wide, enumeration is limited to {limit}")
            }
            Error::Range => f.write_str("no representable neighbour in that direction"),
            Error::DivisionByZero => f.write_str("division by zero"),
        }
    }
}

impl core::error::Error for Error {}
