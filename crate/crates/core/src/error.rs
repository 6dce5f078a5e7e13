//! Error type shared by graph construction, parsing, and the enumeration caps.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size parameter fell outside the documented range for an operation.
    OutOfRange {
        what: &'static str,
        got: usize,
        min: usize,
        max: usize,
    },
    /// A vertex-count parameter was below the minimum for the family.
    TooSmall {
        what: &'static str,
        got: usize,
        min: usize,
    },
    /// An attachment step referenced an edge that does not exist yet.
    BadAttachment { index: usize, u: usize, v: usize },
    /// A labeled-coloring enumeration would exceed the iteration cap.
    ColoringCapExceeded { colorings: u128, cap: u128 },
    /// A two-tree sequence literal could not be parsed.
    ParseSeq { input: String, reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange {
                what,
                got,
                min,
                max,
            } => {
                write!(f, "{what}: expected {min} <= value <= {max}, got {got}")
            }
            Error::TooSmall { what, got, min } => {
                write!(f, "{what}: expected value >= {min}, got {got}")
            }
            Error::BadAttachment { index, u, v } => write!(
                f,
                "attachment {index} references edge ({u},{v}) which is not present at that step"
            ),
            Error::ColoringCapExceeded { colorings, cap } => {
                write!(
                    f,
                    "coloring enumeration of {colorings} assignments exceeds cap {cap}"
                )
            }
            Error::ParseSeq { input, reason } => {
                write!(f, "invalid two-tree sequence {input:?}: {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}
