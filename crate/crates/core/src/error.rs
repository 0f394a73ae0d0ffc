use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// reproduce the failing call.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found} ({what})")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("Weil context mismatch: {0}")]
    ContextMismatch(String),

    #[error("affine coefficients sum to {0}, not 1")]
    AffineViolation(String),

    #[error("index {index} out of range 1..={max} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("vertices {a} and {b} are not neighbours")]
    NotNeighbours { a: usize, b: usize },

    #[error("composition undefined: {0}")]
    Composition(String),

    #[error("shell adjacency failure: {0}")]
    Adjacency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension {
            what,
            expected,
            found,
        })
    }
}

pub(crate) fn check_index(what: &'static str, index: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index, max })
    }
}
