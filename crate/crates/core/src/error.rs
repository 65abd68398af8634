use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the relational and multirelational operations.
///
/// Shape and cap violations are reported as values; no operation truncates
/// or silently reshapes its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },

    #[error("identity requested on non-square shape {src}x{dst}")]
    IdentityShapeMismatch { src: usize, dst: usize },

    #[error("powerset of a carrier of size {size} exceeds the materialization cap {cap}")]
    PowersetTooLarge { size: usize, cap: usize },

    #[error("subset mask width {width} exceeds the mask cap {cap}")]
    MaskTooWide { width: usize, cap: usize },

    #[error("enumeration of {what} needs {size} steps (cap {cap})")]
    EnumerationTooLarge { what: String, size: u128, cap: u128 },

    #[error("invalid value: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn shape(op: &'static str, left: (usize, usize), right: (usize, usize)) -> Self {
        Error::ShapeMismatch { op, left, right }
    }

    /// True for the errors caused by hitting one of the size caps.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::PowersetTooLarge { .. } | Error::MaskTooWide { .. } | Error::EnumerationTooLarge { .. })
    }
}
