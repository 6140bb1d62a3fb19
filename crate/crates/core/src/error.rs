use core::fmt;

/// Errors raised by categorical operations and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatError {
    /// `cod(first) != dom(second)` in a composition.
    CompositionMismatch,
    /// A morphism required to be a monomorphism is not.
    NotMono,
    /// A morphism required to be an isomorphism is not.
    NotIso,
    /// The category does not provide complement diagrams, so iterated
    /// partializations (k >= 2) cannot be built over it.
    ComplementUnsupported,
    /// No complement square passed verification during search.
    ComplementNotFound,
    /// Enumeration would exceed the configured size cap.
    SizeCap { predicted: usize, cap: usize },
    /// Chain lengths disagree.
    LengthMismatch,
    /// Source/target objects disagree.
    ObjectMismatch,
    /// A parameter is out of its valid range.
    InvalidParameter(&'static str),
}

impl fmt::Display for CatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatError::CompositionMismatch => write!(f, "codomain/domain mismatch in composition"),
            CatError::NotMono => write!(f, "morphism is not a monomorphism"),
            CatError::NotIso => write!(f, "morphism is not an isomorphism"),
            CatError::ComplementUnsupported => {
                write!(f, "category does not support complement diagrams")
            }
            CatError::ComplementNotFound => {
                write!(f, "no verified complement square found by search")
            }
            CatError::SizeCap { predicted, cap } => {
                write!(f, "enumeration size {predicted} exceeds cap {cap}")
            }
            CatError::LengthMismatch => write!(f, "chain lengths differ"),
            CatError::ObjectMismatch => write!(f, "source/target objects differ"),
            CatError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, CatError>;
