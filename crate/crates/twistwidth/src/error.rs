use crate::set_system::Subset;
use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("OutOfRangeElement: element {element} is not in 1..={ground}")]
    OutOfRangeElement { element: u32, ground: u32 },

    #[error("GroundSetTooLarge: ground set of size {0} exceeds the 64-element cap")]
    GroundSetTooLarge(u32),

    #[error("ImproperSystem: the family of feasible sets is empty")]
    ImproperSystem,

    #[error("NotDeltaMatroid: symmetric exchange fails at (X={x:?}, Y={y:?}, u={u})")]
    NotDeltaMatroid { x: Vec<u32>, y: Vec<u32>, u: u32 },

    #[error("NotFeasible: {0:?} is not a member of the family")]
    NotFeasible(Vec<u32>),

    #[error("NoSandwich: no minimum/maximum member brackets the given feasible set")]
    NoSandwich,

    #[error("RepeatedElement: element {0} appears more than once in the sequence")]
    RepeatedElement(u32),

    #[error("IllegalScript: {0}")]
    IllegalScript(String),

    #[error("TooLarge: ground set of size {size} exceeds the brute-force cap {cap}")]
    TooLarge { size: u32, cap: u32 },

    #[error("TooManyEdges: {edges} edges exceed the enumeration cap {cap}")]
    TooManyEdges { edges: u32, cap: u32 },

    #[error("InvalidSubset: subset mentions edges outside the graph")]
    InvalidSubset,

    #[error("Disconnected: this operation requires a connected ribbon graph")]
    Disconnected,

    #[error("GenerationExhausted: rejection budget of {0} attempts exceeded")]
    GenerationExhausted(u32),

    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn not_delta_matroid(x: Subset, y: Subset, u: u32) -> Self {
        Error::NotDeltaMatroid {
            x: x.elements(),
            y: y.elements(),
            u,
        }
    }

    /// Short stable name, used by the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::OutOfRangeElement { .. } => "OutOfRangeElement",
            Error::GroundSetTooLarge(_) => "GroundSetTooLarge",
            Error::ImproperSystem => "ImproperSystem",
            Error::NotDeltaMatroid { .. } => "NotDeltaMatroid",
            Error::NotFeasible(_) => "NotFeasible",
            Error::NoSandwich => "NoSandwich",
            Error::RepeatedElement(_) => "RepeatedElement",
            Error::IllegalScript(_) => "IllegalScript",
            Error::TooLarge { .. } => "TooLarge",
            Error::TooManyEdges { .. } => "TooManyEdges",
            Error::InvalidSubset => "InvalidSubset",
            Error::Disconnected => "Disconnected",
            Error::GenerationExhausted(_) => "GenerationExhausted",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
