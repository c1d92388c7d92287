use std::fmt;

use crate::vertex::VertexSet;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The pair (n, k) does not define a graph: 2k < n is required.
    DegenerateLevels { n: u32, k: u32 },
    /// The requested universe is too large for the operation.
    UniverseTooLarge { n: u32, max: u32 },
    /// A ground element lies outside 1..=n.
    ElementOutOfRange { element: u32, n: u32 },
    /// A vertex belongs to a different universe than expected.
    UniverseMismatch { expected: u32, got: u32 },
    /// A set's cardinality is neither k nor n-k, so it is not a vertex.
    WrongCardinality { cardinality: u32, k: u32, n: u32 },
    /// A layer index outside 0..=radius was requested.
    LayerOutOfRange { index: u32, max: u32 },
    /// A step count outside 0..=2*radius+1 was requested.
    StepOutOfRange { step: u32, max: u32 },
    /// A vertex that is not part of the materialized graph.
    UnknownVertex { vertex: VertexSet },
    /// An exact count does not fit in the chosen counter type.
    CountOverflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateLevels { n, k } => {
                write!(f, "invalid parameters n={n}, k={k}: 2k < n is required")
            }
            Error::UniverseTooLarge { n, max } => {
                write!(f, "universe size {n} exceeds the limit {max} for this operation")
            }
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} is outside the ground set 1..={n}")
            }
            Error::UniverseMismatch { expected, got } => {
                write!(f, "vertex over universe {got} used where universe {expected} is required")
            }
            Error::WrongCardinality { cardinality, k, n } => {
                write!(
                    f,
                    "a set of {cardinality} elements is not a vertex of L({k},{n}): \
                     cardinality must be {k} or {}",
                    n - k
                )
            }
            Error::LayerOutOfRange { index, max } => {
                write!(f, "layer index {index} is outside 0..={max}")
            }
            Error::StepOutOfRange { step, max } => {
                write!(f, "step count {step} is outside 0..={max}")
            }
            Error::UnknownVertex { vertex } => {
                write!(f, "vertex {vertex} is not part of the materialized graph")
            }
            Error::CountOverflow => {
                write!(f, "exact count overflows the chosen counter type")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
