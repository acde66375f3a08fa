use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("{u}-{v} is already an edge")]
    EdgeExists { u: usize, v: usize },

    #[error("malformed edge-list document: {0}")]
    MalformedDocument(String),

    #[error("invalid graph6 string: {0}")]
    InvalidGraph6(String),

    #[error("{family} requires {requirement}")]
    FamilyBounds {
        family: &'static str,
        requirement: &'static str,
    },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error(
        "graph of order {order} exceeds the enumeration cap of {cap}; \
         raise the cap (up to {hard}) or use a closed-form family formula",
        hard = crate::enumerate::HARD_ENUMERATION_LIMIT
    )]
    CapExceeded { order: usize, cap: usize },

    #[error("invalid restricted specification: {0}")]
    InvalidSpec(String),

    #[error("coefficient of x^{i}*y^{j} is negative")]
    NegativeCoefficient { i: usize, j: usize },

    #[error("term x^{i}*y^{j} exceeds the polynomial order {order}")]
    DegreeExceedsOrder { i: usize, j: usize, order: usize },

    #[error("not the boundary polynomial of a graph: {0}")]
    NotGraphPolynomial(String),

    #[error("vertex connectivity needs a connected graph")]
    Disconnected,

    #[error("unknown output format `{0}` (expected plain, latex or json)")]
    UnknownFormat(String),

    #[error("{0}")]
    Precondition(String),
}
