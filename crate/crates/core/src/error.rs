use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a valid surgery coefficient")]
    InvalidCoefficient,
    #[error("infinite surgery coefficient not admitted")]
    InfiniteCoefficient,
    #[error("integer overflow: {0}")]
    Overflow(&'static str),
    #[error("input out of range: |p|, q must not exceed {max}")]
    OutOfRange { max: i64 },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
    #[error("{0} and {1} are not joined by a Farey edge")]
    NotUnimodular(String, String),
    #[error("triangle vertices must be distinct")]
    RepeatedVertex,
    #[error("{vertex} is not a vertex of {triangle}")]
    NotAVertex { vertex: String, triangle: String },
    #[error("{edge} is not an edge of {triangle}")]
    NotAnEdge { edge: String, triangle: String },
    #[error("cap exceeded: distance is larger than {cap}")]
    CapExceeded { cap: u32 },
    #[error("degenerate: slope {0} lies on the base triangle")]
    SlopeOnBase(String),
    #[error("meridian {0} lies on the base triangle")]
    MeridianOnBase(String),
    #[error("flip block needs adjacent theta classes, got distance {0}")]
    NotAdjacent(u64),
    #[error("no spine constant available for the knot exterior block {0}")]
    NoSpineConstant(i64),
    #[error("block {block:?} has no boundary torus {label:?}")]
    UnknownBoundary { block: String, label: String },
    #[error("cannot glue a block to itself")]
    SelfGluing,
    #[error("pipeline not applicable to exceptional slope {0}; omega given directly")]
    NotHyperbolic(String),
    #[error("identity violated at {slope}: {detail}")]
    IdentityViolation { slope: String, detail: String },
    #[error("max omega must be at least 7, got {0}")]
    OmegaTooSmall(u64),
    #[error("enumeration bound not proven: {0}")]
    UnprovenBound(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
