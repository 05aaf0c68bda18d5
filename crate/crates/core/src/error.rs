use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word is not a permutation of `1..=len`.
    InvalidPermutation(String),
    /// Two objects live over different node sets / algebras.
    SizeMismatch { left: usize, right: usize },
    /// An arc with bad endpoints or a side vector of the wrong length.
    InvalidArc(String),
    /// A diagram that violates (C1) or (C2), or mixes colors.
    InvalidDiagram(String),
    /// Relation asked for two arcs that cross.
    ArcsCross,
    /// Relation asked for two arcs whose interiors do not overlap.
    ArcsDoNotOverlap,
    /// A brick description that is not a brick of the algebra.
    InvalidBrick(String),
    /// Representation whose maps have wrong shapes or violate a relation.
    InvalidRepresentation(String),
    /// A member of the pair is not a brick.
    NotABrick(String),
    /// The pivot of a mutation is not a member of the expected side.
    NotAMember,
    /// Mutation precondition failed (some approximation is neither mono nor epi).
    NotMutationCompatible,
    /// A mutation produced something that is not a semibrick pair.
    MutationBroken(String),
    /// Full-rank completion: the pair does not have `|D| + |U| = n`.
    NotFullRank { size: usize, rank: usize },
    /// Full-rank completion: some node is the source (or target) of two arcs.
    DegreeViolation(usize),
    /// Full-rank completion: the arc graph has a cycle.
    CycleDetected,
    /// Full-rank completion: the arc graph is disconnected.
    Disconnected,
    /// No permutation realises a diagram (cannot happen for valid diagrams).
    NoPreimage,
    /// Desk-scale bound exceeded.
    OutOfBounds(String),
    /// The arc-backed fast path and the authoritative path disagree.
    Disagreement(String),
    /// Operation requested on an algebra that does not support it.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPermutation(s) => write!(f, "invalid permutation: {s}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::InvalidArc(s) => write!(f, "invalid arc: {s}"),
            Error::InvalidDiagram(s) => write!(f, "invalid diagram: {s}"),
            Error::ArcsCross => f.write_str("arcs cross"),
            Error::ArcsDoNotOverlap => f.write_str("arcs do not overlap"),
            Error::InvalidBrick(s) => write!(f, "invalid brick: {s}"),
            Error::InvalidRepresentation(s) => write!(f, "invalid representation: {s}"),
            Error::NotABrick(s) => write!(f, "not a brick: {s}"),
            Error::NotAMember => f.write_str("mutation pivot is not a member of the pair"),
            Error::NotMutationCompatible => f.write_str("not singly mutation compatible"),
            Error::MutationBroken(s) => write!(f, "mutation did not produce a semibrick pair: {s}"),
            Error::NotFullRank { size, rank } => {
                write!(f, "pair has size {size}, expected full rank {rank}")
            }
            Error::DegreeViolation(v) => write!(f, "node {v} has two incoming or two outgoing arcs"),
            Error::CycleDetected => f.write_str("arc graph contains a cycle"),
            Error::Disconnected => f.write_str("arc graph is disconnected"),
            Error::NoPreimage => f.write_str("no permutation realises the diagram"),
            Error::OutOfBounds(s) => write!(f, "out of bounds: {s}"),
            Error::Disagreement(s) => write!(f, "fast path disagrees with oracle: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
