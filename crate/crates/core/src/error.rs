use core::fmt;

use crate::polygon::CsPair;
use crate::tube::TubeObject;

/// Everything that can go wrong in this crate.
///
/// Variants split into two groups: input errors (bad ranks, malformed
/// objects, out-of-range indices) and violations, which mean a structural
/// claim about the cluster tube failed to hold on a concrete input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Tube ranks start at 2.
    InvalidRank(u32),
    /// First coordinate outside `1..=n` or quasi-length zero.
    InvalidObject {
        a: i64,
        b: u32,
        rank: u32,
    },
    /// Two arguments live in tubes of different rank.
    RankMismatch {
        left: u32,
        right: u32,
    },
    /// The operation needs a rigid indecomposable (quasi-length at most n-1).
    NotRigid(TubeObject),
    /// A summand list does not form a maximal rigid object.
    NotMaximalRigid(&'static str),
    /// An almost complete object had the wrong number of completions.
    ComplementCount {
        found: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    /// Matrix shape does not fit the operation.
    Shape(&'static str),
    /// Two paths through the exchange graph produced different matrices for
    /// the same maximal rigid object.
    PathDependence {
        node: usize,
    },
    /// A maximal rigid object was not reached from the initial seed.
    Unreachable {
        missing: usize,
    },
    /// An exchange matrix entry left the range `-2..=2`.
    EntryOutOfBounds {
        value: i64,
    },
    /// The object is not a node of the exchange graph.
    UnknownNode,
    /// A diagonal with equal or adjacent corners.
    InvalidDiagonal {
        p: u32,
        q: u32,
        corners: u32,
    },
    /// A set of pairs is not a centrally symmetric triangulation.
    NotTriangulation(&'static str),
    /// A flip did not have exactly one replacement.
    FlipCount {
        pair: CsPair,
        found: usize,
    },
    /// Integer overflow during exact elimination.
    Overflow,
    /// An argument outside the documented domain.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank(n) => write!(f, "tube rank must be at least 2, got {n}"),
            Error::InvalidObject { a, b, rank } => {
                write!(f, "({a},{b}) is not an indecomposable of the rank-{rank} tube")
            }
            Error::RankMismatch { left, right } => {
                write!(f, "objects live in tubes of rank {left} and {right}")
            }
            Error::NotRigid(x) => write!(f, "{x} is not rigid"),
            Error::NotMaximalRigid(why) => write!(f, "not a maximal rigid object: {why}"),
            Error::ComplementCount { found } => {
                write!(f, "expected exactly two complements, found {found}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::Shape(why) => write!(f, "bad matrix shape: {why}"),
            Error::PathDependence { node } => {
                write!(f, "exchange matrix of node {node} depends on the mutation path")
            }
            Error::Unreachable { missing } => {
                write!(f, "{missing} maximal rigid objects not reachable from the initial seed")
            }
            Error::EntryOutOfBounds { value } => {
                write!(f, "exchange matrix entry {value} outside -2..=2")
            }
            Error::UnknownNode => write!(f, "object is not a node of the exchange graph"),
            Error::InvalidDiagonal { p, q, corners } => {
                write!(f, "[{p},{q}] is not a diagonal of the {corners}-gon")
            }
            Error::NotTriangulation(why) => {
                write!(f, "not a centrally symmetric triangulation: {why}")
            }
            Error::FlipCount { pair, found } => {
                write!(f, "flip of {pair} has {found} replacements, expected 1")
            }
            Error::Overflow => write!(f, "integer overflow in exact elimination"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
