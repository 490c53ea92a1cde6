//! Combinatorics of the cluster category of a tube of rank `n`.
//!
//! The crate computes Hom and Ext¹ dimensions between indecomposables,
//! enumerates maximal rigid objects and their exchanges, propagates exchange
//! matrices by Fomin–Zelevinsky mutation over the whole exchange graph, and
//! compares everything with centrally symmetric triangulations of a
//! `2n`-gon (the type `B_{n-1}` cluster model).
//!
//! Everything here is pure computation on immutable values and builds
//! without `std`; enable the `std` feature for `std::error::Error`.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod clique;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod mutation;
pub mod polygon;
pub mod rep;
pub mod rigid;
pub mod tube;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use mutation::{ExchangeGraph, ExchangeMatrix, MiddleTerms, Seed};
pub use polygon::{CsPair, CsTriangulation, Diagonal, FlipGraph};
pub use rep::NilpotentRep;
pub use rigid::{AlmostComplete, MaximalRigid, TiltingDatum, WingPosition};
pub use tube::{HomDims, TubeObject, TubeRank};
