//! Exact rational linear algebra and polyhedron machinery.
//!
//! Everything here is computed over the rationals with no floating point:
//! extreme points of `P(A, b) = {x | Ax <= b}`, extremal rays of the
//! recession cone `C(A) = {x | Ax <= 0}`, and exact membership tests. The
//! enumeration requires systems in standard form (explicit sign rows
//! for every variable), which forces the cone to be pointed.

mod matrix;
mod polyhedron;

pub use matrix::RationalMatrix;
pub use polyhedron::{Polyhedron, VertexRaySet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("recession cone contains a line; extremal rays are undefined")]
    RaysNotPointed,
    #[error("operation requires a system in standard form")]
    NotStandardForm,
}
