//! Saddle connections and directional cylinder decompositions.
//!
//! Three layers:
//!   * [`trace`]: straight-line flow through the triangulation, one edge
//!     crossing at a time, with exact predicates on exact coordinates.
//!   * [`enumerate`]: complete saddle-connection enumeration up to a length
//!     bound via a pruned angular-sector search, plus ray continuations
//!     through regular marked points (a segment may pass straight through a
//!     cone point of angle exactly 2π; this matches the lattice-count
//!     convention on the torus).
//!   * [`cylinders`]: cylinders in a fixed direction from parallel saddle
//!     connections, boundary chains, and a closed-leaf certificate; the
//!     construction stays correct in non-periodic directions.

mod cylinders;
mod enumerate;
mod trace;

pub use cylinders::{cylinders_up_to, decompose_direction, Cylinder, DirectionDecomposition, ParallelSc};
pub use enumerate::{enumerate_holonomies, enumerate_saddle_connections, PathStep, SaddleConnection};
pub use trace::TraceBudget;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TrajectoryError {
    #[error("trace budget exceeded after {0} triangle crossings")]
    BudgetExceeded(u64),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("numerical failure while tracing (degenerate float configuration)")]
    Numerical,
}
