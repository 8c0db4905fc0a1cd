//! svlab: a flat-surface computation laboratory.
//!
//! Counts saddle connections and cylinders on explicit translation surfaces,
//! estimates area and cylinder Siegel-Veech constants empirically, and
//! reproduces the exact rational values of those constants for the gothic
//! locus through the principal-boundary intersection calculus. The two
//! routes cross-validate each other: the trajectory tracer against the
//! square-tiled permutation engine, and the Monte Carlo integrators against
//! the closed-form volumes behind the exact table.

pub mod boundary;
pub mod estimate;
pub mod io;
pub mod loci;
pub mod mcverify;
pub mod origami;
pub mod scalar;
pub mod surface;
pub mod trajectories;

pub use scalar::{Rat, Scalar, Vec2};
pub use surface::{StratumSignature, SurfaceError, TranslationSurface};
