//! Similarity and distance measures for real vectors, plus the tooling to
//! interrogate them: a squared-norm identity checker, a randomized
//! metric-axiom auditor, and comparison tables with per-measure rankings.
//!
//! The centerpiece pair of measures couples a Minkowski distance with the
//! angle between the vectors. The joint distance multiplies the base
//! distance by 2 - cos(theta), so opposed vectors read up to three times
//! farther apart than magnitude alone suggests; the joint similarity maps
//! that distance into (0, 1] via 1 / (1 + d). The auditor demonstrates on
//! fixed witness triples that this construction trades away the triangle
//! inequality, while plain Minkowski distances pass all four axioms on the
//! same sampled inputs.
//!
//! Audit trials and table rows evaluate data-parallel under the default
//! `parallel` feature (via rayon) and sequentially without it; both paths
//! return identical results, and every parallel entry point has a
//! `_sequential` twin for pinning the baseline.

mod error;
mod exec;
mod kind;
mod vector;

pub mod audit;
pub mod measures;
pub mod norm_identity;
pub mod ranking;

pub use error::{Error, Result};
pub use kind::{MeasureKind, Polarity};
pub use vector::{AngleDeg, Vector};

/// Absolute tolerance for comparisons whose expected value is at or near
/// zero, where relative error has nothing to scale against.
pub const ABSOLUTE_TOLERANCE: f64 = 1e-9;

/// Relative tolerance for comparisons whose operands grow with input scale;
/// roughly a few hundred ulps at double precision.
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// True when `a` and `b` agree within the default tolerances, whichever of
/// the absolute and magnitude-scaled relative bounds is looser.
pub fn approx_eq(a: f64, b: f64) -> bool {
    let diff = (a - b).abs();
    diff <= ABSOLUTE_TOLERANCE || diff <= RELATIVE_TOLERANCE * a.abs().max(b.abs())
}
