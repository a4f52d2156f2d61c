//! Inverse Markov (Turan-type) factors `M_n(K)` for convex compact sets.
//!
//! `M_n(K)` is the infimum of `‖P'‖_K / ‖P‖_K` over complex polynomials of
//! exact degree `n` with all zeros in `K`. This crate provides:
//!
//! - [`geometry`]: convex sets (polygon, disk, ellipse, diamond, segment)
//!   with diameter, minimal width, membership, boundary sampling and affine
//!   normalization to the `d = 2`, `±1 ∈ K` frame;
//! - [`polyroot`]: root-form polynomials with overflow-safe log-scale
//!   evaluation and certified sup-norm intervals on convex sets;
//! - [`constructions`]: the explicit test polynomials `(z-1)^n`,
//!   `(z^2-1)^m`, `(z-1)(z^2-1)^m` and the case selector that picks a
//!   witness certifying the upper bound `28·max{wn/d², √n/d}`;
//! - [`bounds`]: closed-form evaluation of all published two-sided bounds
//!   with applicability flags and threshold analysis;
//! - [`proofcheck`]: numerical and interval-arithmetic verification of every
//!   inequality used in the proofs behind the upper bound;
//! - [`search`]: numerical estimation of `M_n(K)` by derivative-free descent
//!   over root placements, with a brute-force oracle at tiny degree.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod polyroot;
pub mod proofcheck;
pub mod search;

pub use error::{Error, Result};
pub use geometry::{AffineMap, ConvexSet};
pub use polyroot::{LogValue, NormEstimate, RatioInterval, RootPoly};
