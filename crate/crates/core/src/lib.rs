//! Exact intersection bodies of convex polytopes.
//!
//! The radial function of the intersection body `IP` of a polytope `P` is
//! `rho(x) = vol_{d-1}(P ∩ x⊥) / |x|`. On each open chamber of the central
//! arrangement of hyperplanes `v⊥` (one per non-zero vertex `v`) it is a
//! quotient of polynomials, and the crate computes those pieces exactly,
//! follows them under translation of `P`, and decides or certifies
//! convexity of `IP`.
//!
//! Everything geometric runs over exact rationals ([`Rat`]). The float
//! oracle in [`radial::radial_oracle`] exists only to cross-check.

pub mod arrangement;
pub mod catalog;
pub mod convexity;
pub mod error;
pub mod export;
pub mod fourier_motzkin;
pub mod hull;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod probe;
pub mod radial;
pub mod rational;
pub mod sweep;
pub mod translation;
pub mod vector;

pub use error::{Error, Result};
pub use polytope::{build_polygon, build_polytope, OriginPosition, Polytope};
pub use rational::Rat;
pub use vector::Vector;
