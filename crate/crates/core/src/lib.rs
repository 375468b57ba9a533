//! Exact root systems, Weyl group actions, weight multiplicities and tensor
//! product decompositions for the simple Lie algebras, together with a
//! verification engine for the components of `V(ρ) ⊗ V(ρ)`.
//!
//! Everything is exact: integral weights use machine integers bounded by the
//! size guards in [`Limits`], rational quantities use arbitrary-precision
//! rationals. No floating point is involved anywhere.

pub mod error;
pub mod kostant;
pub mod limits;
mod linalg;
pub mod polytope;
pub mod reps;
pub mod rootsys;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use limits::Limits;
pub use rootsys::{LieType, RootSystem, Series};
pub use weight::{QWeight, RootCoords, Weight};
pub use weyl::{DominantResult, Parabolic, Subset, WeylWord};
