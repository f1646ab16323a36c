//! Minimal free resolutions, Betti and Bass sequences, Tor/Ext lengths and
//! curvature estimates for modules over artinian quotients of polynomial
//! rings over prime fields, together with an audit harness for the growth
//! obstructions those invariants must satisfy.

pub mod error;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use linalg::{FieldScalar, Matrix, PrimeField};
pub use poly::{GroebnerBasis, Monomial, MonomialOrder, PolyRing, Polynomial};
pub mod algebra;
pub mod modrep;
pub mod resolution;
pub mod homology;
pub mod asymptotics;
pub mod audit;
pub mod io;
#[cfg(test)]
mod testutil;

pub use algebra::QuotientAlgebra;
pub use modrep::{ModuleRep, PresentationMatrix};
pub use resolution::{resolve, resolve_with, FreeResolution, ResolveOptions};
