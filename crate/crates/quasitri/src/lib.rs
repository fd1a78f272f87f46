//! Simplicial complexes, integral homology and explicit triangulations of
//! quasitoric 4-manifolds assembled from solid tori.

pub mod algebra;
pub mod assembly;
pub mod catalog;
pub mod charfun;
pub mod complex;
pub mod error;
pub mod io;
pub mod iso;
pub mod recognition;
pub mod vertex;

pub use complex::{FVector, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use vertex::Vertex;
