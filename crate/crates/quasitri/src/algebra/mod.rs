//! Exact integer linear algebra and homology.

mod homology;
mod matrix;
mod presentation;
mod snf;
mod sparse;

pub use homology::{homology, orientable, HomologyGroup, HomologyProfile, Orientation};
pub use matrix::IntegerMatrix;
pub use presentation::{
    abelianization, edge_path_presentation, killed_class, loop_class, reference_loops,
    EdgePathPresentation, GroupPresentation,
};
pub use snf::{smith_normal_form, SnfDecomposition};
pub use sparse::{invariant_factors, Elimination, SparseMatrix};
