//! Exact dense linear algebra: matrices, incremental row reduction and
//! subspaces with canonical bases.

mod echelon;
mod matrix;
mod subspace;

pub use echelon::Echelon;
pub use matrix::{tensor_index, Matrix};
pub use subspace::Subspace;
