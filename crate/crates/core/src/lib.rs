pub mod axioms;
pub mod cli;
pub mod coalg;
pub mod coprime;
pub mod error;
pub mod field;
pub mod linalg;
pub mod modrep;
pub mod random;
pub mod settings;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
pub use settings::Settings;
