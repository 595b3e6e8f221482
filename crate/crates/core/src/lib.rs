pub mod affine;
pub mod algebra;
pub mod catalog;
pub mod error;
pub mod families;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod probe;
pub mod radicals;
pub mod report;
pub mod rng;
pub mod simplicity;
pub mod verify;

pub use algebra::{Algebra, Identity, IdentityProfile, OperatorForms};
pub use error::{Error, Result};
pub use linalg::{FieldTag, Gaussian, Matrix, Polynomial, Rational, Scalar, Subspace, Vector};

pub type RationalAlgebra = Algebra<Rational>;
pub type GaussianAlgebra = Algebra<Gaussian>;
