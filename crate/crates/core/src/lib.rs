//! Exact computations over GF(p) for split basic algebras.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub use linalg::{CoordBasis, Field, Mat, Quotient, Rref, SparseMat, Subspace};
pub mod algebra;
pub use algebra::{Algebra, QuiverPresentation};
pub mod catalog;
pub mod module;
pub use module::{Module, ModuleMap};
pub mod bimodule;
pub use bimodule::Bimodule;
pub mod homology;
pub mod semcheck;
pub mod transfer;
