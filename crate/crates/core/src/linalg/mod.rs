//! Exact linear algebra over prime fields.

mod field;
mod mat;
mod sparse;
mod subspace;

pub use field::Field;
pub use mat::{Mat, Rref};
pub use sparse::SparseMat;
pub use subspace::{CoordBasis, Quotient, Subspace};

/// Left (row-convention) kernel: rows spanning `{v : v·m = 0}`.
pub fn kernel_basis(m: &Mat) -> Mat {
    m.kernel_basis()
}

pub fn rref(m: &Mat) -> Rref {
    m.rref()
}

pub fn solve(a: &Mat, b: &Mat) -> crate::Result<Option<Mat>> {
    a.solve(b)
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kron(b)
}
