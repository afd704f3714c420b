use super::Bimodule;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Quotient, Subspace};
use crate::module::Module;

/// `M ⊗_B N` with the quotient map from `M ⊗_K N` (index `r·dim N + s`).
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub bimodule: Bimodule,
    pub quotient: Quotient,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl TensorProduct {
    /// The class of `x ⊗ y`.
    pub fn class(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.quotient.project(&outer(self.bimodule.field(), x, y))
    }

    /// `f ⊗ g` between tensor products, as a matrix on the quotients.
    pub fn induced_map(&self, f: &Mat, g: &Mat, target: &TensorProduct) -> Mat {
        let rows = kron_rows(f, g, self.quotient.free());
        rows.mul(&target.quotient.projection())
    }
}

/// `V ⊗_A M` for a right `A`-module `V`, as a right `B`-module.
#[derive(Clone, Debug)]
pub struct ModuleTensor {
    pub module: Module,
    pub quotient: Quotient,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl ModuleTensor {
    pub fn class(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.quotient.project(&outer(self.module.field(), x, y))
    }

    pub fn induced_map(&self, f: &Mat, g: &Mat, target: &ModuleTensor) -> Mat {
        let rows = kron_rows(f, g, self.quotient.free());
        rows.mul(&target.quotient.projection())
    }
}

fn outer(f: Field, x: &[u32], y: &[u32]) -> Vec<u32> {
    let mut v = Vec::with_capacity(x.len() * y.len());
    for &a in x {
        for &b in y {
            v.push(f.mul(a, b));
        }
    }
    v
}

/// The rows of `a ⊗ b` with the given indices.
pub(crate) fn kron_rows(a: &Mat, b: &Mat, rows: &[usize]) -> Mat {
    let f = a.field();
    let bc = b.cols();
    let cols = a.cols() * bc;
    let mut out = Mat::zeros(f, rows.len(), cols);
    for (k, &r) in rows.iter().enumerate() {
        let (i, j) = (r / b.rows(), r % b.rows());
        let brow = b.row(j);
        let dst = out.row_mut(k);
        for (c, &x) in a.row(i).iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (t, &y) in brow.iter().enumerate() {
                if y != 0 {
                    dst[c * bc + t] = f.mul(x, y);
                }
            }
        }
    }
    out
}

/// Span of `x·g ⊗ y - x ⊗ g·y` over generators `g` of the middle algebra;
/// `right[k]` and `left[k]` are the two actions of the `k`-th generator.
fn balanced_relations(f: Field, m: usize, n: usize, right: &[Mat], left: &[Mat]) -> Subspace {
    let mut sub = Subspace::zero(f, m * n);
    let mut v = vec![0u32; m * n];
    for (rm, ln) in right.iter().zip(left) {
        for r in 0..m {
            for s in 0..n {
                if sub.is_full() {
                    return sub;
                }
                v.iter_mut().for_each(|x| *x = 0);
                for (c, &x) in rm.row(r).iter().enumerate() {
                    if x != 0 {
                        v[c * n + s] = f.add(v[c * n + s], x);
                    }
                }
                for (t, &y) in ln.row(s).iter().enumerate() {
                    if y != 0 {
                        v[r * n + t] = f.sub(v[r * n + t], y);
                    }
                }
                sub.insert(&v);
            }
        }
    }
    sub
}

/// `M ⊗_B N` for an `A`–`B` bimodule `M` and a `B`–`C` bimodule `N`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<TensorProduct> {
    if m.right() != n.left() {
        return Err(Error::AlgebraMismatch("tensor over mismatched algebras"));
    }
    let f = m.field();
    let b = m.right();
    let gens = b.generators();
    let right: Vec<Mat> = gens.iter().map(|g| m.right_act(g)).collect();
    let left: Vec<Mat> = gens.iter().map(|g| n.left_act(g)).collect();
    let (md, nd) = (m.dim(), n.dim());
    let quotient = Quotient::new(balanced_relations(f, md, nd, &right, &left));
    let proj = quotient.projection();
    let id_m = Mat::identity(f, md);
    let id_n = Mat::identity(f, nd);
    let lambda: Vec<Mat> = m
        .left_actions()
        .iter()
        .map(|l| kron_rows(l, &id_n, quotient.free()).mul(&proj))
        .collect();
    let rho: Vec<Mat> = n
        .right_actions()
        .iter()
        .map(|r| kron_rows(&id_m, r, quotient.free()).mul(&proj))
        .collect();
    let bimodule = Bimodule::from_actions(m.left(), n.right(), quotient.dim(), &lambda, &rho)?;
    Ok(TensorProduct {
        bimodule,
        quotient,
        left_dim: md,
        right_dim: nd,
    })
}

/// `V ⊗_A M` for a right `A`-module `V` and an `A`–`B` bimodule `M`.
pub fn apply_tensor_functor(v: &Module, m: &Bimodule) -> Result<ModuleTensor> {
    if v.algebra() != m.left() {
        return Err(Error::AlgebraMismatch(
            "module and bimodule over different algebras",
        ));
    }
    let f = m.field();
    let a: &Algebra = m.left();
    let gens = a.generators();
    let right: Vec<Mat> = gens.iter().map(|g| v.act(g)).collect();
    let left: Vec<Mat> = gens.iter().map(|g| m.left_act(g)).collect();
    let (vd, md) = (v.dim(), m.dim());
    let quotient = Quotient::new(balanced_relations(f, vd, md, &right, &left));
    let proj = quotient.projection();
    let id_v = Mat::identity(f, vd);
    let action = m
        .right_actions()
        .iter()
        .map(|r| kron_rows(&id_v, r, quotient.free()).mul(&proj))
        .collect();
    let module = Module::new(m.right(), quotient.dim(), action)?;
    Ok(ModuleTensor {
        module,
        quotient,
        left_dim: vd,
        right_dim: md,
    })
}
