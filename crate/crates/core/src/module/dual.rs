use super::{hom_space, Module};
use crate::linalg::Mat;

/// `D(M) = Hom_K(M, K)` as a right module over the opposite algebra:
/// functionals are rows, and `a` acts by `ρ(a)ᵀ`.
pub(super) fn dual(m: &Module) -> Module {
    let op = m.algebra().opposite();
    let action = m.action().iter().map(Mat::transpose).collect();
    Module::from_parts(&op, m.dim(), action)
}

/// `Hom_A(M, A_A)` with `A` acting by post-multiplication on the left,
/// written as a right `A^op`-module.
pub(super) fn hom_to_regular(m: &Module) -> Module {
    let a = m.algebra();
    let op = a.opposite();
    let reg = Module::regular(a);
    let h = hom_space(m, &reg).expect("same algebra");
    let k = h.dim();
    let f = a.field();
    let action = (0..a.dim())
        .map(|i| {
            let l = a.left_mult(i);
            let rows: Vec<Vec<u32>> = h
                .basis
                .iter()
                .map(|g| {
                    h.coords(&g.mul(l))
                        .expect("left multiplication preserves Hom(M, A)")
                })
                .collect();
            Mat::from_rows(f, k, &rows)
        })
        .collect();
    Module::from_parts(&op, k, action)
}

/// `ν(M) = D Hom_A(M, A)`.
pub(super) fn nakayama(m: &Module) -> Module {
    let h = hom_to_regular(m);
    let a = m.algebra();
    let action = h.action().iter().map(Mat::transpose).collect();
    Module::from_parts(a, h.dim(), action)
}
