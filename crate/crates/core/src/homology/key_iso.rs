use serde::Serialize;

use super::complex::{hochschild_complex, Complex};
use crate::algebra::Algebra;
use crate::bimodule::{tensor_over, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Quotient, SparseMat, Subspace};

/// Largest `N ⊗ A^{⊗n} ⊗ M` the coinvariant side will build.
pub const KEY_ISO_DIM_CAP: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyIsoRow {
    pub degree: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub lhs_homology: usize,
    pub rhs_homology: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KeyIsoReport {
    pub rows: Vec<KeyIsoRow>,
    pub agree: bool,
}

/// Compares `(M ⊗_B N) ⊗_{A^e} Bar(A)` with the `B`-coinvariants of
/// `N ⊗_A Bar(A) ⊗_A M`, degreewise and in homology, for `n = 0..=n_max`.
pub fn key_isomorphism(m: &Bimodule, n: &Bimodule, n_max: usize) -> Result<KeyIsoReport> {
    if m.right() != n.left() || n.right() != m.left() {
        return Err(Error::AlgebraMismatch("expected an A–B and a B–A bimodule"));
    }
    let t = tensor_over(m, n)?.bimodule;
    let lhs = hochschild_complex(&t, n_max)?;
    let rhs = coinvariant_complex(m, n, n_max)?;
    let (lh, rh) = (lhs.homology_dims(), rhs.homology_dims());
    let rows: Vec<KeyIsoRow> = (0..=n_max)
        .map(|k| KeyIsoRow {
            degree: k,
            lhs_dim: lhs.dims[k],
            rhs_dim: rhs.dims[k],
            lhs_homology: lh[k],
            rhs_homology: rh[k],
        })
        .collect();
    let agree = rows
        .iter()
        .all(|r| r.lhs_dim == r.rhs_dim && r.lhs_homology == r.rhs_homology);
    Ok(KeyIsoReport { rows, agree })
}

fn coinvariant_complex(m: &Bimodule, n: &Bimodule, n_max: usize) -> Result<Complex> {
    let a = m.left();
    let f = a.field();
    let d = a.dim();
    let (nd, md) = (n.dim(), m.dim());
    let rho_n = n.right_actions();
    let lambda_m = m.left_actions();
    let gens = m.right().generators();
    let lam_nb: Vec<Mat> = gens.iter().map(|g| n.left_act(g)).collect();
    let rho_mb: Vec<Mat> = gens.iter().map(|g| m.right_act(g)).collect();
    let wdim = |k: usize| nd * d.pow(k as u32) * md;
    if wdim(n_max + 1) > KEY_ISO_DIM_CAP {
        return Err(Error::SizeCap {
            what: "coinvariant complex".into(),
            needed: wdim(n_max + 1) as u128,
            cap: KEY_ISO_DIM_CAP as u128,
            hint: "lower the degree bound",
        });
    }
    let mut quotients: Vec<Quotient> = Vec::with_capacity(n_max + 2);
    let mut dims = Vec::with_capacity(n_max + 2);
    let mut boundaries = Vec::with_capacity(n_max + 2);
    for k in 0..=n_max + 1 {
        let w = wdim(k);
        let mid = d.pow(k as u32);
        // b·y ⊗ v ⊗ z − y ⊗ v ⊗ z·b
        let mut rel = Subspace::zero(f, w);
        let mut v = vec![0u32; w];
        'outer: for (ln, rm) in lam_nb.iter().zip(&rho_mb) {
            for y in 0..nd {
                for s in 0..mid {
                    for z in 0..md {
                        if rel.is_full() {
                            break 'outer;
                        }
                        v.iter_mut().for_each(|x| *x = 0);
                        for (y2, &c) in ln.row(y).iter().enumerate() {
                            if c != 0 {
                                let i = (y2 * mid + s) * md + z;
                                v[i] = f.add(v[i], c);
                            }
                        }
                        for (z2, &c) in rm.row(z).iter().enumerate() {
                            if c != 0 {
                                let i = (y * mid + s) * md + z2;
                                v[i] = f.sub(v[i], c);
                            }
                        }
                        rel.insert(&v);
                    }
                }
            }
        }
        let q = Quotient::new(rel);
        dims.push(q.dim());
        if k == 0 {
            boundaries.push(SparseMat::new(f, q.dim(), 0));
        } else {
            let dk = w_boundary(&rho_n, &lambda_m, a, nd, md, k);
            let induced = q.induced_into(&dk, &quotients[k - 1]);
            boundaries.push(SparseMat::from_dense(&induced));
        }
        quotients.push(q);
    }
    Ok(Complex { dims, boundaries })
}

/// Boundary of `N ⊗ A^{⊗k} ⊗ M`, indexed `(y·d^k + a_1…a_k)·dim M + z`.
fn w_boundary(rho_n: &[Mat], lambda_m: &[Mat], a: &Algebra, nd: usize, md: usize, k: usize) -> Mat {
    let f = a.field();
    let d = a.dim();
    let mid = d.pow(k as u32);
    let prev = mid / d;
    let mut out = Mat::zeros(f, nd * mid * md, nd * prev * md);
    let mut digits = vec![0usize; k];
    for y in 0..nd {
        for s in 0..mid {
            let mut rest = s;
            for j in (0..k).rev() {
                digits[j] = rest % d;
                rest /= d;
            }
            for z in 0..md {
                let r = (y * mid + s) * md + z;
                let row = out.row_mut(r);
                let tail: usize = digits[1..].iter().fold(0, |acc, &x| acc * d + x);
                for (y2, &c) in rho_n[digits[0]].row(y).iter().enumerate() {
                    if c != 0 {
                        let i = (y2 * prev + tail) * md + z;
                        row[i] = f.add(row[i], c);
                    }
                }
                for i in 0..k - 1 {
                    let sign = f.sign(i + 1);
                    for &(p, c) in a.product(digits[i], digits[i + 1]) {
                        let mut idx = 0;
                        for (j, &dj) in digits.iter().enumerate() {
                            if j == i + 1 {
                                continue;
                            }
                            idx = idx * d + if j == i { p as usize } else { dj };
                        }
                        let col = (y * prev + idx) * md + z;
                        row[col] = f.add(row[col], f.mul(sign, c));
                    }
                }
                let head: usize = digits[..k - 1].iter().fold(0, |acc, &x| acc * d + x);
                let sign = f.sign(k);
                for (z2, &c) in lambda_m[digits[k - 1]].row(z).iter().enumerate() {
                    if c != 0 {
                        let col = (y * prev + head) * md + z2;
                        row[col] = f.add(row[col], f.mul(sign, c));
                    }
                }
            }
        }
    }
    out
}
