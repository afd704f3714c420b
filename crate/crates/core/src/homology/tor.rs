use serde::{Deserialize, Serialize};

use super::complex::{bar_complex, Complex};
use super::resolution::minimal_resolution;
use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Mat, SparseMat, Subspace};

/// `P_• ⊗_{A^e} A` for the minimal resolution `P_•` of an `A`–`A` bimodule.
///
/// A summand `e_{(i,j)} A^e` of `P_k` contributes `e_j A e_i`; a map of
/// summands given by left multiplication with `x ∈ A^e` becomes
/// `y ↦ x·y` for the left action `(a⊗b)·y = b y a`.
pub fn envelope_tor_complex(x: &Bimodule, n_max: usize) -> Result<Complex> {
    let a = x.left();
    if a != x.right() {
        return Err(Error::AlgebraMismatch(
            "Tor over the envelope needs an A–A bimodule",
        ));
    }
    let f = a.field();
    let d = a.dim();
    let r = a.num_idempotents();
    let env = x.module().algebra().clone();
    let res = minimal_resolution(x.module(), n_max + 1);
    let corners: Vec<Subspace> = (0..r * r)
        .map(|v| {
            let (i, j) = (v / r, v % r);
            let e = a.idempotents();
            Subspace::span(&a.left_mult_vec(&e[j]).mul(&a.right_mult_vec(&e[i])))
        })
        .collect();
    // Λ(a_i ⊗ b_j) = L(b_j)·R(a_i)
    let lambda: Vec<Mat> = (0..d * d)
        .map(|k| a.left_mult(k % d).mul(a.right_mult(k / d)))
        .collect();
    let block_dims = |k: usize| -> Vec<usize> {
        res.covers[k]
            .blocks
            .iter()
            .map(|b| corners[b.vertex].dim())
            .collect()
    };
    let mut dims = Vec::with_capacity(n_max + 2);
    let mut boundaries = Vec::with_capacity(n_max + 2);
    for k in 0..=n_max + 1 {
        if k >= res.len() {
            dims.push(0);
            let prev = if k == 0 {
                0
            } else {
                *dims.get(k - 1).unwrap_or(&0)
            };
            boundaries.push(SparseMat::new(f, 0, prev));
            continue;
        }
        let bd = block_dims(k);
        let total: usize = bd.iter().sum();
        dims.push(total);
        if k == 0 {
            boundaries.push(SparseMat::new(f, total, 0));
            continue;
        }
        let cover = &res.covers[k];
        let prev = &res.covers[k - 1];
        let prev_dims = block_dims(k - 1);
        let prev_offsets: Vec<usize> = prev_dims
            .iter()
            .scan(0, |acc, &x| {
                let o = *acc;
                *acc += x;
                Some(o)
            })
            .collect();
        let dk = &res.differentials[k];
        let mut m = Mat::zeros(f, total, dims[k - 1]);
        let mut row0 = 0;
        for (s, b) in cover.blocks.iter().enumerate() {
            // the top e_{v} of block s, as a vector of P_k
            let pd = env.projective(b.vertex);
            let top = pd
                .basis
                .coords(&env.idempotents()[b.vertex])
                .expect("idempotent lies in its projective");
            let mut g = vec![0u32; cover.dim()];
            g[b.offset..b.offset + b.dim].copy_from_slice(&top);
            let image = dk.vec_mul(&g);
            let ys = corners[b.vertex].basis();
            for (t, pb) in prev.blocks.iter().enumerate() {
                let xt = prev.block_element(&image, t);
                if xt.iter().all(|&c| c == 0) {
                    continue;
                }
                let op = crate::algebra::combine(f, d, &lambda, &xt);
                let img = ys.mul(&op);
                let coords = corners[pb.vertex].coords_mat(&img);
                for i in 0..bd[s] {
                    let dst =
                        &mut m.row_mut(row0 + i)[prev_offsets[t]..prev_offsets[t] + prev_dims[t]];
                    dst.copy_from_slice(coords.row(i));
                }
            }
            row0 += bd[s];
        }
        boundaries.push(SparseMat::from_dense(&m));
    }
    Ok(Complex { dims, boundaries })
}

/// `dim Tor_n^{A^e}(X, A)` for `n = 0..=n_max`.
pub fn tor_envelope(x: &Bimodule, n_max: usize) -> Result<Vec<usize>> {
    Ok(envelope_tor_complex(x, n_max)?.homology_dims())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HHMethod {
    Minimal,
    Bar,
}

impl std::str::FromStr for HHMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal" => Ok(HHMethod::Minimal),
            "bar" => Ok(HHMethod::Bar),
            _ => Err(Error::Other(format!(
                "unknown method {s:?}, expected minimal or bar"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HHTable {
    pub method: HHMethod,
    pub dims: Vec<usize>,
}

/// `dim HH_n(A)` for `n = 0..=n_max`.
pub fn hochschild(a: &Algebra, n_max: usize, method: HHMethod) -> Result<HHTable> {
    let dims = match method {
        HHMethod::Bar => bar_complex(a, n_max)?.homology_dims(),
        HHMethod::Minimal => tor_envelope(&Bimodule::regular(a), n_max)?,
    };
    Ok(HHTable { method, dims })
}
