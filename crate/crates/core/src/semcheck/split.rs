use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::module::{hom_space, intertwines, HomSpace, Module};

/// `s: A → T` and `r: T → A` with `s` followed by `r` the identity.
#[derive(Clone, Debug, Serialize)]
pub struct Splitting {
    pub s: Mat,
    pub r: Mat,
}

impl Splitting {
    pub fn verify(&self, t: &Bimodule) -> bool {
        let a = t.left();
        let reg = Bimodule::regular(a);
        let (ra, rt) = (reg.module(), t.module());
        reg.module().algebra() == t.module().algebra()
            && intertwines(ra, rt, &self.s)
            && intertwines(rt, ra, &self.r)
            && self.s.mul(&self.r).is_identity()
    }
}

#[derive(Clone, Debug)]
pub struct SplitResult {
    pub splitting: Option<Splitting>,
    /// `ker r`, the complement of the regular summand.
    pub complement: Option<Bimodule>,
    pub candidates_tried: usize,
}

impl SplitResult {
    pub fn found(&self) -> bool {
        self.splitting.is_some()
    }
}

/// Solves `Σ c_l·(fixed·basis_l)` (or `basis_l·fixed`) `= I` for `c`.
fn complete(fixed: &Mat, other: &HomSpace, fixed_first: bool) -> Option<Mat> {
    let f = fixed.field();
    let prods: Vec<Mat> = other
        .basis
        .iter()
        .map(|b| {
            if fixed_first {
                fixed.mul(b)
            } else {
                b.mul(fixed)
            }
        })
        .collect();
    let n = prods.first()?.rows();
    let rows: Vec<Vec<u32>> = prods.iter().map(|p| p.data().to_vec()).collect();
    let sys = Mat::from_rows(f, n * n, &rows);
    let target = Mat::row_vector(f, Mat::identity(f, n).data());
    let c = sys.solve(&target).ok()??;
    Some(other.combine(c.row(0)))
}

fn complement_of(t: &Bimodule, r: &Mat) -> Result<Bimodule> {
    let ker = Subspace::span(&r.kernel_basis());
    let sub: Module = t.module().submodule(&ker);
    Bimodule::from_module(t.left(), t.right(), sub)
}

/// Searches for a split embedding of the regular bimodule into `T`.
pub fn split_off_regular(
    t: &Bimodule,
    hint: Option<&Splitting>,
    trials: usize,
    seed: u64,
) -> Result<SplitResult> {
    if t.left() != t.right() {
        return Err(Error::AlgebraMismatch(
            "split_off_regular needs an A–A bimodule",
        ));
    }
    if let Some(h) = hint {
        if h.verify(t) {
            return Ok(SplitResult {
                splitting: Some(h.clone()),
                complement: Some(complement_of(t, &h.r)?),
                candidates_tried: 0,
            });
        }
    }
    let reg = Bimodule::regular(t.left());
    let into = hom_space(reg.module(), t.module())?;
    let out = hom_space(t.module(), reg.module())?;
    let mut tried = 0;
    let none = |tried| SplitResult {
        splitting: None,
        complement: None,
        candidates_tried: tried,
    };
    if into.dim() == 0 || out.dim() == 0 {
        return Ok(none(0));
    }
    let p = t.field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<(bool, Mat)> = Vec::new();
    candidates.extend(into.basis.iter().map(|s| (true, s.clone())));
    candidates.extend(out.basis.iter().map(|r| (false, r.clone())));
    for k in 0..trials {
        let side = k % 2 == 0;
        let space = if side { &into } else { &out };
        let c: Vec<u32> = (0..space.dim()).map(|_| rng.gen_range(0..p)).collect();
        candidates.push((side, space.combine(&c)));
    }
    for (is_s, x) in candidates {
        tried += 1;
        let split = if is_s {
            complete(&x, &out, true).map(|r| Splitting { s: x, r })
        } else {
            complete(&x, &into, false).map(|s| Splitting { s, r: x })
        };
        if let Some(sp) = split {
            let complement = complement_of(t, &sp.r)?;
            return Ok(SplitResult {
                splitting: Some(sp),
                complement: Some(complement),
                candidates_tried: tried,
            });
        }
    }
    Ok(none(tried))
}
