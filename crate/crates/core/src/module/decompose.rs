use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{hom_space, is_isomorphic, IsoVerdict, Module};
use crate::error::Result;
use crate::linalg::{Mat, Subspace};

/// Why a summand was declared indecomposable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SummandCertificate {
    /// `M/MJ` is simple, so `M` is local.
    SimpleTop,
    /// `End(M) = K·1 ⊕ R` with `R` nilpotent.
    LocalEndomorphismRing,
    /// Every endomorphism was checked for idempotence.
    Exhaustive,
    /// No splitting endomorphism among random samples.
    Probabilistic { trials: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Exhaustive,
    Probabilistic { trials: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    /// `dim(summand) × dim(M)`, a split mono.
    pub embedding: Mat,
    /// `dim(M) × dim(summand)`, with `embedding·projection = I`.
    pub projection: Mat,
    pub certificate: SummandCertificate,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    /// `(index of a representative summand, multiplicity)`.
    pub classes: Vec<(usize, usize)>,
    /// Pairs of summands whose isomorphism could not be settled.
    pub unresolved: usize,
    pub certificate: Certificate,
}

impl DecompositionReport {
    /// `Σ projection_k·embedding_k = I` and `embedding_k·projection_l = δ_kl`.
    pub fn verify(&self, m: &Module) -> bool {
        let f = m.field();
        let mut sum = Mat::zeros(f, m.dim(), m.dim());
        for (k, s) in self.summands.iter().enumerate() {
            if !super::intertwines(&s.module, m, &s.embedding)
                || !super::intertwines(m, &s.module, &s.projection)
            {
                return false;
            }
            sum = sum.add(&s.projection.mul(&s.embedding));
            for (l, t) in self.summands.iter().enumerate() {
                let c = s.embedding.mul(&t.projection);
                let ok = if k == l { c.is_identity() } else { c.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        sum.is_identity()
    }

    pub fn multiplicities(&self) -> Vec<(Module, usize)> {
        self.classes
            .iter()
            .map(|&(i, n)| (self.summands[i].module.clone(), n))
            .collect()
    }
}

/// Enumeration of all of `End(M)` is allowed when `p^dim End ≤ 2^20` and the
/// total work stays below this many field operations.
const EXHAUSTIVE_WORK: u128 = 1 << 30;

pub fn decompose(m: &Module, trials: usize, seed: u64) -> Result<DecompositionReport> {
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![(
        m.clone(),
        Mat::identity(f, m.dim()),
        Mat::identity(f, m.dim()),
    )];
    let mut done: Vec<Summand> = Vec::new();
    while let Some((x, emb, proj)) = pending.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x, trials, seed, &mut rng)? {
            Split::Indecomposable(certificate) => done.push(Summand {
                module: x,
                embedding: emb,
                projection: proj,
                certificate,
            }),
            Split::Parts(parts) => {
                for (sub, sub_emb, sub_proj) in parts {
                    pending.push((sub, sub_emb.mul(&emb), proj.mul(&sub_proj)));
                }
            }
        }
    }
    // deterministic order: by dimension, then by top
    done.sort_by_key(|s| (s.module.dim(), s.module.top_multiplicities()));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut unresolved = 0;
    for (i, s) in done.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = &done[class.0].module;
            match is_isomorphic(rep, &s.module, trials, seed)? {
                IsoVerdict::Yes(_) => {
                    class.1 += 1;
                    placed = true;
                    break;
                }
                IsoVerdict::Undecided { .. } => unresolved += 1,
                IsoVerdict::No(_) => {}
            }
        }
        if !placed {
            classes.push((i, 1));
        }
    }
    let certificate = if done
        .iter()
        .all(|s| !matches!(s.certificate, SummandCertificate::Probabilistic { .. }))
    {
        Certificate::Exhaustive
    } else {
        Certificate::Probabilistic { trials, seed }
    };
    Ok(DecompositionReport {
        summands: done,
        classes,
        unresolved,
        certificate,
    })
}

enum Split {
    Indecomposable(SummandCertificate),
    /// `(summand, embedding into x, projection from x)`.
    Parts(Vec<(Module, Mat, Mat)>),
}

fn split_once(x: &Module, trials: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Split> {
    if x.top_dim() <= 1 {
        return Ok(Split::Indecomposable(SummandCertificate::SimpleTop));
    }
    let end = hom_space(x, x)?;
    let p = x.field().p();
    let lambdas = eigen_candidates(x);
    for phi in &end.basis {
        if let Some(parts) = try_fitting(x, phi, &lambdas) {
            return Ok(Split::Parts(parts));
        }
    }
    if is_local(&end.basis, &lambdas) {
        return Ok(Split::Indecomposable(
            SummandCertificate::LocalEndomorphismRing,
        ));
    }
    let k = end.dim() as u32;
    let n = x.dim() as u128;
    let count = (p as u128).checked_pow(k).filter(|&c| c <= 1 << 20);
    if let Some(count) = count.filter(|&c| c * (k as u128 * n * n + n * n * n) <= EXHAUSTIVE_WORK) {
        let mut c = vec![0u32; k as usize];
        for mut t in 0..count {
            for ci in c.iter_mut() {
                *ci = (t % p as u128) as u32;
                t /= p as u128;
            }
            let e = end.combine(&c);
            if !e.is_zero() && !e.is_identity() && e.mul(&e) == e {
                return Ok(Split::Parts(
                    fitting_parts(x, &e).expect("nontrivial idempotent"),
                ));
            }
        }
        return Ok(Split::Indecomposable(SummandCertificate::Exhaustive));
    }
    for _ in 0..trials {
        let c: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let phi = end.combine(&c);
        if let Some(parts) = try_fitting(x, &phi, &lambdas) {
            return Ok(Split::Parts(parts));
        }
    }
    Ok(Split::Indecomposable(SummandCertificate::Probabilistic {
        trials,
        seed,
    }))
}

fn eigen_candidates(x: &Module) -> Vec<u32> {
    let p = x.field().p();
    if p <= 64 {
        (0..p).collect()
    } else {
        vec![0, 1]
    }
}

fn shift(phi: &Mat, lambda: u32) -> Mat {
    let f = phi.field();
    phi.sub(&Mat::identity(f, phi.rows()).scale(lambda))
}

fn stable_power(phi: &Mat) -> Mat {
    let n = phi.rows().max(1) as u64;
    phi.pow(n.next_power_of_two())
}

fn try_fitting(x: &Module, phi: &Mat, lambdas: &[u32]) -> Option<Vec<(Module, Mat, Mat)>> {
    for &l in lambdas {
        let psi = stable_power(&shift(phi, l));
        if let Some(parts) = fitting_parts(x, &psi) {
            return Some(parts);
        }
    }
    None
}

/// Splits `x = ker ψ ⊕ im ψ` for an endomorphism with `ψ` and `ψ²` of equal rank.
fn fitting_parts(x: &Module, psi: &Mat) -> Option<Vec<(Module, Mat, Mat)>> {
    let n = x.dim();
    let image = Subspace::span(psi);
    if image.dim() == 0 || image.dim() == n {
        return None;
    }
    let kernel = Subspace::span(&psi.kernel_basis());
    let stacked = kernel.basis().vstack(image.basis());
    let inv = stacked.inverse()?;
    let k = kernel.dim();
    let mut out = Vec::with_capacity(2);
    for (sub, range) in [(kernel, 0..k), (image, k..n)] {
        let module = x.submodule(&sub);
        let proj = inv.submatrix(0..n, range);
        out.push((module, sub.basis().clone(), proj));
    }
    Some(out)
}

/// `End = K·1 + span{φ - λ_φ}` with the span a nilpotent ideal.
fn is_local(basis: &[Mat], lambdas: &[u32]) -> bool {
    let Some(first) = basis.first() else {
        return false;
    };
    let f = first.field();
    let n = first.rows();
    // too large to tabulate products: inconclusive
    if (basis.len() * basis.len()) as u128 * (n * n) as u128 > crate::module::hom::HOM_SYSTEM_CAP {
        return false;
    }
    let nilpotent = |m: &Mat| stable_power(m).is_zero();
    let mut rad = Vec::with_capacity(basis.len());
    for phi in basis {
        let Some(r) = lambdas
            .iter()
            .map(|&l| shift(phi, l))
            .find(|r| nilpotent(r))
        else {
            return false;
        };
        rad.push(r);
    }
    let flat = |m: &Mat| m.data().to_vec();
    let rspan = Subspace::span(&Mat::from_rows(
        f,
        n * n,
        &rad.iter().map(flat).collect::<Vec<_>>(),
    ));
    // K·1 + R must be all of End
    let mut with_one = rspan.clone();
    with_one.insert(Mat::identity(f, n).data());
    if with_one.dim() < basis.len() {
        return false;
    }
    // R closed under products and nilpotent
    let mut power = rspan.clone();
    for _ in 0..=n {
        if power.dim() == 0 {
            return true;
        }
        let mut rows = Vec::new();
        for i in 0..power.dim() {
            let a = Mat::from_vec(f, n, n, power.basis().row(i).to_vec());
            for r in &rad {
                let prod = a.mul(r);
                if !rspan.contains(prod.data()) {
                    return false;
                }
                rows.push(flat(&prod));
            }
        }
        power = Subspace::span(&Mat::from_rows(f, n * n, &rows));
    }
    power.dim() == 0
}
