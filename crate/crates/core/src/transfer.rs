//! Transfer maps on Hochschild chains induced by bimodules that are
//! finitely generated projective on the right.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::{dual_basis, tensor_over, Bimodule, DualBasis};
use crate::error::{Error, Result};
use crate::homology::{bar_complex, HomologyBasis};
use crate::linalg::{Field, Mat};

/// A transfer `C_n(A) → C_n(B)` and the map it induces on `HH_n`.
#[derive(Clone, Debug)]
pub struct TransferMap {
    pub degree: usize,
    /// `dim C_n(A) × dim C_n(B)`.
    pub chain: Mat,
    /// `dim HH_n(A) × dim HH_n(B)` in the bases of [`HomologyBasis::reps`].
    pub induced: Mat,
    pub source: HomologyBasis,
    pub target: HomologyBasis,
}

/// `φ(a_i)[s][t] = f_s(a_i·m_t)` as coordinate vectors in `B`.
fn phi_table(m: &Bimodule, db: &DualBasis) -> Vec<Vec<Vec<Vec<u32>>>> {
    let k = db.len();
    m.left_actions()
        .iter()
        .map(|l| {
            (0..k)
                .map(|s| {
                    (0..k)
                        .map(|t| db.functionals[s].vec_mul(&l.vec_mul(db.elements.row(t))))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn outer_into(f: Field, acc: &mut [u32], x: &[u32], y: &[u32]) {
    let n = y.len();
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            if b != 0 {
                let e = &mut acc[i * n + j];
                *e = f.add(*e, f.mul(a, b));
            }
        }
    }
}

/// `a_0 ⊗ … ⊗ a_n ↦ Σ φ(a_0)[t_0,t_1] ⊗ φ(a_1)[t_1,t_2] ⊗ … ⊗ φ(a_n)[t_n,t_0]`.
pub fn transfer_chain_with(m: &Bimodule, db: &DualBasis, n: usize) -> Mat {
    let f = m.field();
    let (da, dbm) = (m.left().dim(), m.right().dim());
    let k = db.len();
    let phi = phi_table(m, db);
    let rows = da.pow(n as u32 + 1);
    let cols = dbm.pow(n as u32 + 1);
    let mut out = Mat::zeros(f, rows, cols);
    let mut digits = vec![0usize; n + 1];
    for r in 0..rows {
        let mut rest = r;
        for j in (0..=n).rev() {
            digits[j] = rest % da;
            rest /= da;
        }
        let row = out.row_mut(r);
        for t0 in 0..k {
            // states[t] = sum over paths t_0 → … → t of the partial tensor
            let mut states: Vec<Vec<u32>> = phi[digits[0]][t0].clone();
            for &dj in &digits[1..] {
                let width = states[0].len() * dbm;
                let mut next = vec![vec![0u32; width]; k];
                for (t, st) in states.iter().enumerate() {
                    if st.iter().all(|&x| x == 0) {
                        continue;
                    }
                    for (u, nx) in next.iter_mut().enumerate() {
                        outer_into(f, nx, st, &phi[dj][t][u]);
                    }
                }
                states = next;
            }
            // the path closes at t_0
            for (c, &x) in states[t0].iter().enumerate() {
                row[c] = f.add(row[c], x);
            }
        }
    }
    out
}

/// The chain-level transfer from the dual basis read off the cover of `M_B`.
pub fn transfer_chain(m: &Bimodule, n: usize) -> Result<Mat> {
    let db = dual_basis(m)?;
    Ok(transfer_chain_with(m, &db, n))
}

/// `b_B ∘ t = t ∘ b_A` from degree `n` to `n - 1`.
pub fn is_chain_map(m: &Bimodule, db: &DualBasis, n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let ca = bar_complex(m.left(), n - 1)?;
    let cb = bar_complex(m.right(), n - 1)?;
    let lhs = ca.boundaries[n]
        .to_dense()
        .mul(&transfer_chain_with(m, db, n - 1));
    let rhs = transfer_chain_with(m, db, n).mul(&cb.boundaries[n].to_dense());
    Ok(lhs == rhs)
}

pub(crate) fn homology_basis(a: &Algebra, n: usize) -> Result<HomologyBasis> {
    let c = bar_complex(a, n)?;
    Ok(HomologyBasis::new(
        &c.boundaries[n].to_dense(),
        &c.boundaries[n + 1].to_dense(),
    ))
}

pub fn transfer_hh_with(m: &Bimodule, db: &DualBasis, n: usize) -> Result<TransferMap> {
    let source = homology_basis(m.left(), n)?;
    let target = homology_basis(m.right(), n)?;
    let chain = transfer_chain_with(m, db, n);
    let images = source.reps().mul(&chain);
    let mut rows = Vec::with_capacity(source.dim());
    for i in 0..images.rows() {
        let c = target.class(images.row(i)).ok_or_else(|| {
            Error::Other(format!("transfer of a degree-{n} cycle is not a cycle"))
        })?;
        rows.push(c);
    }
    let induced = Mat::from_rows(m.field(), target.dim(), &rows);
    Ok(TransferMap {
        degree: n,
        chain,
        induced,
        source,
        target,
    })
}

pub fn transfer_hh(m: &Bimodule, n: usize) -> Result<TransferMap> {
    let db = dual_basis(m)?;
    transfer_hh_with(m, &db, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Composition,
    Additivity,
    Vanishing,
    Identity,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub instance: String,
    pub degree: usize,
    /// Nonzero entries of the difference of the two sides.
    pub deviation: usize,
}

impl AxiomCheck {
    pub fn pass(&self) -> bool {
        self.deviation == 0
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(AxiomCheck::pass)
    }

    pub fn max_deviation(&self) -> usize {
        self.checks.iter().map(|c| c.deviation).max().unwrap_or(0)
    }
}

fn deviation(x: &Mat, y: &Mat) -> usize {
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return usize::MAX;
    }
    x.sub(y).data().iter().filter(|&&v| v != 0).count()
}

/// `t_N ∘ t_M = t_{M ⊗_B N}` on `HH_n`.
pub fn check_composition(m: &Bimodule, n: &Bimodule, degree: usize) -> Result<AxiomCheck> {
    let tm = transfer_hh(m, degree)?;
    let tn = transfer_hh(n, degree)?;
    let mn = tensor_over(m, n)?.bimodule;
    let tmn = transfer_hh(&mn, degree)?;
    Ok(AxiomCheck {
        axiom: Axiom::Composition,
        instance: format!("dims {} and {}", m.dim(), n.dim()),
        degree,
        deviation: deviation(&tm.induced.mul(&tn.induced), &tmn.induced),
    })
}

/// `t_{L ⊕ N} = t_L + t_N` on `HH_n`.
pub fn check_additivity(l: &Bimodule, n: &Bimodule, degree: usize) -> Result<AxiomCheck> {
    let sum = Bimodule::direct_sum(&[l.clone(), n.clone()])?;
    let ts = transfer_hh(&sum, degree)?;
    let tl = transfer_hh(l, degree)?;
    let tn = transfer_hh(n, degree)?;
    Ok(AxiomCheck {
        axiom: Axiom::Additivity,
        instance: format!("dims {} and {}", l.dim(), n.dim()),
        degree,
        deviation: deviation(&ts.induced, &tl.induced.add(&tn.induced)),
    })
}

/// `t_{A e_i ⊗ e_j B} = 0` on `HH_n`, `n ≥ 1`.
pub fn check_vanishing(
    a: &Algebra,
    i: usize,
    b: &Algebra,
    j: usize,
    degree: usize,
) -> Result<AxiomCheck> {
    let p = Bimodule::projective(a, i, b, j)?;
    let t = transfer_hh(&p, degree)?;
    Ok(AxiomCheck {
        axiom: Axiom::Vanishing,
        instance: format!("A e{} ⊗ e{} B", i + 1, j + 1),
        degree,
        deviation: t.induced.data().iter().filter(|&&v| v != 0).count(),
    })
}

/// `t_A = id` on `HH_n`.
pub fn check_identity(a: &Algebra, degree: usize) -> Result<AxiomCheck> {
    let t = transfer_hh(&Bimodule::regular(a), degree)?;
    let id = Mat::identity(a.field(), t.induced.rows());
    Ok(AxiomCheck {
        axiom: Axiom::Identity,
        instance: format!("regular, dim {}", a.dim()),
        degree,
        deviation: deviation(&t.induced, &id),
    })
}

/// A seeded random bimodule, projective on both sides: a sum of
/// `A e_i ⊗ e_j B`, optionally with a copy of the regular bimodule.
pub fn random_projective_bimodule<R: Rng>(
    a: &Algebra,
    b: &Algebra,
    rng: &mut R,
) -> Result<Bimodule> {
    let (ra, rb) = (a.num_idempotents(), b.num_idempotents());
    let count = rng.gen_range(1..=2);
    let mut parts = Vec::with_capacity(count + 1);
    if a == b && rng.gen_bool(0.5) {
        parts.push(Bimodule::regular(a));
    }
    for _ in 0..count {
        parts.push(Bimodule::projective(
            a,
            rng.gen_range(0..ra),
            b,
            rng.gen_range(0..rb),
        )?);
    }
    Bimodule::direct_sum(&parts)
}

/// Runs all four identities over a suite of right-projective bimodules in
/// degrees `1..=n_max` (identity also in degree 0).
pub fn check_transfer_axioms(suite: &[Bimodule], n_max: usize, seed: u64) -> Result<AxiomReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport::default();
    let mut algebras: Vec<Algebra> = Vec::new();
    for m in suite {
        for x in [m.left(), m.right()] {
            if !algebras.contains(x) {
                algebras.push(x.clone());
            }
        }
    }
    for a in &algebras {
        for n in 0..=n_max {
            report.checks.push(check_identity(a, n)?);
        }
    }
    for m in suite {
        let (a, b) = (m.left(), m.right());
        for n in 1..=n_max {
            for i in 0..a.num_idempotents() {
                for j in 0..b.num_idempotents() {
                    report.checks.push(check_vanishing(a, i, b, j, n)?);
                }
            }
            let l = random_projective_bimodule(a, b, &mut rng)?;
            report.checks.push(check_additivity(m, &l, n)?);
        }
        for other in suite {
            if m.right() == other.left() {
                for n in 1..=n_max {
                    report.checks.push(check_composition(m, other, n)?);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dual_numbers, remark14, scaling_automorphism};
    use crate::module::hom_space;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn unit_dual_basis_gives_identity_chain_map() {
        let a = remark14(gf(3));
        let reg = Bimodule::regular(&a);
        let db = DualBasis {
            elements: Mat::row_vector(gf(3), a.unit()),
            functionals: vec![Mat::identity(gf(3), a.dim())],
        };
        assert!(db.verify(&reg));
        for n in 0..3 {
            assert!(transfer_chain_with(&reg, &db, n).is_identity());
        }
    }

    #[test]
    fn transfers_are_chain_maps() {
        let a = remark14(gf(5));
        let k = dual_numbers(gf(5));
        let cases = vec![
            Bimodule::regular(&a),
            Bimodule::projective(&a, 0, &a, 1).unwrap(),
            Bimodule::twist(&k, &scaling_automorphism(&k, 2)),
            Bimodule::projective(&k, 0, &a, 0).unwrap(),
        ];
        for m in &cases {
            let db = dual_basis(m).unwrap();
            for n in 1..=3 {
                assert!(is_chain_map(m, &db, n).unwrap(), "{m:?} degree {n}");
            }
        }
    }

    #[test]
    fn twist_transfers_are_mutually_inverse() {
        let k = dual_numbers(gf(5));
        let m = Bimodule::twist(&k, &scaling_automorphism(&k, 2));
        let n = Bimodule::twist(&k, &scaling_automorphism(&k, 3));
        for d in 1..=3 {
            let tm = transfer_hh(&m, d).unwrap();
            let tn = transfer_hh(&n, d).unwrap();
            assert!(tm.induced.mul(&tn.induced).is_identity());
            assert!(tn.induced.mul(&tm.induced).is_identity());
        }
    }

    #[test]
    fn homology_map_is_independent_of_dual_basis() {
        let a = remark14(gf(5));
        let m = Bimodule::direct_sum(&[
            Bimodule::regular(&a),
            Bimodule::projective(&a, 1, &a, 0).unwrap(),
        ])
        .unwrap();
        let db = dual_basis(&m).unwrap();
        let end = hom_space(&m.restrict_right(), &m.restrict_right()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let theta = loop {
            let c: Vec<u32> = (0..end.dim()).map(|_| rng.gen_range(0..5)).collect();
            let t = end.combine(&c);
            if t.inverse().is_some() {
                break t;
            }
        };
        let moved = db.transformed(&theta).unwrap();
        for n in 0..=2 {
            let x = transfer_hh_with(&m, &db, n).unwrap();
            let y = transfer_hh_with(&m, &moved, n).unwrap();
            assert_eq!(x.induced, y.induced);
        }
    }

    #[test]
    fn axiom_suite_on_small_examples() {
        let k = dual_numbers(gf(5));
        let suite = vec![
            Bimodule::twist(&k, &scaling_automorphism(&k, 2)),
            Bimodule::twist(&k, &scaling_automorphism(&k, 3)),
        ];
        let rep = check_transfer_axioms(&suite, 2, 1).unwrap();
        assert!(
            rep.all_pass(),
            "{:?}",
            rep.checks.iter().filter(|c| !c.pass()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn non_projective_is_rejected() {
        let a = remark14(gf(5));
        let s = Bimodule::from_right_module(&crate::module::Module::simple(&a, 0));
        assert!(transfer_chain(&s, 1).is_err());
    }
}
