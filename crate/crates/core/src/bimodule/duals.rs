use super::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Quotient, Subspace};
use crate::module::{hom_space, intertwines, HomSpace, Module};

fn coords_all(h: &HomSpace, maps: impl Iterator<Item = Mat>) -> Mat {
    let f = h.source.field();
    let rows: Vec<Vec<u32>> = maps
        .map(|m| h.coords(&m).expect("action preserves the hom space"))
        .collect();
    Mat::from_rows(f, h.dim(), &rows)
}

/// Matrix of `φ ↦ op(φ)` on a hom space.
fn act_on(h: &HomSpace, op: impl Fn(&Mat) -> Mat) -> Mat {
    coords_all(h, h.basis.iter().map(op))
}

/// `Hom_{A^op}(M, A)` for an `A`–`B` bimodule `M`, as a `B`–`A` bimodule.
pub fn hom_dual_left(m: &Bimodule) -> Result<Bimodule> {
    let a = m.left();
    let op = a.opposite();
    let h = hom_space(&m.restrict_left(), &Module::regular(&op))?;
    let lambda: Vec<Mat> = m
        .right_actions()
        .iter()
        .map(|r| act_on(&h, |phi| r.mul(phi)))
        .collect();
    let rho: Vec<Mat> = a
        .right_mults()
        .iter()
        .map(|r| act_on(&h, |phi| phi.mul(r)))
        .collect();
    Bimodule::from_actions(m.right(), a, h.dim(), &lambda, &rho)
}

/// `Hom_B(M, B)` for an `A`–`B` bimodule `M`, as a `B`–`A` bimodule.
pub fn hom_dual_right(m: &Bimodule) -> Result<Bimodule> {
    let b = m.right();
    let h = hom_space(&m.restrict_right(), &Module::regular(b))?;
    let lambda: Vec<Mat> = b
        .left_mults()
        .iter()
        .map(|l| act_on(&h, |phi| phi.mul(l)))
        .collect();
    let rho: Vec<Mat> = m
        .left_actions()
        .iter()
        .map(|l| act_on(&h, |phi| l.mul(phi)))
        .collect();
    Bimodule::from_actions(b, m.left(), h.dim(), &lambda, &rho)
}

/// `η: B → End_A(M)`, `b ↦ (m ↦ m·b)`, and its cokernel.
#[derive(Clone, Debug)]
pub struct UnitMap {
    /// `End_A(M)` as a `B`–`B` bimodule.
    pub end: Bimodule,
    /// `dim B × dim End`, row `j` is `η(b_j)`.
    pub eta: Mat,
    pub kernel_dim: usize,
    pub cokernel: Bimodule,
    pub cokernel_quotient: Quotient,
}

impl UnitMap {
    pub fn is_injective(&self) -> bool {
        self.kernel_dim == 0
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.cokernel.is_zero()
    }
}

pub fn unit_map(m: &Bimodule) -> Result<UnitMap> {
    let b = m.right();
    let left = m.restrict_left();
    let h = hom_space(&left, &left)?;
    let rhos = m.right_actions();
    let lambda: Vec<Mat> = rhos.iter().map(|r| act_on(&h, |phi| r.mul(phi))).collect();
    let rho: Vec<Mat> = rhos.iter().map(|r| act_on(&h, |phi| phi.mul(r))).collect();
    let end = Bimodule::from_actions(b, b, h.dim(), &lambda, &rho)?;
    let eta = coords_all(&h, rhos.iter().cloned());
    let kernel_dim = b.dim() - eta.rank();
    let image = Subspace::span(&eta);
    let cokernel_quotient = Quotient::new(image);
    let action = end
        .module()
        .action()
        .iter()
        .map(|r| cokernel_quotient.induced(r))
        .collect();
    let cokernel = Bimodule::from_module(
        b,
        b,
        Module::new(end.module().algebra(), cokernel_quotient.dim(), action)?,
    )?;
    Ok(UnitMap {
        end,
        eta,
        kernel_dim,
        cokernel,
        cokernel_quotient,
    })
}

/// `Σ_f im f` over `f ∈ Hom_C(X, C)`, as a subspace of `C`.
pub fn trace_ideal(x: &Module) -> Result<Subspace> {
    let c = x.algebra();
    let h = hom_space(x, &Module::regular(c))?;
    let parts: Vec<Mat> = h.basis;
    Ok(Subspace::span(&Mat::vstack_all(c.field(), c.dim(), &parts)))
}

/// Projective with trace ideal the whole algebra.
pub fn is_progenerator(x: &Module) -> Result<bool> {
    if x.is_zero() || !x.is_projective() {
        return Ok(false);
    }
    Ok(trace_ideal(x)?.is_full())
}

/// Elements `m_t` and right-linear functionals `f_t: M → B` with
/// `Σ_t m_t·f_t(x) = x`.
#[derive(Clone, Debug)]
pub struct DualBasis {
    /// One element per row.
    pub elements: Mat,
    /// `dim M × dim B` each.
    pub functionals: Vec<Mat>,
}

impl DualBasis {
    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    /// Right linearity of each `f_t` and the reconstruction identity.
    pub fn verify(&self, m: &Bimodule) -> bool {
        let b = m.right();
        let f = m.field();
        let mr = m.restrict_right();
        let reg = Module::regular(b);
        if self.elements.rows() != self.len() || self.elements.cols() != m.dim() {
            return false;
        }
        if !self.functionals.iter().all(|ft| intertwines(&mr, &reg, ft)) {
            return false;
        }
        let rhos = m.right_actions();
        let mut total = Mat::zeros(f, m.dim(), m.dim());
        for (t, ft) in self.functionals.iter().enumerate() {
            // row x: m_t·ρ(f_t(x)) = Σ_k f_t(x)_k (m_t·ρ(b_k))
            let mk = Mat::from_rows(
                f,
                m.dim(),
                &rhos
                    .iter()
                    .map(|r| r.vec_mul(self.elements.row(t)))
                    .collect::<Vec<_>>(),
            );
            total = total.add(&ft.mul(&mk));
        }
        total.is_identity()
    }

    /// `m'_t = θ(m_t)`, `f'_t = f_t ∘ θ⁻¹` for a right `B`-automorphism `θ`.
    pub fn transformed(&self, theta: &Mat) -> Option<DualBasis> {
        let inv = theta.inverse()?;
        Some(DualBasis {
            elements: self.elements.mul(theta),
            functionals: self.functionals.iter().map(|ft| inv.mul(ft)).collect(),
        })
    }
}

/// A dual basis read off the projective cover of `M_B`.
pub fn dual_basis(m: &Bimodule) -> Result<DualBasis> {
    let mr = m.restrict_right();
    let b = m.right();
    let cover = mr.cover();
    if cover.dim() != mr.dim() {
        return Err(Error::NotProjective {
            what: "bimodule".into(),
            detail: format!(
                "right module of dimension {} has projective cover of dimension {}",
                mr.dim(),
                cover.dim()
            ),
        });
    }
    let sigma = cover.section.clone();
    let mut functionals = Vec::with_capacity(cover.blocks.len());
    for (s, blk) in cover.blocks.iter().enumerate() {
        let u = b.projective(blk.vertex).basis.basis();
        let cols: Vec<usize> = cover.block_range(s).collect();
        functionals.push(sigma.select_cols(&cols).mul(u));
    }
    Ok(DualBasis {
        elements: cover.generators.clone(),
        functionals,
    })
}
