//! Finite-dimensional right modules given by action matrices.

mod cover;
mod decompose;
mod dual;
mod hom;
mod iso;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

pub use cover::{Block, Cover};
pub use decompose::{decompose, Certificate, DecompositionReport, Summand, SummandCertificate};
pub(crate) use hom::projective_factoring;
pub use hom::{hom_into_projective_sum, hom_space, HomSpace};
pub use iso::{is_isomorphic, IsoVerdict};

use crate::algebra::{combine, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Quotient, Subspace};

/// A right module: `ρ(b_k)` for every basis element `b_k` of the algebra,
/// with `v ↦ v·ρ(a)` the action of `a`.
#[derive(Clone)]
pub struct Module {
    algebra: Algebra,
    dim: usize,
    action: Arc<Vec<Mat>>,
    cover: Arc<OnceLock<Cover>>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {:?})", self.dim, self.algebra)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum ModuleViolation {
    UnitNotIdentity,
    NotMultiplicative { i: usize, j: usize },
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleViolation::UnitNotIdentity => write!(f, "ρ(1) ≠ I"),
            ModuleViolation::NotMultiplicative { i, j } => {
                write!(f, "ρ(b{i})·ρ(b{j}) ≠ ρ(b{i}·b{j})")
            }
        }
    }
}

/// A module homomorphism `source → target`, as a `dim(source) × dim(target)` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Mat,
}

impl ModuleMap {
    pub fn is_homomorphism(&self) -> bool {
        intertwines(&self.source, &self.target, &self.matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `ρ_M(g)·f = f·ρ_N(g)` on algebra generators.
pub fn intertwines(m: &Module, n: &Module, f: &Mat) -> bool {
    if f.rows() != m.dim() || f.cols() != n.dim() {
        return false;
    }
    m.algebra()
        .generators()
        .iter()
        .all(|g| m.act(g).mul(f) == f.mul(&n.act(g)))
}

impl Module {
    /// Checks shapes only; see [`Module::validate`] for the module axioms.
    pub fn new(algebra: &Algebra, dim: usize, action: Vec<Mat>) -> Result<Module> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                op: "module action count",
                expected: algebra.dim(),
                found: action.len(),
            });
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidModule(format!(
                    "action matrix is {}×{}, expected {dim}×{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(m.field().p(), algebra.field().p()));
            }
        }
        Ok(Module::from_parts(algebra, dim, action))
    }

    pub(crate) fn from_parts(algebra: &Algebra, dim: usize, action: Vec<Mat>) -> Module {
        Module {
            algebra: algebra.clone(),
            dim,
            action: Arc::new(action),
            cover: Arc::new(OnceLock::new()),
        }
    }

    pub fn zero(algebra: &Algebra) -> Module {
        let f = algebra.field();
        Module::from_parts(algebra, 0, vec![Mat::zeros(f, 0, 0); algebra.dim()])
    }

    pub fn regular(algebra: &Algebra) -> Module {
        Module::from_parts(algebra, algebra.dim(), algebra.right_mults().to_vec())
    }

    /// `e_i A`.
    pub fn projective(algebra: &Algebra, i: usize) -> Module {
        let p = algebra.projective(i);
        Module::from_parts(algebra, p.dim(), p.action.clone())
    }

    pub fn projectives(algebra: &Algebra) -> Vec<Module> {
        (0..algebra.num_idempotents())
            .map(|i| Module::projective(algebra, i))
            .collect()
    }

    /// The simple top of `e_i A`.
    pub fn simple(algebra: &Algebra, i: usize) -> Module {
        let f = algebra.field();
        let chi = algebra.characters();
        let action = (0..algebra.dim())
            .map(|k| Mat::from_vec(f, 1, 1, vec![chi.get(k, i)]))
            .collect();
        Module::from_parts(algebra, 1, action)
    }

    pub fn simples(algebra: &Algebra) -> Vec<Module> {
        (0..algebra.num_idempotents())
            .map(|i| Module::simple(algebra, i))
            .collect()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn action_of(&self, k: usize) -> &Mat {
        &self.action[k]
    }

    /// `ρ(a)` for an algebra element given in coordinates.
    pub fn act(&self, a: &[u32]) -> Mat {
        combine(self.field(), self.dim, &self.action, a)
    }

    pub fn same_algebra(&self, other: &Module) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch("modules over different algebras"));
        }
        Ok(())
    }

    pub fn validate(&self) -> std::result::Result<(), ModuleViolation> {
        let a = &self.algebra;
        let f = self.field();
        if !self.act(a.unit()).is_identity() {
            return Err(ModuleViolation::UnitNotIdentity);
        }
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Mat::zeros(f, self.dim, self.dim);
                for &(k, c) in a.product(i, j) {
                    rhs.add_scaled(c, &self.action[k as usize]);
                }
                if lhs != rhs {
                    return Err(ModuleViolation::NotMultiplicative { i, j });
                }
            }
        }
        Ok(())
    }

    /// Span of `M·e_i` as a subspace.
    pub fn vertex_space(&self, i: usize) -> Subspace {
        Subspace::span(&self.act(&self.algebra.idempotents()[i]))
    }

    /// `dim M e_i` for each vertex: the composition multiplicities.
    pub fn dimension_vector(&self) -> Vec<usize> {
        (0..self.algebra.num_idempotents())
            .map(|i| self.act(&self.algebra.idempotents()[i]).rank())
            .collect()
    }

    /// `M·J`.
    pub fn radical_submodule(&self) -> Subspace {
        let gens = self.algebra.radical_generators();
        let parts: Vec<Mat> = gens.iter().map(|g| self.act(g)).collect();
        Subspace::span(&Mat::vstack_all(self.field(), self.dim, &parts))
    }

    /// Multiplicities of the simples in `M/MJ`.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let mut out = vec![0; self.algebra.num_idempotents()];
        for b in &self.cover().blocks {
            out[b.vertex] += 1;
        }
        out
    }

    pub fn top_dim(&self) -> usize {
        self.cover().blocks.len()
    }

    pub fn submodule(&self, sub: &Subspace) -> Module {
        let action = self.action.iter().map(|r| sub.restrict(r)).collect();
        Module::from_parts(&self.algebra, sub.dim(), action)
    }

    /// Submodule generated by the given rows.
    pub fn generated_by(&self, rows: &Mat) -> Subspace {
        let mut sub = Subspace::span(rows);
        loop {
            let before = sub.dim();
            let gens = self.algebra.generators();
            let mut parts = vec![sub.basis().clone()];
            for g in gens {
                parts.push(sub.basis().mul(&self.act(g)));
            }
            sub = Subspace::span(&Mat::vstack_all(self.field(), self.dim, &parts));
            if sub.dim() == before {
                return sub;
            }
        }
    }

    pub fn quotient(&self, sub: &Subspace) -> (Module, Quotient) {
        let q = Quotient::new(sub.clone());
        let action = self.action.iter().map(|r| q.induced(r)).collect();
        (Module::from_parts(&self.algebra, q.dim(), action), q)
    }

    pub fn direct_sum(parts: &[Module]) -> Result<Module> {
        let first = parts
            .first()
            .ok_or(Error::Other("direct sum of no modules".into()))?;
        for p in parts {
            first.same_algebra(p)?;
        }
        let a = &first.algebra;
        let dim = parts.iter().map(Module::dim).sum();
        let action = (0..a.dim())
            .map(|k| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.action[k]).collect();
                Mat::block_diag(a.field(), &blocks)
            })
            .collect();
        Ok(Module::from_parts(a, dim, action))
    }

    pub fn direct_power(&self, n: usize) -> Module {
        if n == 0 {
            return Module::zero(&self.algebra);
        }
        Module::direct_sum(&vec![self.clone(); n]).expect("same algebra")
    }

    /// The same action matrices conjugated by an invertible change of basis `t`
    /// (new basis rows are `t`'s rows).
    pub fn change_basis(&self, t: &Mat) -> Module {
        let inv = t.inverse().expect("change of basis must be invertible");
        let action = self.action.iter().map(|r| t.mul(r).mul(&inv)).collect();
        Module::from_parts(&self.algebra, self.dim, action)
    }

    /// Restriction of scalars along an algebra map `φ: B → A` given by the
    /// images of the basis of `B` as coordinate rows.
    pub fn restrict_along(&self, b: &Algebra, images: &Mat) -> Module {
        let action = (0..b.dim()).map(|k| self.act(images.row(k))).collect();
        Module::from_parts(b, self.dim, action)
    }

    pub fn cover(&self) -> &Cover {
        self.cover.get_or_init(|| cover::projective_cover(self))
    }

    pub fn syzygy(&self) -> Module {
        self.cover().syzygy.clone()
    }

    /// `Ω^n M`.
    pub fn syzygy_power(&self, n: usize) -> Module {
        let mut m = self.clone();
        for _ in 0..n {
            if m.is_zero() {
                break;
            }
            m = m.syzygy();
        }
        m
    }

    pub fn is_projective(&self) -> bool {
        self.cover().projective.dim() == self.dim
    }

    pub fn is_injective(&self) -> bool {
        self.dual().is_projective()
    }

    pub fn dual(&self) -> Module {
        dual::dual(self)
    }

    pub fn nakayama(&self) -> Module {
        dual::nakayama(self)
    }

    /// `Hom_A(M, A)` as a right module over `A^op`.
    pub fn hom_to_regular(&self) -> Module {
        dual::hom_to_regular(self)
    }
}

#[cfg(test)]
mod tests;
