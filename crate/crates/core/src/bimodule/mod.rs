//! Bimodules as right modules over `A^op ⊗ B`.

mod duals;
mod tensor;

use std::fmt;

pub use duals::{
    dual_basis, hom_dual_left, hom_dual_right, is_progenerator, trace_ideal, unit_map, DualBasis,
    UnitMap,
};
pub use tensor::{apply_tensor_functor, tensor_over, ModuleTensor, TensorProduct};

use crate::algebra::{combine, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};
use crate::module::Module;

/// An `A`–`B` bimodule stored as a right module over `envelope(A, B)`,
/// where `a_i⊗b_j` (index `i·dim B + j`) acts by `m ↦ a_i·m·b_j`.
#[derive(Clone)]
pub struct Bimodule {
    left: Algebra,
    right: Algebra,
    module: Module,
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bimodule(dim {}, {:?} – {:?})",
            self.dim(),
            self.left,
            self.right
        )
    }
}

impl Bimodule {
    pub fn from_module(left: &Algebra, right: &Algebra, module: Module) -> Result<Bimodule> {
        let env = left.envelope_with(right)?;
        if *module.algebra() != env {
            return Err(Error::AlgebraMismatch(
                "bimodule must be a module over the envelope",
            ));
        }
        Ok(Bimodule {
            left: left.clone(),
            right: right.clone(),
            module,
        })
    }

    /// From commuting actions: `lambda[i]` is `m ↦ a_i·m`, `rho[j]` is `m ↦ m·b_j`.
    pub fn from_actions(
        left: &Algebra,
        right: &Algebra,
        dim: usize,
        lambda: &[Mat],
        rho: &[Mat],
    ) -> Result<Bimodule> {
        let env = left.envelope_with(right)?;
        let mut action = Vec::with_capacity(env.dim());
        for l in lambda {
            for r in rho {
                action.push(l.mul(r));
            }
        }
        let module = Module::new(&env, dim, action)?;
        Ok(Bimodule {
            left: left.clone(),
            right: right.clone(),
            module,
        })
    }

    pub fn zero(left: &Algebra, right: &Algebra) -> Result<Bimodule> {
        let env = left.envelope_with(right)?;
        Bimodule::from_module(left, right, Module::zero(&env))
    }

    /// `A` as an `A`–`A` bimodule.
    pub fn regular(a: &Algebra) -> Bimodule {
        Bimodule::from_actions(a, a, a.dim(), a.left_mults(), a.right_mults()).expect("same field")
    }

    /// `A_σ`: `a·m·b = a m σ(b)`; row `k` of `sigma` is `σ(b_k)`.
    pub fn twist(a: &Algebra, sigma: &Mat) -> Bimodule {
        let rho: Vec<Mat> = (0..a.dim())
            .map(|k| a.right_mult_vec(sigma.row(k)))
            .collect();
        Bimodule::from_actions(a, a, a.dim(), a.left_mults(), &rho).expect("same field")
    }

    /// `A e_i ⊗ e_j B`, the indecomposable projective bimodule.
    pub fn projective(a: &Algebra, i: usize, b: &Algebra, j: usize) -> Result<Bimodule> {
        let env = a.envelope_with(b)?;
        let idx = i * b.num_idempotents() + j;
        Bimodule::from_module(a, b, Module::projective(&env, idx))
    }

    /// A right `B`-module viewed as a `K`–`B` bimodule.
    pub fn from_right_module(m: &Module) -> Bimodule {
        let b = m.algebra();
        let k = Algebra::ground(b.field());
        let id = vec![Mat::identity(b.field(), m.dim())];
        Bimodule::from_actions(&k, b, m.dim(), &id, m.action()).expect("same field")
    }

    /// The left ideal `A e_i` as an `A`–`K` bimodule.
    pub fn left_ideal(a: &Algebra, i: usize) -> Bimodule {
        let f = a.field();
        let sub = Subspace::span(&a.right_mult_vec(&a.idempotents()[i]));
        let lambda: Vec<Mat> = a.left_mults().iter().map(|l| sub.restrict(l)).collect();
        let k = Algebra::ground(f);
        let id = vec![Mat::identity(f, sub.dim())];
        Bimodule::from_actions(a, &k, sub.dim(), &lambda, &id).expect("same field")
    }

    pub fn direct_sum(parts: &[Bimodule]) -> Result<Bimodule> {
        let first = parts
            .first()
            .ok_or(Error::Other("direct sum of no bimodules".into()))?;
        let mods: Vec<Module> = parts.iter().map(|p| p.module.clone()).collect();
        Bimodule::from_module(&first.left, &first.right, Module::direct_sum(&mods)?)
    }

    pub fn left(&self) -> &Algebra {
        &self.left
    }

    pub fn right(&self) -> &Algebra {
        &self.right
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `m ↦ a·m` for an element of the left algebra in coordinates.
    pub fn left_act(&self, a: &[u32]) -> Mat {
        let db = self.right.dim();
        let mut x = vec![0u32; self.left.dim() * db];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &u) in self.right.unit().iter().enumerate() {
                x[i * db + j] = self.field().mul(ai, u);
            }
        }
        self.module.act(&x)
    }

    /// `m ↦ m·b` for an element of the right algebra in coordinates.
    pub fn right_act(&self, b: &[u32]) -> Mat {
        let f = self.field();
        let db = self.right.dim();
        let mut x = vec![0u32; self.left.dim() * db];
        for (i, &u) in self.left.unit().iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                x[i * db + j] = f.add(x[i * db + j], f.mul(u, bj));
            }
        }
        self.module.act(&x)
    }

    pub fn left_actions(&self) -> Vec<Mat> {
        (0..self.left.dim())
            .map(|i| self.left_act(&self.left.basis_vector(i)))
            .collect()
    }

    pub fn right_actions(&self) -> Vec<Mat> {
        (0..self.right.dim())
            .map(|j| self.right_act(&self.right.basis_vector(j)))
            .collect()
    }

    /// The underlying right `B`-module.
    pub fn restrict_right(&self) -> Module {
        Module::from_parts(&self.right, self.dim(), self.right_actions())
    }

    /// The underlying left `A`-module, as a right `A^op`-module.
    pub fn restrict_left(&self) -> Module {
        Module::from_parts(&self.left.opposite(), self.dim(), self.left_actions())
    }

    /// Left and right actions commute on generators.
    pub fn check_commuting(&self) -> bool {
        let ls: Vec<Mat> = self
            .left
            .generators()
            .iter()
            .map(|g| self.left_act(g))
            .collect();
        let rs: Vec<Mat> = self
            .right
            .generators()
            .iter()
            .map(|g| self.right_act(g))
            .collect();
        ls.iter().all(|l| rs.iter().all(|r| l.mul(r) == r.mul(l)))
    }

    pub fn validate(&self) -> Result<()> {
        self.module
            .validate()
            .map_err(|v| Error::InvalidModule(v.to_string()))?;
        if !self.check_commuting() {
            return Err(Error::InvalidModule(
                "left and right actions do not commute".into(),
            ));
        }
        Ok(())
    }

    /// Bimodule with the same left action and right action composed with `sigma`.
    pub fn twist_right(&self, sigma: &Mat) -> Bimodule {
        let rho: Vec<Mat> = (0..self.right.dim())
            .map(|k| self.right_act(sigma.row(k)))
            .collect();
        Bimodule::from_actions(
            &self.left,
            &self.right,
            self.dim(),
            &self.left_actions(),
            &rho,
        )
        .expect("same algebras")
    }

    pub fn env_action(&self, x: &[u32]) -> Mat {
        combine(self.field(), self.dim(), self.module.action(), x)
    }
}
