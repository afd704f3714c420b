//! Finite-dimensional split basic algebras given by structure constants.

mod construct;
mod quiver;
mod validate;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

pub use quiver::{Arrow, QuiverPresentation};
pub use validate::{SplitBasicCertificate, Validation, Violation};

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

/// A finite-dimensional algebra over GF(p) with a chosen basis.
///
/// `b_i·b_j = Σ_k c_ij^k b_k`. The idempotents and radical basis are part of
/// the data; [`Algebra::validate`] certifies them. Clones share storage.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<Inner>,
}

struct Inner {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    products: Vec<Vec<(u32, u32)>>,
    unit: Vec<u32>,
    idempotents: Vec<Vec<u32>>,
    radical: Vec<Vec<u32>>,
    fingerprint: u64,
    cache: Cache,
}

#[derive(Default)]
struct Cache {
    right: OnceLock<Vec<Mat>>,
    left: OnceLock<Vec<Mat>>,
    radical_space: OnceLock<Subspace>,
    generators: OnceLock<Vec<Vec<u32>>>,
    projectives: OnceLock<Vec<ProjData>>,
    characters: OnceLock<Mat>,
    opposite: OnceLock<Algebra>,
    envelopes: Mutex<HashMap<u64, Algebra>>,
}

/// The indecomposable projective `e_i A` realized inside `A`.
#[derive(Clone, Debug)]
pub struct ProjData {
    pub vertex: usize,
    /// Echelon basis of `e_i A`, rows are elements of `A`.
    pub basis: Subspace,
    /// Right action of each basis element of `A` in that basis.
    pub action: Vec<Mat>,
    /// Coordinates of `e_i`.
    pub top: Vec<u32>,
}

impl ProjData {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(GF({}), dim {}, {} idempotents, #{:016x})",
            self.field().p(),
            self.dim(),
            self.num_idempotents(),
            self.fingerprint()
        )
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.fingerprint == other.inner.fingerprint
                && self.inner.dim == other.inner.dim
                && self.inner.products == other.inner.products
                && self.inner.unit == other.inner.unit
                && self.inner.idempotents == other.inner.idempotents)
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds from sparse structure constants `(i, j, k, c)`; duplicates add up.
    ///
    /// Only shapes are checked here, call [`Algebra::validate`] for the axioms.
    pub fn from_table(
        field: Field,
        dim: usize,
        labels: Option<Vec<String>>,
        constants: &[(usize, usize, usize, u32)],
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
        radical: Vec<Vec<u32>>,
    ) -> Result<Algebra> {
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        if dim == 0 {
            return bad("dimension must be positive".into());
        }
        let mut dense: Vec<Vec<u32>> = vec![vec![0; dim]; dim * dim];
        for &(i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return bad(format!(
                    "structure constant ({i},{j},{k}) out of range for dim {dim}"
                ));
            }
            let e = &mut dense[i * dim + j][k];
            *e = field.add(*e, c % field.p());
        }
        let products = dense
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|e| e.1 != 0)
                    .map(|(k, c)| (k as u32, c))
                    .collect()
            })
            .collect();
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return bad(format!("{} labels for dimension {dim}", l.len()));
            }
            Some(l) => l,
            None => (0..dim).map(|i| format!("b{i}")).collect(),
        };
        let check_len = |what: &str, v: &[u32]| {
            if v.len() != dim {
                Err(Error::InvalidAlgebra(format!(
                    "{what} has length {}, expected {dim}",
                    v.len()
                )))
            } else {
                Ok(())
            }
        };
        check_len("unit", &unit)?;
        for e in &idempotents {
            check_len("idempotent", e)?;
        }
        for r in &radical {
            check_len("radical vector", r)?;
        }
        if idempotents.is_empty() {
            return bad("at least one idempotent is required".into());
        }
        let reduce = |v: Vec<u32>| v.into_iter().map(|x| x % field.p()).collect::<Vec<_>>();
        Ok(Self::assemble(
            field,
            labels,
            products,
            reduce(unit),
            idempotents.into_iter().map(reduce).collect(),
            radical.into_iter().map(reduce).collect(),
        ))
    }

    fn assemble(
        field: Field,
        labels: Vec<String>,
        products: Vec<Vec<(u32, u32)>>,
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
        radical: Vec<Vec<u32>>,
    ) -> Algebra {
        let dim = labels.len();
        let mut h = std::collections::hash_map::DefaultHasher::new();
        field.p().hash(&mut h);
        dim.hash(&mut h);
        products.hash(&mut h);
        unit.hash(&mut h);
        idempotents.hash(&mut h);
        radical.hash(&mut h);
        Algebra {
            inner: Arc::new(Inner {
                field,
                dim,
                labels,
                products,
                unit,
                idempotents,
                radical,
                fingerprint: h.finish(),
                cache: Cache::default(),
            }),
        }
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[u32] {
        &self.inner.unit
    }

    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.inner.idempotents
    }

    pub fn num_idempotents(&self) -> usize {
        self.inner.idempotents.len()
    }

    pub fn radical(&self) -> &[Vec<u32>] {
        &self.inner.radical
    }

    /// Structural hash; equal algebras have equal fingerprints.
    pub fn fingerprint(&self) -> u64 {
        self.inner.fingerprint
    }

    /// `b_i·b_j` as sparse `(k, c)` pairs.
    pub fn product(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.inner.products[i * self.inner.dim + j]
    }

    /// All structure constants `(i, j, k, c)` with `c ≠ 0`.
    pub fn constants(&self) -> Vec<(usize, usize, usize, u32)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in self.product(i, j) {
                    out.push((i, j, k as usize, c));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field();
        let d = self.dim();
        let mut acc = vec![0u32; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = f.mul(xi, yj);
                for &(k, c) in self.product(i, j) {
                    let k = k as usize;
                    acc[k] = f.add(acc[k], f.mul(s, c));
                }
            }
        }
        acc
    }

    /// `R(b_j)`: the matrix of `v ↦ v·b_j`.
    pub fn right_mult(&self, j: usize) -> &Mat {
        &self.right_mults()[j]
    }

    pub fn right_mults(&self) -> &[Mat] {
        self.inner.cache.right.get_or_init(|| {
            let d = self.dim();
            (0..d)
                .map(|j| {
                    let mut m = Mat::zeros(self.field(), d, d);
                    for i in 0..d {
                        for &(k, c) in self.product(i, j) {
                            m.set(i, k as usize, c);
                        }
                    }
                    m
                })
                .collect()
        })
    }

    /// `L(b_i)`: the matrix of `v ↦ b_i·v`.
    pub fn left_mult(&self, i: usize) -> &Mat {
        &self.left_mults()[i]
    }

    pub fn left_mults(&self) -> &[Mat] {
        self.inner.cache.left.get_or_init(|| {
            let d = self.dim();
            (0..d)
                .map(|i| {
                    let mut m = Mat::zeros(self.field(), d, d);
                    for j in 0..d {
                        for &(k, c) in self.product(i, j) {
                            m.set(j, k as usize, c);
                        }
                    }
                    m
                })
                .collect()
        })
    }

    pub fn right_mult_vec(&self, x: &[u32]) -> Mat {
        combine(self.field(), self.dim(), self.right_mults(), x)
    }

    pub fn left_mult_vec(&self, x: &[u32]) -> Mat {
        combine(self.field(), self.dim(), self.left_mults(), x)
    }

    /// Span of the radical basis.
    pub fn radical_space(&self) -> &Subspace {
        self.inner.cache.radical_space.get_or_init(|| {
            Subspace::span(&Mat::from_rows(
                self.field(),
                self.dim(),
                &self.inner.radical,
            ))
        })
    }

    /// Algebra generators: the idempotents followed by lifts of a basis of `J/J²`.
    pub fn generators(&self) -> &[Vec<u32>] {
        self.inner.cache.generators.get_or_init(|| {
            let f = self.field();
            let d = self.dim();
            let rad = &self.inner.radical;
            let mut sq = Vec::new();
            for x in rad {
                for y in rad {
                    sq.push(self.mul(x, y));
                }
            }
            let mut span = Subspace::span(&Mat::from_rows(f, d, &sq));
            let mut gens: Vec<Vec<u32>> = self.inner.idempotents.clone();
            for x in rad {
                if span.insert(x) {
                    gens.push(x.clone());
                }
            }
            gens
        })
    }

    /// Lifts of a basis of `J/J²`; these generate `J` as a one-sided ideal.
    pub fn radical_generators(&self) -> &[Vec<u32>] {
        &self.generators()[self.num_idempotents()..]
    }

    /// Values of the simple characters: entry `(k, i)` is the scalar by which
    /// `b_k` acts on the simple module `S_i`.
    pub fn characters(&self) -> &Mat {
        self.inner.cache.characters.get_or_init(|| {
            let f = self.field();
            let d = self.dim();
            let r = self.num_idempotents();
            let mut rows = self.inner.idempotents.clone();
            rows.extend(self.inner.radical.iter().cloned());
            let basis = Mat::from_rows(f, d, &rows);
            let inv = basis
                .inverse()
                .expect("idempotents and radical must form a basis; run validate first");
            inv.submatrix(0..d, 0..r)
        })
    }

    pub fn projective_data(&self) -> &[ProjData] {
        self.inner.cache.projectives.get_or_init(|| {
            let f = self.field();
            let d = self.dim();
            self.inner
                .idempotents
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let rows: Vec<Vec<u32>> =
                        (0..d).map(|k| self.mul(e, &self.basis_vector(k))).collect();
                    let basis = Subspace::span(&Mat::from_rows(f, d, &rows));
                    let action = self
                        .right_mults()
                        .iter()
                        .map(|r| basis.restrict(r))
                        .collect();
                    let top = basis.coords(e).expect("e_i lies in e_i A");
                    ProjData {
                        vertex: i,
                        basis,
                        action,
                        top,
                    }
                })
                .collect()
        })
    }

    pub fn projective(&self, i: usize) -> &ProjData {
        &self.projective_data()[i]
    }

    pub fn opposite(&self) -> Algebra {
        self.inner
            .cache
            .opposite
            .get_or_init(|| construct::opposite(self))
            .clone()
    }

    /// `self^op ⊗ b`; bimodules from `self` to `b` are right modules over it.
    pub fn envelope_with(&self, b: &Algebra) -> Result<Algebra> {
        if self.field() != b.field() {
            return Err(Error::FieldMismatch(self.field().p(), b.field().p()));
        }
        let mut cache = self.inner.cache.envelopes.lock().unwrap();
        if let Some(e) = cache.get(&b.fingerprint()) {
            return Ok(e.clone());
        }
        let e = construct::envelope(self, b);
        cache.insert(b.fingerprint(), e.clone());
        Ok(e)
    }

    /// `A^e = A^op ⊗ A`.
    pub fn enveloping(&self) -> Algebra {
        self.envelope_with(self).expect("same field")
    }

    pub fn triangular2(&self) -> Algebra {
        construct::triangular2(self)
    }

    pub fn from_quiver(q: &QuiverPresentation) -> Result<Algebra> {
        q.build()
    }

    /// `GF(p)[x]/(x^n)`, `n ≥ 2`.
    pub fn truncated_polynomial(field: Field, n: usize) -> Result<Algebra> {
        let mut q = QuiverPresentation::new(field, &["1"]);
        q.arrow("x", "1", "1")?;
        q.relation(&vec!["x"; n])?;
        q.build()
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        QuiverPresentation::new(field, &["1"])
            .build()
            .expect("trivial quiver")
    }

    /// `true` if the algebra is commutative on basis elements.
    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn validate(&self) -> Validation {
        validate::validate(self)
    }

    pub(crate) fn from_parts(
        field: Field,
        labels: Vec<String>,
        products: Vec<Vec<(u32, u32)>>,
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
        radical: Vec<Vec<u32>>,
    ) -> Algebra {
        Self::assemble(field, labels, products, unit, idempotents, radical)
    }
}

/// `Σ_k x_k·ops[k]` for a coordinate vector `x`.
pub fn combine(field: Field, n: usize, ops: &[Mat], x: &[u32]) -> Mat {
    let mut m = if ops.is_empty() {
        Mat::zeros(field, n, n)
    } else {
        Mat::zeros(field, ops[0].rows(), ops[0].cols())
    };
    for (k, &c) in x.iter().enumerate() {
        if c != 0 {
            m.add_scaled(c, &ops[k]);
        }
    }
    m
}

#[cfg(test)]
mod tests;
