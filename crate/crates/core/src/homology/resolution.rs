use crate::linalg::{Mat, Subspace};
use crate::module::{intertwines, Cover, Module};

/// A minimal projective resolution `… → P_1 → P_0 → M`, built from the
/// projective covers of the successive syzygies.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: Module,
    /// `covers[k]` is the cover `P_k → Ω^k M`.
    pub covers: Vec<Cover>,
    /// `differentials[k]` is `d_k: P_k → P_{k-1}` for `k ≥ 1`; entry 0 is the augmentation `P_0 → M`.
    pub differentials: Vec<Mat>,
    /// The last computed syzygy vanished.
    pub complete: bool,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn term(&self, k: usize) -> &Module {
        &self.covers[k].projective
    }

    pub fn term_dims(&self) -> Vec<usize> {
        self.covers.iter().map(Cover::dim).collect()
    }

    /// Number of indecomposable summands of each term.
    pub fn term_ranks(&self) -> Vec<usize> {
        self.covers.iter().map(|c| c.blocks.len()).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().enumerate().skip(1).all(|(k, d)| {
            let rad = self.term(k - 1).radical_submodule();
            rad.contains_all(d)
        })
    }

    /// `d∘d = 0`, exactness at every term, the augmentation onto `M`, and
    /// each differential a homomorphism.
    pub fn verify(&self) -> bool {
        let Some(first) = self.differentials.first() else {
            return self.target.is_zero();
        };
        if first.rank() != self.target.dim() || !intertwines(self.term(0), &self.target, first) {
            return false;
        }
        for k in 1..self.len() {
            let d = &self.differentials[k];
            if !intertwines(self.term(k), self.term(k - 1), d) {
                return false;
            }
            if !d.mul(&self.differentials[k - 1]).is_zero() {
                return false;
            }
            // im d_k = ker d_{k-1}
            let prev = &self.differentials[k - 1];
            if d.rank() != self.term(k - 1).dim() - prev.rank() {
                return false;
            }
        }
        if self.complete {
            let last = self.differentials.last().expect("nonempty");
            if last.rank() != last.rows() {
                return false;
            }
        }
        true
    }
}

/// Terms `P_0..P_{n_max}`, stopping early at a zero syzygy.
pub fn minimal_resolution(m: &Module, n_max: usize) -> Resolution {
    let mut covers: Vec<Cover> = Vec::new();
    let mut differentials: Vec<Mat> = Vec::new();
    let mut current = m.clone();
    let mut kernel_prev: Option<Subspace> = None;
    let mut complete = m.is_zero();
    if !complete {
        for _ in 0..=n_max {
            let cover = current.cover().clone();
            let d = match &kernel_prev {
                None => cover.map.clone(),
                Some(kernel) => cover.map.mul(kernel.basis()),
            };
            differentials.push(d);
            kernel_prev = Some(cover.kernel.clone());
            current = cover.syzygy.clone();
            covers.push(cover);
            if current.is_zero() {
                complete = true;
                break;
            }
        }
    }
    Resolution {
        target: m.clone(),
        covers,
        differentials,
        complete,
    }
}
