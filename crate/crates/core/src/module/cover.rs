use super::Module;
use crate::linalg::{Mat, Subspace};

/// One summand `e_i A` of a projective cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertex: usize,
    pub offset: usize,
    pub dim: usize,
}

/// Minimal projective cover `π: P → M` with `P = ⊕_s e_{i_s} A`.
///
/// Block `s` of `P` is `e_{i_s} A` in the echelon basis of
/// [`crate::algebra::ProjData`]; its top element maps to the generator `g_s`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Module,
    pub blocks: Vec<Block>,
    /// Top generators `g_s ∈ M e_{i_s}`, one per row.
    pub generators: Mat,
    /// `π`, a `dim P × dim M` matrix.
    pub map: Mat,
    /// A linear (not module) section of `π`.
    pub section: Mat,
    pub kernel: Subspace,
    pub syzygy: Module,
}

impl Cover {
    pub fn dim(&self) -> usize {
        self.projective.dim()
    }

    /// Rows of `P` belonging to block `s`.
    pub fn block_range(&self, s: usize) -> std::ops::Range<usize> {
        let b = self.blocks[s];
        b.offset..b.offset + b.dim
    }

    /// The element of the algebra carried by block `s` of a vector of `P`.
    pub fn block_element(&self, v: &[u32], s: usize) -> Vec<u32> {
        let b = self.blocks[s];
        let a = self.projective.algebra();
        a.projective(b.vertex)
            .basis
            .basis()
            .vec_mul(&v[b.offset..b.offset + b.dim])
    }
}

pub(super) fn projective_cover(m: &Module) -> Cover {
    let a = m.algebra().clone();
    let f = a.field();
    let d = a.dim();
    let n = m.dim();
    let mut acc = m.radical_submodule();
    let mut gens: Vec<(usize, Vec<u32>)> = Vec::new();
    if acc.dim() < n {
        for (i, e) in a.idempotents().iter().enumerate() {
            let me = m.act(e);
            for r in 0..n {
                let v = me.row(r);
                if acc.insert(v) {
                    gens.push((i, v.to_vec()));
                }
                if acc.dim() == n {
                    break;
                }
            }
        }
    }
    let mut blocks = Vec::with_capacity(gens.len());
    let mut offset = 0;
    for (i, _) in &gens {
        let dim = a.projective(*i).dim();
        blocks.push(Block {
            vertex: *i,
            offset,
            dim,
        });
        offset += dim;
    }
    let pdim = offset;
    let action: Vec<Mat> = (0..d)
        .map(|k| {
            let parts: Vec<&Mat> = gens
                .iter()
                .map(|(i, _)| &a.projective(*i).action[k])
                .collect();
            Mat::block_diag(f, &parts)
        })
        .collect();
    let projective = Module::from_parts(&a, pdim, action);
    let mut map = Mat::zeros(f, pdim, n);
    for (s, (i, g)) in gens.iter().enumerate() {
        // rows of g·ρ(b_k), then combine by the basis of e_i A
        let gk = Mat::from_rows(
            f,
            n,
            &m.action().iter().map(|r| r.vec_mul(g)).collect::<Vec<_>>(),
        );
        let block = a.projective(*i).basis.basis().mul(&gk);
        for t in 0..block.rows() {
            map.row_mut(blocks[s].offset + t)
                .copy_from_slice(block.row(t));
        }
    }
    let generators = Mat::from_rows(f, n, &gens.iter().map(|g| g.1.clone()).collect::<Vec<_>>());
    let section = map
        .solve(&Mat::identity(f, n))
        .expect("shapes agree")
        .expect("cover map is surjective");
    let kernel = Subspace::span(&map.kernel_basis());
    let syzygy = projective.submodule(&kernel);
    Cover {
        projective,
        blocks,
        generators,
        map,
        section,
        kernel,
        syzygy,
    }
}
