use std::collections::HashMap;

use super::Module;
use crate::error::{Error, Result};
use crate::linalg::{CoordBasis, Mat, Subspace};

/// Entries allowed in the dense linear system solved by [`hom_space`].
pub const HOM_SYSTEM_CAP: u128 = 1 << 26;

/// A basis of `Hom_A(M, N)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<Mat>,
    coords: Option<CoordBasis>,
}

impl HomSpace {
    fn new(source: &Module, target: &Module, basis: Vec<Mat>) -> HomSpace {
        let coords = (!basis.is_empty()).then(|| {
            let f = source.field();
            let len = source.dim() * target.dim();
            CoordBasis::new(Mat::from_rows(
                f,
                len,
                &basis.iter().map(|b| b.data().to_vec()).collect::<Vec<_>>(),
            ))
        });
        HomSpace {
            source: source.clone(),
            target: target.clone(),
            basis,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in this basis.
    pub fn coords(&self, f: &Mat) -> Option<Vec<u32>> {
        match &self.coords {
            Some(c) => c.coords(f.data()),
            None => f.is_zero().then(Vec::new),
        }
    }

    pub fn coords_unchecked(&self, f: &Mat) -> Vec<u32> {
        match &self.coords {
            Some(c) => c.coords_unchecked(f.data()),
            None => Vec::new(),
        }
    }

    /// `Σ c_k·basis[k]`.
    pub fn combine(&self, c: &[u32]) -> Mat {
        let f = self.source.field();
        let mut m = Mat::zeros(f, self.source.dim(), self.target.dim());
        for (k, &x) in c.iter().enumerate() {
            m.add_scaled(x, &self.basis[k]);
        }
        m
    }
}

/// Homomorphisms out of `M` are determined by the images `y_s ∈ N e_{i_s}`
/// of the top generators, subject to killing the kernel of the cover.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    m.same_algebra(n)?;
    let f = m.field();
    if m.is_zero() || n.is_zero() {
        return Ok(HomSpace::new(m, n, Vec::new()));
    }
    let a = m.algebra();
    let d = a.dim();
    let cover = m.cover();
    let nd = n.dim();
    // per vertex: basis of N e_i and the products B·ρ_N(b_k)
    let mut per_vertex: HashMap<usize, (Mat, Vec<Mat>)> = HashMap::new();
    for b in &cover.blocks {
        per_vertex.entry(b.vertex).or_insert_with(|| {
            let basis = n.vertex_space(b.vertex).basis().clone();
            let prods = n.action().iter().map(|r| basis.mul(r)).collect();
            (basis, prods)
        });
    }
    let sizes: Vec<usize> = cover
        .blocks
        .iter()
        .map(|b| per_vertex[&b.vertex].0.rows())
        .collect();
    let unknowns: usize = sizes.iter().sum();
    if unknowns == 0 {
        return Ok(HomSpace::new(m, n, Vec::new()));
    }
    let kernel = cover.kernel.basis();
    let nk = kernel.rows();
    let needed = unknowns as u128 * (nk * nd) as u128;
    if needed > HOM_SYSTEM_CAP {
        return Err(Error::SizeCap {
            what: format!("Hom between modules of dimension {} and {nd}", m.dim()),
            needed,
            cap: HOM_SYSTEM_CAP,
            hint: "use smaller modules or a lower bound",
        });
    }
    let mut c = Mat::zeros(f, unknowns, nk * nd);
    for r in 0..nk {
        let kv = kernel.row(r);
        let mut row0 = 0;
        for (s, b) in cover.blocks.iter().enumerate() {
            let elem = cover.block_element(kv, s);
            let (_, prods) = &per_vertex[&b.vertex];
            let mut block = Mat::zeros(f, sizes[s], nd);
            for (k, &x) in elem.iter().enumerate().take(d) {
                if x != 0 {
                    block.add_scaled(x, &prods[k]);
                }
            }
            for i in 0..sizes[s] {
                c.row_mut(row0 + i)[r * nd..(r + 1) * nd].copy_from_slice(block.row(i));
            }
            row0 += sizes[s];
        }
    }
    let sols = c.kernel_basis();
    let mut basis = Vec::with_capacity(sols.rows());
    for z in 0..sols.rows() {
        let zv = sols.row(z);
        let mut phi = Mat::zeros(f, cover.dim(), nd);
        let mut row0 = 0;
        for (s, b) in cover.blocks.iter().enumerate() {
            let (vb, _) = &per_vertex[&b.vertex];
            let y = vb.vec_mul(&zv[row0..row0 + sizes[s]]);
            row0 += sizes[s];
            let yk = Mat::from_rows(
                f,
                nd,
                &n.action().iter().map(|r| r.vec_mul(&y)).collect::<Vec<_>>(),
            );
            let blk = a.projective(b.vertex).basis.basis().mul(&yk);
            for t in 0..b.dim {
                phi.row_mut(b.offset + t).copy_from_slice(blk.row(t));
            }
        }
        basis.push(cover.section.mul(&phi));
    }
    Ok(HomSpace::new(m, n, basis))
}

/// `Hom(M, ⊕_t e_{v_t} A)` for a list of vertices, computing each distinct
/// `Hom(M, e_v A)` once. Returns maps into the sum, block offsets following
/// the echelon bases of the projectives.
pub fn hom_into_projective_sum(m: &Module, vertices: &[usize]) -> Result<Vec<Mat>> {
    let a = m.algebra();
    let f = m.field();
    let mut cache: HashMap<usize, HomSpace> = HashMap::new();
    let total: usize = vertices.iter().map(|&v| a.projective(v).dim()).sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for &v in vertices {
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(v) {
            let p = Module::projective(a, v);
            e.insert(hom_space(m, &p)?);
        }
        let h = &cache[&v];
        let pd = a.projective(v).dim();
        for b in &h.basis {
            let mut g = Mat::zeros(f, m.dim(), total);
            for i in 0..m.dim() {
                g.row_mut(i)[offset..offset + pd].copy_from_slice(b.row(i));
            }
            out.push(g);
        }
        offset += pd;
    }
    Ok(out)
}

/// The subspace of `Hom(M, N)` (in `hom`'s coordinates) of maps factoring
/// through the projective cover of `N`.
pub(crate) fn projective_factoring(hom: &HomSpace) -> Result<Subspace> {
    let f = hom.source.field();
    let h = hom.dim();
    if h == 0 {
        return Ok(Subspace::zero(f, 0));
    }
    let cover = hom.target.cover();
    let vertices: Vec<usize> = cover.blocks.iter().map(|b| b.vertex).collect();
    let maps = hom_into_projective_sum(&hom.source, &vertices)?;
    let rows: Vec<Vec<u32>> = maps
        .iter()
        .map(|g| hom.coords_unchecked(&g.mul(&cover.map)))
        .collect();
    Ok(Subspace::span(&Mat::from_rows(f, h, &rows)))
}
