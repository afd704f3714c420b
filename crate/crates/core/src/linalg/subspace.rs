use super::{Field, Mat};

/// A subspace of `GF(p)^n` kept in reduced row-echelon form.
///
/// Coordinates of a member vector are its entries at the pivot columns, which
/// is what makes induced actions on submodules cheap.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row span of `rows`.
    pub fn span(rows: &Mat) -> Self {
        let r = rows.rref();
        let rank = r.rank();
        let basis = r.mat.submatrix(0..rank, 0..rows.cols());
        Subspace {
            basis,
            pivots: r.pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Reduce `v` against the basis in place; the result is zero iff `v` was a member.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field();
        for (r, &c) in self.pivots.iter().enumerate() {
            let fac = v[c];
            if fac == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *x = f.sub_mul(*x, fac, b);
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_all(&self, rows: &Mat) -> bool {
        (0..rows.rows()).all(|i| self.contains(rows.row(i)))
    }

    /// Coordinates w.r.t. the echelon basis, assuming membership.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.contains(v).then(|| self.coords_unchecked(v))
    }

    /// Coordinates of every row of `m` (assumed members).
    pub fn coords_mat(&self, m: &Mat) -> Mat {
        m.select_cols(&self.pivots)
    }

    /// Matrix of the restriction of `op` (ambient × ambient) to this invariant subspace.
    pub fn restrict(&self, op: &Mat) -> Mat {
        self.coords_mat(&self.basis.mul(op))
    }

    /// Adds `v`; returns false if it was already a member.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(lead) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[lead]);
        w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        // clear the new pivot column from the existing rows
        let n = self.ambient();
        let mut rows: Vec<Vec<u32>> = self.basis.to_rows();
        for row in rows.iter_mut() {
            let fac = row[lead];
            if fac != 0 {
                for j in 0..n {
                    row[j] = f.sub_mul(row[j], fac, w[j]);
                }
            }
        }
        let pos = self.pivots.partition_point(|&c| c < lead);
        rows.insert(pos, w);
        self.pivots.insert(pos, lead);
        self.basis = Mat::from_rows(f, n, &rows);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x·B1 = y·B2  <=>  (x, -y)·[B1; B2] = 0
        let stacked = self.basis.vstack(&other.basis);
        let ker = stacked.kernel_basis();
        let left = ker.submatrix(0..ker.rows(), 0..self.dim());
        Subspace::span(&left.mul(&self.basis))
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut piv = vec![false; self.ambient()];
        for &c in &self.pivots {
            piv[c] = true;
        }
        (0..self.ambient()).filter(|&c| !piv[c]).collect()
    }

    /// Vectors extending `self` to a basis of `larger` (which must contain `self`).
    pub fn complement_in(&self, larger: &Subspace) -> Mat {
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for i in 0..larger.dim() {
            let v = larger.basis.row(i);
            if acc.insert(v) {
                chosen.push(v.to_vec());
            }
        }
        Mat::from_rows(self.field(), self.ambient(), &chosen)
    }
}

/// The quotient `GF(p)^n / W`, with the free (non-pivot) columns of `W`'s
/// echelon basis as quotient coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub: Subspace,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(sub: Subspace) -> Self {
        let free = sub.free_columns();
        Quotient { sub, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient(&self) -> usize {
        self.sub.ambient()
    }

    pub fn relations(&self) -> &Subspace {
        &self.sub
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.sub.reduce(&mut w);
        self.free.iter().map(|&c| w[c]).collect()
    }

    /// ambient × dim matrix of the projection.
    pub fn projection(&self) -> Mat {
        let f = self.sub.field();
        let n = self.ambient();
        let q = self.dim();
        let mut m = Mat::zeros(f, n, q);
        for (k, &c) in self.free.iter().enumerate() {
            m.set(c, k, 1);
        }
        for (r, &c) in self.sub.pivots().iter().enumerate() {
            let row = self.sub.basis().row(r);
            for (k, &fc) in self.free.iter().enumerate() {
                m.set(c, k, f.neg(row[fc]));
            }
        }
        m
    }

    /// dim × ambient matrix choosing representatives (unit vectors at free columns).
    pub fn lift(&self) -> Mat {
        let f = self.sub.field();
        let mut m = Mat::zeros(f, self.dim(), self.ambient());
        for (k, &c) in self.free.iter().enumerate() {
            m.set(k, c, 1);
        }
        m
    }

    /// The map induced on the quotient by an ambient operator preserving the relations.
    pub fn induced(&self, op: &Mat) -> Mat {
        op.select_rows(&self.free).mul(&self.projection())
    }

    /// The map into another quotient induced by an ambient map `op`.
    pub fn induced_into(&self, op: &Mat, target: &Quotient) -> Mat {
        op.select_rows(&self.free).mul(&target.projection())
    }
}

/// A fixed (not necessarily echelon) basis with fast coordinates: an
/// invertible square minor on chosen columns.
#[derive(Clone, Debug)]
pub struct CoordBasis {
    rows: Mat,
    cols: Vec<usize>,
    inv: Mat,
}

impl CoordBasis {
    /// `rows` must be linearly independent.
    pub fn new(rows: Mat) -> Self {
        let r = rows.rref();
        assert_eq!(r.rank(), rows.rows(), "CoordBasis rows must be independent");
        let cols = r.pivots;
        let inv = rows
            .select_cols(&cols)
            .inverse()
            .expect("pivot minor is invertible");
        CoordBasis { rows, cols, inv }
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn rows(&self) -> &Mat {
        &self.rows
    }

    /// Coordinates of a member vector.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        let picked: Vec<u32> = self.cols.iter().map(|&c| v[c]).collect();
        self.inv.vec_mul(&picked)
    }

    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.coords_unchecked(v);
        (self.rows.vec_mul(&c) == v).then_some(c)
    }

    pub fn coords_mat(&self, m: &Mat) -> Mat {
        m.select_cols(&self.cols).mul(&self.inv)
    }
}
