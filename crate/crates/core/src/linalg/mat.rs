use std::fmt;

use rand::Rng;
use serde::{Serialize, Serializer};

use super::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(p).
///
/// Vectors are rows and maps act on the right: the image of `v` under `m` is
/// `v·m`, so composites read left to right.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds from raw data; entries are reduced mod p.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(rows * cols, data.len(), "entry count must equal rows*cols");
        let p = field.p();
        let data = data.into_iter().map(|x| x % p).collect();
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: Field, cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> u32,
    ) -> Self {
        let mut m = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.p();
            }
        }
        m
    }

    /// A single row vector.
    pub fn row_vector(field: Field, v: &[u32]) -> Self {
        Mat::from_vec(field, 1, v.len(), v.to_vec())
    }

    pub fn random<R: Rng>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols)
            .map(|_| rng.gen_range(0..field.p()))
            .collect();
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn random_invertible<R: Rng>(field: Field, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Mat::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let p = self.field.p() as u64;
        let n = rhs.cols;
        let mut out = Mat::zeros(self.field, self.rows, n);
        if n == 0 {
            return out;
        }
        let mut acc = vec![0u64; n];
        // Products of residues below 2^16 fit 2^32, so a u64 accumulator takes
        // 2^32 of them before it can overflow.
        let lazy = p < (1 << 16) && self.cols < (1 << 31);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let r = rhs.row(k);
                if lazy {
                    for (s, &b) in acc.iter_mut().zip(r) {
                        *s += a * b as u64;
                    }
                } else {
                    for (s, &b) in acc.iter_mut().zip(r) {
                        *s = (*s + a * b as u64) % p;
                    }
                }
            }
            for (o, s) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (s % p) as u32;
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: u32) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        self.with_data(data)
    }

    /// `self += c * rhs`
    pub fn add_scaled(&mut self, c: u32, rhs: &Mat) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            if b != 0 {
                *a = f.add(*a, f.mul(c, b));
            }
        }
    }

    fn with_data(&self, data: Vec<u32>) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product: `(a⊗b)[i·rows(b)+k, j·cols(b)+l] = a[i,j]·b[k,l]`.
    pub fn kron(&self, b: &Mat) -> Mat {
        let f = self.field;
        let (br, bc) = (b.rows, b.cols);
        let mut out = Mat::zeros(f, self.rows * br, self.cols * bc);
        let oc = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..br {
                    let base = (i * br + k) * oc + j * bc;
                    for l in 0..bc {
                        let v = b.data[k * bc + l];
                        if v != 0 {
                            out.data[base + l] = f.mul(a, v);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Mat::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].copy_from_slice(rhs.row(i));
        }
        out
    }

    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn vstack_all(field: Field, cols: usize, parts: &[Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn block_diag(field: Field, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                out.row_mut(r0 + i)[c0..c0 + b.cols].copy_from_slice(b.row(i));
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            let r = self.row(i);
            for (o, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + o] = r[j];
            }
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Mat {
        let mut out = Mat::zeros(self.field, rows.len(), cols.len());
        for (o, i) in rows.enumerate() {
            out.row_mut(o).copy_from_slice(&self.row(i)[cols.clone()]);
        }
        out
    }

    /// Reshape a row-major vector of length `rows*cols`.
    pub fn reshape(field: Field, v: &[u32], rows: usize, cols: usize) -> Mat {
        Mat::from_vec(field, rows, cols, v.to_vec())
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { mat: m, pivots }
    }

    /// Gauss-Jordan in place; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        self.rref_in_place_limited(self.cols)
    }

    /// Gauss-Jordan choosing pivots only among the first `limit` columns;
    /// row operations still act on full rows (augmented systems).
    pub fn rref_in_place_limited(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut nz: Vec<(usize, u32)> = Vec::new();
        for c in 0..limit.min(cols) {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            nz.clear();
            for j in c..cols {
                let v = self.data[r * cols + j];
                if v != 0 {
                    let v = f.mul(v, inv);
                    self.data[r * cols + j] = v;
                    nz.push((j, v));
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let fac = self.data[i * cols + c];
                if fac == 0 {
                    continue;
                }
                let row = &mut self.data[i * cols..(i + 1) * cols];
                for &(j, v) in &nz {
                    row[j] = f.sub_mul(row[j], fac, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows > self.cols {
            self.transpose().rref().rank()
        } else {
            self.rref().rank()
        }
    }

    /// Rows spanning `{v : v·self = 0}`; row count is `rows - rank`.
    pub fn kernel_basis(&self) -> Mat {
        let t = self.transpose().rref();
        let n = self.rows;
        let free: Vec<usize> = {
            let mut is_piv = vec![false; n];
            for &c in &t.pivots {
                is_piv[c] = true;
            }
            (0..n).filter(|&c| !is_piv[c]).collect()
        };
        let f = self.field;
        let mut out = Mat::zeros(f, free.len(), n);
        for (k, &fc) in free.iter().enumerate() {
            out.data[k * n + fc] = 1;
            for (r, &pc) in t.pivots.iter().enumerate() {
                out.data[k * n + pc] = f.neg(t.mat.get(r, fc));
            }
        }
        out
    }

    /// Some `x` with `x·self = b`, or `None` when `b` has a row outside the row space.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>> {
        if b.cols != self.cols {
            return Err(Error::DimensionMismatch {
                op: "solve",
                expected: self.cols,
                found: b.cols,
            });
        }
        let n = self.rows;
        // x·A = B  <=>  Aᵀ·xᵀ = Bᵀ : eliminate [Aᵀ | Bᵀ] on the first n columns
        let mut aug = self.transpose().hstack(&b.transpose());
        let pivots = aug.rref_in_place_limited(n);
        let rank = pivots.len();
        for i in rank..aug.rows {
            if aug.row(i)[n..].iter().any(|&x| x != 0) {
                return Ok(None);
            }
        }
        let mut x = Mat::zeros(self.field, b.rows, n);
        for (r, &pc) in pivots.iter().enumerate() {
            for k in 0..b.rows {
                x.data[k * n + pc] = aug.get(r, n + k);
            }
        }
        debug_assert!(x.mul(self) == *b);
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(self.field, n));
        let piv = aug.rref_in_place_limited(n);
        if piv.len() < n {
            return None;
        }
        Some(aug.submatrix(0..n, n..2 * n))
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat<{}x{} /{}>[", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(5);
        let id = Mat::identity(f, 2);
        let r = id.rref();
        assert_eq!(r.mat, id);
        assert_eq!(r.rank(), 2);

        let z = Mat::zeros(f, 3, 3);
        assert_eq!(z.rref().rank(), 0);
        assert!(z.rref().mat.is_zero());

        // hand reduction: row2 - 2*row1
        let m = Mat::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.mat, Mat::from_i64_rows(f, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        assert_eq!(Mat::identity(f, 3).kernel_basis().rows(), 0);
        let z = Mat::zeros(f, 3, 2);
        let k = z.kernel_basis();
        assert_eq!(k, Mat::identity(f, 3));

        let m = Mat::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&m).is_zero());
        // v = (a, b) with a + 2b = 0, 2a + 4b = 0 ⇒ v ∝ (2, 4)·? : (−2, 1) = (3, 1) ∝ (2, 4)·4 = (3, 1)
        let v = k.row(0);
        assert_eq!(f.mul(v[0], 1), f.mul(v[1], 3));
    }

    #[test]
    fn solve_examples() {
        let f = gf(7);
        let b = Mat::from_i64_rows(f, &[&[1, 2, 3], &[4, 5, 6]]);
        let x = Mat::identity(f, 3).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
        assert!(Mat::zeros(f, 3, 3).solve(&b).unwrap().is_none());
        assert!(Mat::zeros(f, 3, 2).solve(&b).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let a = Mat::random_invertible(f, 5, &mut rng);
            let x0 = Mat::random(f, 3, 5, &mut rng);
            let b = x0.mul(&a);
            let x = a.solve(&b).unwrap().unwrap();
            assert_eq!(x.mul(&a), b);
        }
    }

    #[test]
    fn kron_examples() {
        let f = gf(5);
        assert_eq!(
            Mat::identity(f, 2).kron(&Mat::identity(f, 3)),
            Mat::identity(f, 6)
        );
        let a = Mat::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        assert!(a.kron(&Mat::zeros(f, 2, 3)).is_zero());
        let b = Mat::from_i64_rows(f, &[&[0, 1], &[2, 3]]);
        let k = a.kron(&b);
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for l in 0..2 {
                        assert_eq!(k.get(i * 2 + r, j * 2 + l), f.mul(a.get(i, j), b.get(r, l)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_and_pow() {
        let f = gf(11);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = Mat::random_invertible(f, 4, &mut rng);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert!(Mat::zeros(f, 2, 2).inverse().is_none());
    }

    #[test]
    fn large_prime_product() {
        let f = gf(2147483647);
        let a = Mat::from_vec(f, 1, 2, vec![2147483646, 2147483646]);
        let b = Mat::from_vec(f, 2, 1, vec![2147483646, 2147483646]);
        assert_eq!(a.mul(&b).get(0, 0), 2);
    }
}
