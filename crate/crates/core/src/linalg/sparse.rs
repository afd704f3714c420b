use std::collections::HashMap;

use super::{Field, Mat};

/// Sparse matrix assembled from triplets; rows are sorted `(col, val)` lists.
///
/// Only rank is needed from it: bar-complex boundaries get too big for dense
/// elimination around degree 4 but stay very sparse.
#[derive(Clone, Debug)]
pub struct SparseMat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(u32, u32)>>,
}

impl SparseMat {
    pub fn new(field: Field, rows: usize, cols: usize) -> Self {
        SparseMat {
            field,
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    /// Accumulates `v` into entry `(i, j)`.
    pub fn push(&mut self, i: usize, j: usize, v: u32) {
        let v = v % self.field.p();
        if v != 0 {
            self.data[i].push((j as u32, v));
        }
    }

    /// Sorts rows and merges duplicate columns.
    pub fn finalize(&mut self) {
        let f = self.field;
        for row in self.data.iter_mut() {
            row.sort_unstable_by_key(|e| e.0);
            let mut out: Vec<(u32, u32)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match out.last_mut() {
                    Some(last) if last.0 == c => last.1 = f.add(last.1, v),
                    _ => out.push((c, v)),
                }
            }
            out.retain(|e| e.1 != 0);
            *row = out;
        }
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, self.cols);
        for (i, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                m.set(i, c as usize, v);
            }
        }
        m
    }

    pub fn from_dense(m: &Mat) -> Self {
        let mut s = SparseMat::new(m.field(), m.rows(), m.cols());
        for i in 0..m.rows() {
            for (j, &v) in m.row(i).iter().enumerate() {
                if v != 0 {
                    s.data[i].push((j as u32, v));
                }
            }
        }
        s
    }

    /// Row-by-row elimination keyed on leading columns.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut pivots: HashMap<u32, Vec<(u32, u32)>> = HashMap::new();
        let mut scratch: Vec<(u32, u32)> = Vec::new();
        let mut order: Vec<usize> = (0..self.rows).collect();
        // short rows first keeps fill-in down
        order.sort_by_key(|&i| self.data[i].len());
        for i in order {
            let mut row = self.data[i].clone();
            while let Some(&(lead, val)) = row.first() {
                match pivots.get(&lead) {
                    Some(prow) => {
                        // row -= val * prow (prow is monic)
                        scratch.clear();
                        let (mut a, mut b) = (0, 0);
                        while a < row.len() || b < prow.len() {
                            let ca = row.get(a).map_or(u32::MAX, |e| e.0);
                            let cb = prow.get(b).map_or(u32::MAX, |e| e.0);
                            if ca < cb {
                                scratch.push(row[a]);
                                a += 1;
                            } else if cb < ca {
                                scratch.push((cb, f.neg(f.mul(val, prow[b].1))));
                                b += 1;
                            } else {
                                let v = f.sub_mul(row[a].1, val, prow[b].1);
                                if v != 0 {
                                    scratch.push((ca, v));
                                }
                                a += 1;
                                b += 1;
                            }
                        }
                        std::mem::swap(&mut row, &mut scratch);
                    }
                    None => {
                        let inv = f.inv(val);
                        for e in row.iter_mut() {
                            e.1 = f.mul(e.1, inv);
                        }
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sparse_rank_matches_dense() {
        let f = Field::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let (r, c) = (rng.gen_range(1..30), rng.gen_range(1..30));
            let mut s = SparseMat::new(f, r, c);
            for _ in 0..rng.gen_range(0..60) {
                s.push(
                    rng.gen_range(0..r),
                    rng.gen_range(0..c),
                    rng.gen_range(0..5),
                );
            }
            s.finalize();
            assert_eq!(s.rank(), s.to_dense().rank());
        }
    }
}
