use super::Algebra;

pub(super) fn opposite(a: &Algebra) -> Algebra {
    let d = a.dim();
    let mut products = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            products[i * d + j] = a.product(j, i).to_vec();
        }
    }
    Algebra::from_parts(
        a.field(),
        a.labels().to_vec(),
        products,
        a.unit().to_vec(),
        a.idempotents().to_vec(),
        a.radical().to_vec(),
    )
}

fn tensor_vec(x: &[u32], y: &[u32], f: crate::linalg::Field) -> Vec<u32> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for &a in x {
        for &b in y {
            out.push(f.mul(a, b));
        }
    }
    out
}

/// `a^op ⊗ b` with basis `(i, j) ↦ i·dim(b) + j` and
/// `(a_i⊗b_j)(a_k⊗b_l) = (a_k a_i)⊗(b_j b_l)`.
pub(super) fn envelope(a: &Algebra, b: &Algebra) -> Algebra {
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut products = vec![Vec::new(); d * d];
    for i in 0..da {
        for k in 0..da {
            let left = a.product(k, i);
            if left.is_empty() {
                continue;
            }
            for j in 0..db {
                for l in 0..db {
                    let right = b.product(j, l);
                    if right.is_empty() {
                        continue;
                    }
                    let mut entry: Vec<(u32, u32)> = Vec::with_capacity(left.len() * right.len());
                    for &(p, c) in left {
                        for &(q, e) in right {
                            entry.push((p * db as u32 + q, f.mul(c, e)));
                        }
                    }
                    entry.sort_unstable_by_key(|x| x.0);
                    products[(i * db + j) * d + (k * db + l)] = entry;
                }
            }
        }
    }
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let unit = tensor_vec(a.unit(), b.unit(), f);
    let mut idempotents = Vec::new();
    for e in a.idempotents() {
        for g in b.idempotents() {
            idempotents.push(tensor_vec(e, g, f));
        }
    }
    // J(a)⊗b + a⊗J(b) = J(a)⊗b ⊕ span(e_i)⊗J(b) for split basic a
    let mut radical = Vec::new();
    for r in a.radical() {
        for j in 0..db {
            radical.push(tensor_vec(r, &b.basis_vector(j), f));
        }
    }
    for e in a.idempotents() {
        for r in b.radical() {
            radical.push(tensor_vec(e, r, f));
        }
    }
    Algebra::from_parts(f, labels, products, unit, idempotents, radical)
}

/// Upper triangular 2×2 matrices over `a`, blocks ordered (11, 12, 22).
pub(super) fn triangular2(a: &Algebra) -> Algebra {
    let n = a.dim();
    let d = 3 * n;
    let mut products = vec![Vec::new(); d * d];
    // (row, col) of each block and the block index of a product
    let pos = [(0usize, 0usize), (0, 1), (1, 1)];
    let block = |r: usize, c: usize| pos.iter().position(|&p| p == (r, c));
    for (x, &(r1, c1)) in pos.iter().enumerate() {
        for (y, &(r2, c2)) in pos.iter().enumerate() {
            if c1 != r2 {
                continue;
            }
            let z = block(r1, c2).expect("upper triangular is closed");
            for i in 0..n {
                for j in 0..n {
                    products[(x * n + i) * d + (y * n + j)] = a
                        .product(i, j)
                        .iter()
                        .map(|&(k, c)| ((z * n) as u32 + k, c))
                        .collect();
                }
            }
        }
    }
    let labels = ["11", "12", "22"]
        .iter()
        .flat_map(|b| a.labels().iter().map(move |l| format!("{b}:{l}")))
        .collect();
    let embed = |blk: usize, v: &[u32]| {
        let mut out = vec![0u32; d];
        out[blk * n..(blk + 1) * n].copy_from_slice(v);
        out
    };
    let mut unit = embed(0, a.unit());
    unit[2 * n..].copy_from_slice(a.unit());
    let mut idempotents: Vec<Vec<u32>> = a.idempotents().iter().map(|e| embed(0, e)).collect();
    idempotents.extend(a.idempotents().iter().map(|e| embed(2, e)));
    let mut radical: Vec<Vec<u32>> = a.radical().iter().map(|r| embed(0, r)).collect();
    radical.extend((0..n).map(|i| embed(1, &a.basis_vector(i))));
    radical.extend(a.radical().iter().map(|r| embed(2, r)));
    Algebra::from_parts(a.field(), labels, products, unit, idempotents, radical)
}
