#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use singeq_core::catalog::{a2, dual_numbers, local_xy, remark14};
use singeq_core::{Algebra, Field};

pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn gf(p: u64) -> Field {
    Field::new(p).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The small algebras every suite runs over.
pub fn catalog(p: u64) -> Vec<Algebra> {
    let f = gf(p);
    vec![
        remark14(f),
        local_xy(f),
        dual_numbers(f),
        a2(f),
        Algebra::truncated_polynomial(f, 3).unwrap(),
        Algebra::ground(f).triangular2(),
    ]
}

/// Catalog plus opposites, envelopes and a triangular matrix algebra.
pub fn constructed(p: u64) -> Vec<Algebra> {
    let base = catalog(p);
    let mut out = base.clone();
    for a in &base {
        out.push(a.opposite());
    }
    out.push(base[0].enveloping());
    out.push(base[2].envelope_with(&base[3]).unwrap());
    out.push(base[2].triangular2());
    out
}
