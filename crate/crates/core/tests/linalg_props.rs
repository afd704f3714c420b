mod common;

use common::{gf, rng, PRIMES};
use proptest::prelude::*;
use singeq_core::{Mat, Subspace};

fn matrix(p: u64, rows: usize, cols: usize, seed: u64) -> Mat {
    Mat::random(gf(p), rows, cols, &mut rng(seed))
}

/// `rows × cols` with rank at most `r`.
fn low_rank(p: u64, rows: usize, cols: usize, r: usize, seed: u64) -> Mat {
    let mut g = rng(seed);
    let a = Mat::random(gf(p), rows, r, &mut g);
    a.mul(&Mat::random(gf(p), r, cols, &mut g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_of_transpose(pi in 0..4usize, rows in 1..12usize, cols in 1..12usize, r in 0..6usize, seed: u64) {
        let m = low_rank(PRIMES[pi], rows, cols, r, seed);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= r);
    }

    #[test]
    fn kernel_rows_are_independent_and_killed(pi in 0..4usize, rows in 1..12usize, cols in 1..12usize, r in 0..6usize, seed: u64) {
        let m = low_rank(PRIMES[pi], rows, cols, r, seed);
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows(), rows - m.rank());
        prop_assert!(k.mul(&m).is_zero());
        prop_assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn rank_is_multiplicative_under_kron(pi in 0..4usize, r1 in 1..5usize, r2 in 1..5usize, seed: u64) {
        let p = PRIMES[pi];
        let a = low_rank(p, 4, 5, r1, seed);
        let b = low_rank(p, 3, 4, r2, seed ^ 0x55);
        prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn solve_finds_preimages(pi in 0..4usize, n in 1..8usize, seed: u64) {
        let p = PRIMES[pi];
        let a = matrix(p, n, n + 2, seed);
        let x = matrix(p, 2, n, seed ^ 1);
        let b = x.mul(&a);
        let y = a.solve(&b).unwrap().expect("b lies in the row space");
        prop_assert_eq!(y.mul(&a), b);
    }

    #[test]
    fn subspace_coordinates_round_trip(pi in 0..4usize, n in 1..10usize, k in 1..6usize, seed: u64) {
        let p = PRIMES[pi];
        let s = Subspace::span(&matrix(p, k, n, seed));
        let c = matrix(p, 1, s.dim(), seed ^ 2);
        let v = c.mul(s.basis());
        prop_assert!(s.contains(v.row(0)));
        prop_assert_eq!(s.coords(v.row(0)).unwrap(), c.row(0).to_vec());
    }
}
