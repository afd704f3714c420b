mod common;

use common::{catalog, gf, rng, PRIMES};
use proptest::prelude::*;
use singeq_core::catalog::random_module;
use singeq_core::homology::{bar_complex, hochschild, minimal_resolution, sing_hom, HHMethod};
use singeq_core::{Algebra, Module};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_minimal_and_exact(pi in 0..4usize, ai in 0..6usize, seed: u64) {
        let a = &catalog(PRIMES[pi])[ai];
        let m = random_module(a, 3, &mut rng(seed));
        let r = minimal_resolution(&m, 4);
        prop_assert!(r.verify());
        prop_assert!(r.is_minimal());
    }

    #[test]
    fn sing_hom_is_shift_invariant(pi in 0..4usize, ai in 0..6usize, seed: u64) {
        let a = &catalog(PRIMES[pi])[ai];
        let mut g = rng(seed);
        let (v, w) = (random_module(a, 2, &mut g), random_module(a, 2, &mut g));
        let here = sing_hom(&v, &w, 4, 2).unwrap().verdict.dim();
        let there = sing_hom(&v.syzygy(), &w.syzygy(), 4, 2).unwrap().verdict.dim();
        if let (Some(x), Some(y)) = (here, there) {
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn bar_boundaries_compose_to_zero() {
    for p in PRIMES {
        for a in catalog(p) {
            let n = if a.dim() > 3 { 3 } else { 4 };
            assert!(bar_complex(&a, n).unwrap().is_complex(), "{a:?}");
        }
    }
}

#[test]
fn truncated_polynomials_agree() {
    for p in PRIMES {
        for n in 2..=4 {
            let a = Algebra::truncated_polynomial(gf(p), n).unwrap();
            let min = hochschild(&a, 3, HHMethod::Minimal).unwrap().dims;
            let bar = hochschild(&a, 3, HHMethod::Bar).unwrap().dims;
            assert_eq!(min, bar, "p = {p}, n = {n}");
        }
    }
}

#[test]
fn projectives_resolve_in_one_step() {
    for a in catalog(5) {
        for p in Module::projectives(&a) {
            let r = minimal_resolution(&p, 3);
            assert!(r.verify() && r.is_minimal());
            assert!(p.syzygy().is_zero());
        }
    }
}
