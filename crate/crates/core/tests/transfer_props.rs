mod common;

use common::{catalog, rng, PRIMES};
use proptest::prelude::*;
use rand::Rng;
use singeq_core::bimodule::dual_basis;
use singeq_core::module::hom_space;
use singeq_core::transfer::{
    check_additivity, check_composition, is_chain_map, random_projective_bimodule, transfer_hh_with,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn transfers_are_chain_maps(pi in 0..4usize, ai in 0..6usize, bi in 0..6usize, seed: u64) {
        let algs = catalog(PRIMES[pi]);
        let m = random_projective_bimodule(&algs[ai], &algs[bi], &mut rng(seed)).unwrap();
        let db = dual_basis(&m).unwrap();
        for n in 1..=2 {
            prop_assert!(is_chain_map(&m, &db, n).unwrap());
        }
    }

    #[test]
    fn induced_map_ignores_dual_basis(pi in 0..4usize, ai in 0..6usize, seed: u64) {
        let a = &catalog(PRIMES[pi])[ai];
        let mut g = rng(seed);
        let m = random_projective_bimodule(a, a, &mut g).unwrap();
        let db = dual_basis(&m).unwrap();
        let mr = m.restrict_right();
        let end = hom_space(&mr, &mr).unwrap();
        let p = m.field().p();
        let theta = (0..8)
            .map(|_| {
                let c: Vec<u32> = (0..end.dim()).map(|_| g.gen_range(0..p)).collect();
                end.combine(&c)
            })
            .find(|t| t.inverse().is_some());
        if let Some(theta) = theta {
            let other = db.transformed(&theta).unwrap();
            prop_assert!(other.verify(&m));
            for n in 1..=2 {
                let x = transfer_hh_with(&m, &db, n).unwrap().induced;
                let y = transfer_hh_with(&m, &other, n).unwrap().induced;
                prop_assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn additivity_and_composition(pi in 0..4usize, ai in 0..6usize, seed: u64) {
        let a = &catalog(PRIMES[pi])[ai];
        let mut g = rng(seed);
        let l = random_projective_bimodule(a, a, &mut g).unwrap();
        let n = random_projective_bimodule(a, a, &mut g).unwrap();
        for d in 1..=2 {
            prop_assert!(check_additivity(&l, &n, d).unwrap().pass());
            prop_assert!(check_composition(&l, &n, d).unwrap().pass());
        }
    }
}
