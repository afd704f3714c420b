mod common;

use common::{catalog, gf, rng, PRIMES};
use proptest::prelude::*;
use rand::Rng;
use singeq_core::catalog::scaling_automorphism;
use singeq_core::semcheck::{run_semcheck, strongly_right_nonsingular, Bounds, SemDatum, Verdict};
use singeq_core::{Algebra, Bimodule};

fn small_bounds() -> Bounds {
    Bounds {
        max_pd: 4,
        trials: 16,
        hh_degree: 2,
        key_iso_degree: 2,
        sing_stages: 3,
        window: 2,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn twisted_data_pass(pi in 1..4usize, n in 2..4usize, c in 2u32..7, seed: u64) {
        let f = gf(PRIMES[pi]);
        let c = c % f.p();
        prop_assume!(c != 0);
        let a = Algebra::truncated_polynomial(f, n).unwrap();
        let m = Bimodule::twist(&a, &scaling_automorphism(&a, c));
        let nn = Bimodule::twist(&a, &scaling_automorphism(&a, f.inv(c)));
        let d = SemDatum::new(&a, &a, m, nn).unwrap().with_bounds(small_bounds()).with_seed(seed);
        let r = run_semcheck(&d);
        for ch in &r.checks {
            prop_assert!(ch.verdict == Verdict::Pass, "{}: {:?} {}", ch.name, ch.verdict, ch.detail);
        }
        prop_assert!(r.reverify(&d).unwrap());
    }

    #[test]
    fn reports_depend_only_on_the_seed(ai in 0..6usize, seed: u64) {
        let a = &catalog(5)[ai];
        let d = SemDatum::identity(a).with_bounds(small_bounds()).with_seed(seed);
        let x = serde_json::to_string(&run_semcheck(&d)).unwrap();
        let y = serde_json::to_string(&run_semcheck(&d)).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn projective_bimodules_are_strongly_right_nonsingular(pi in 0..4usize, ai in 0..6usize, seed: u64) {
        let a = &catalog(PRIMES[pi])[ai];
        let mut g = rng(seed);
        let r = a.num_idempotents();
        let parts: Vec<Bimodule> = (0..g.gen_range(1..=3))
            .map(|_| Bimodule::projective(a, g.gen_range(0..r), a, g.gen_range(0..r)).unwrap())
            .collect();
        let u = Bimodule::direct_sum(&parts).unwrap();
        let c = strongly_right_nonsingular(&u, 4, 8, seed);
        prop_assert_eq!(c.verdict, Verdict::Pass, "{}", c.detail);
    }
}
