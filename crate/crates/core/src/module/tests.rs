use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::catalog::{dual_numbers, local_xy, random_module, remark14};

fn gf(p: u64) -> Field {
    Field::new(p).unwrap()
}

#[test]
fn projectives_and_simples() {
    let a = remark14(gf(5));
    let ps = Module::projectives(&a);
    assert_eq!(ps.iter().map(Module::dim).collect::<Vec<_>>(), [2, 2]);
    assert_eq!(Module::simples(&a).len(), 2);
    for m in ps.iter().chain(Module::simples(&a).iter()) {
        m.validate().unwrap();
    }
    let l = local_xy(gf(5));
    assert_eq!(Module::projectives(&l)[0].dim(), 3);
}

#[test]
fn hom_examples() {
    let a = remark14(gf(5));
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
    let end = hom_space(&s1, &s1).unwrap();
    assert_eq!(end.dim(), 1);
    assert!(end.coords(&Mat::identity(gf(5), 1)).is_some());
    let l = local_xy(gf(5));
    let s = Module::simple(&l, 0);
    assert_eq!(hom_space(&s, &Module::regular(&l)).unwrap().dim(), 2);
}

#[test]
fn cover_of_simple_over_local_algebra() {
    let l = local_xy(gf(5));
    let s = Module::simple(&l, 0);
    assert_eq!(s.cover().dim(), 3);
    let omega = s.syzygy();
    assert_eq!(omega.dim(), 2);
    let rep = decompose(&omega, 16, 1).unwrap();
    assert!(rep.verify(&omega));
    assert_eq!(rep.classes.len(), 1);
    assert_eq!(rep.classes[0].1, 2);
    assert!(is_isomorphic(&rep.summands[0].module, &s, 16, 1)
        .unwrap()
        .is_yes());
}

#[test]
fn remark14_syzygies() {
    let a = remark14(gf(5));
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    assert!(is_isomorphic(&s2.syzygy(), &s1, 8, 0).unwrap().is_yes());
    assert!(is_isomorphic(&s1.syzygy(), &s1, 8, 0).unwrap().is_yes());
    assert!(is_isomorphic(&s2.syzygy_power(2), &s1, 8, 0)
        .unwrap()
        .is_yes());
    assert!(is_isomorphic(&s1.syzygy_power(2), &s1, 8, 0)
        .unwrap()
        .is_yes());
    assert!(is_isomorphic(&s1, &s2, 8, 0).unwrap().is_no());
    for p in Module::projectives(&a) {
        assert!(p.syzygy().is_zero());
        assert!(p.is_projective());
    }
}

#[test]
fn zero_module_has_zero_cover() {
    let a = remark14(gf(3));
    let z = Module::zero(&a);
    assert_eq!(z.cover().dim(), 0);
    assert!(z.syzygy().is_zero());
}

#[test]
fn decompose_sum_of_simples() {
    let a = remark14(gf(5));
    let m = Module::direct_sum(&[Module::simple(&a, 0), Module::simple(&a, 1)]).unwrap();
    let rep = decompose(&m, 8, 3).unwrap();
    assert!(rep.verify(&m));
    assert_eq!(rep.classes.len(), 2);
    assert_eq!(rep.certificate, Certificate::Exhaustive);
    let p = Module::projective(&a, 0);
    let rep = decompose(&p, 8, 3).unwrap();
    assert_eq!(rep.summands.len(), 1);
}

#[test]
fn nakayama_and_duality() {
    let k = dual_numbers(gf(5));
    let reg = Module::regular(&k);
    assert!(is_isomorphic(&reg.nakayama(), &reg, 8, 0).unwrap().is_yes());
    let a = remark14(gf(5));
    for p in Module::projectives(&a) {
        let nu = p.nakayama();
        nu.validate().unwrap();
        assert!(nu.is_injective());
    }
    let m = Module::direct_sum(&[Module::simple(&a, 1), Module::projective(&a, 0)]).unwrap();
    let dd = m.dual().dual();
    assert!(is_isomorphic(&dd, &m, 8, 0).unwrap().is_yes());
    // e2A = span{e2, β} is not injective: its dual is not projective
    assert!(!Module::projective(&a, 1).is_injective());
}

#[test]
fn validate_rejects_bad_unit() {
    let a = dual_numbers(gf(5));
    let f = gf(5);
    let m = Module::new(&a, 1, vec![Mat::zeros(f, 1, 1), Mat::zeros(f, 1, 1)]).unwrap();
    assert_eq!(m.validate(), Err(ModuleViolation::UnitNotIdentity));
}

#[test]
fn random_modules_are_valid_and_covers_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for a in [remark14(gf(3)), local_xy(gf(5))] {
        for _ in 0..10 {
            let m = random_module(&a, 3, &mut rng);
            m.validate().unwrap();
            let c = m.cover();
            assert_eq!(c.map.rank(), m.dim());
            // kernel inside P·J
            let pj = c.projective.radical_submodule();
            assert!(pj.contains_all(c.kernel.basis()));
            assert!(intertwines(&c.projective, &m, &c.map));
        }
    }
}
