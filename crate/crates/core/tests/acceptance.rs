mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{catalog, constructed, gf, rng, PRIMES};
use singeq_core::bimodule::{dual_basis, hom_dual_left, unit_map};
use singeq_core::catalog::{dual_numbers, local_xy, random_module, remark14, scaling_automorphism};
use singeq_core::homology::{
    bar_complex, hochschild, minimal_resolution, pd, sing_hom, HHMethod, SingHomVerdict,
};
use singeq_core::module::{decompose, hom_space, is_isomorphic};
use singeq_core::semcheck::{
    check_definition, check_nakayama, run_semcheck, strongly_right_nonsingular, SemDatum, Verdict,
    Witness,
};
use singeq_core::transfer::{
    check_additivity, check_composition, check_identity, check_vanishing,
    random_projective_bimodule,
};
use singeq_core::{Algebra, Bimodule, Mat, Module};

/// Every comparison below is exact.
const TOLERANCE: usize = 0;
/// Wall-clock budget per criterion.
const BUDGET: Duration = Duration::from_secs(120);
const TRIALS: usize = 64;
const SEED: u64 = 2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn twist_datum() -> SemDatum {
    let a = dual_numbers(gf(5));
    let m = Bimodule::twist(&a, &scaling_automorphism(&a, 2));
    let n = Bimodule::twist(&a, &scaling_automorphism(&a, 3));
    SemDatum::new(&a, &a, m, n).unwrap().with_seed(7)
}

fn local_algebra() -> Outcome {
    let a = local_xy(gf(5));
    let s = Module::simple(&a, 0);
    let omega = s.syzygy();
    ensure(omega.dim() == 2, format!("dim Ω(S) = {}", omega.dim()))?;
    let r = decompose(&omega, TRIALS, SEED).map_err(|e| e.to_string())?;
    let mult = r.multiplicities();
    ensure(
        mult.len() == 1
            && mult[0].1 == 2
            && is_isomorphic(&mult[0].0, &s, TRIALS, SEED)
                .unwrap()
                .is_yes(),
        "Ω(S) is not S ⊕ S",
    )?;
    let v = pd(&s, 10, TRIALS, SEED).map_err(|e| e.to_string())?;
    ensure(v.is_infinite(), format!("pd(S) = {}", v.label()))?;
    let h = sing_hom(&s, &s, 6, 2).map_err(|e| e.to_string())?;
    ensure(
        h.stage_dims.len() >= 4 && h.stage_dims[..4] == [1, 4, 16, 64],
        format!("stages {:?}", h.stage_dims),
    )?;
    ensure(
        matches!(h.verdict, SingHomVerdict::NotStabilized { .. }),
        h.verdict.label(),
    )?;
    Ok(format!(
        "Ω(S) ≅ S², pd {}, stages {:?}, {}",
        v.label(),
        &h.stage_dims[..4],
        h.verdict.label()
    ))
}

fn remark_algebra() -> Outcome {
    let a = remark14(gf(5));
    ensure(a.dim() == 4, format!("dim {}", a.dim()))?;
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    let y1 = is_isomorphic(&s2.syzygy_power(2), &s1, TRIALS, SEED).map_err(|e| e.to_string())?;
    let y2 = is_isomorphic(&s1.syzygy_power(2), &s1, TRIALS, SEED).map_err(|e| e.to_string())?;
    ensure(
        y1.is_yes() && y2.is_yes(),
        format!("Ω²S₂ ≅ S₁: {}, Ω²S₁ ≅ S₁: {}", y1.label(), y2.label()),
    )?;
    let h = hom_space(&s1, &s2).map_err(|e| e.to_string())?;
    ensure(h.dim() == 0, format!("dim Hom(S₁, S₂) = {}", h.dim()))?;
    let d = sing_hom(&s2, &s2, 6, 2).map_err(|e| e.to_string())?;
    ensure(d.verdict.dim() == Some(1), d.verdict.label())?;
    Ok(format!(
        "Ω²S₂ ≅ S₁ ≅ Ω²S₁, Hom(S₁, S₂) = 0, {}",
        d.verdict.label()
    ))
}

fn hochschild_oracle() -> Outcome {
    let f5 = gf(5);
    let suite: Vec<(&str, Algebra, Option<[usize; 5]>)> = vec![
        ("local", local_xy(f5), None),
        ("two-vertex", remark14(f5), None),
        ("GF(2)[x]/x²", dual_numbers(gf(2)), Some([2, 2, 2, 2, 2])),
        ("GF(5)[x]/x²", dual_numbers(f5), Some([2, 1, 1, 1, 1])),
        ("T₂", Algebra::ground(f5).triangular2(), None),
    ];
    let mut out = Vec::new();
    for (name, a, expected) in suite {
        let min = hochschild(&a, 4, HHMethod::Minimal)
            .map_err(|e| format!("{name}: {e}"))?
            .dims;
        let bar = hochschild(&a, 4, HHMethod::Bar)
            .map_err(|e| format!("{name}: {e}"))?
            .dims;
        ensure(
            min == bar,
            format!("{name}: minimal {min:?} vs bar {bar:?}"),
        )?;
        if let Some(x) = expected {
            ensure(min == x, format!("{name}: {min:?}, expected {x:?}"))?;
        }
        out.push(format!("{name} {min:?}"));
    }
    Ok(out.join(", "))
}

// the tolerance is pinned at zero, so the comparison is an equality
#[allow(clippy::absurd_extreme_comparisons)]
fn transfer_axioms() -> Outcome {
    let algs = catalog(5);
    let mut g = rng(SEED);
    let mut worst = 0;
    let mut count = 0;
    let mut note = |dev: usize, what: String| -> Result<(), String> {
        count += 1;
        worst = worst.max(dev);
        ensure(dev <= TOLERANCE, format!("{what}: deviation {dev}"))
    };
    for a in &algs {
        for n in 0..=3 {
            let c = check_identity(a, n).map_err(|e| e.to_string())?;
            note(c.deviation, format!("identity, degree {n}"))?;
            if n == 0 {
                continue;
            }
            for i in 0..a.num_idempotents() {
                for j in 0..a.num_idempotents() {
                    let c = check_vanishing(a, i, a, j, n).map_err(|e| e.to_string())?;
                    note(c.deviation, format!("vanishing {}, degree {n}", c.instance))?;
                }
            }
        }
    }
    for k in 0..20 {
        let a = &algs[k % algs.len()];
        let l = random_projective_bimodule(a, a, &mut g).map_err(|e| e.to_string())?;
        let n = random_projective_bimodule(a, a, &mut g).map_err(|e| e.to_string())?;
        for d in 1..=3 {
            let c = check_additivity(&l, &n, d).map_err(|e| e.to_string())?;
            note(c.deviation, format!("additivity #{k}, degree {d}"))?;
        }
    }
    for k in 0..10 {
        let a = &algs[k % algs.len()];
        let b = &algs[(k + 2) % algs.len()];
        let m = random_projective_bimodule(a, b, &mut g).map_err(|e| e.to_string())?;
        let n = random_projective_bimodule(b, a, &mut g).map_err(|e| e.to_string())?;
        for d in 1..=3 {
            let c = check_composition(&m, &n, d).map_err(|e| e.to_string())?;
            note(c.deviation, format!("composition #{k}, degree {d}"))?;
        }
    }
    Ok(format!("{count} identities, max deviation {worst}"))
}

fn twist_end_to_end() -> Outcome {
    let d = twist_datum();
    let r = run_semcheck(&d);
    for name in [
        "condition1",
        "condition2",
        "condition3",
        "condition4",
        "key_isomorphism",
        "hh_invariance",
    ] {
        ensure(
            r.verdict(name) == Some(Verdict::Pass),
            format!("{name}: {:?}", r.verdict(name)),
        )?;
    }
    let (x, y) = (r.x.as_ref().map(|c| c.dim), r.y.as_ref().map(|c| c.dim));
    ensure(
        x == Some(0) && y == Some(0),
        format!("X, Y dims {x:?}, {y:?}"),
    )?;
    let k = r.key_iso.as_ref().ok_or("no key isomorphism report")?;
    ensure(
        k.rows.len() == 4
            && k.rows
                .iter()
                .all(|w| w.lhs_dim == w.rhs_dim && w.lhs_homology == w.rhs_homology),
        "key isomorphism rows disagree",
    )?;
    let hh = r.hh.as_ref().ok_or("no HH comparison")?;
    ensure(hh.a.dims == hh.b.dims, "HH dims differ")?;
    ensure(r.transfer.len() == 3, "expected degrees 1..3")?;
    for t in &r.transfer {
        ensure(
            t.hh_a == t.hh_b && t.rank_m == t.hh_a && t.nm_identity && t.mn_identity,
            format!("degree {}: {t:?}", t.degree),
        )?;
    }
    ensure(
        r.reverify(&d).map_err(|e| e.to_string())?,
        "witnesses do not reverify",
    )?;
    Ok(format!(
        "X = Y = 0, key iso degrees 0-3 agree, HH {:?}, transfers invertible",
        hh.a.dims
    ))
}

fn dual_and_unit_on_twist() -> Outcome {
    let d = twist_datum();
    let dual = hom_dual_left(&d.m).map_err(|e| e.to_string())?;
    let iso =
        is_isomorphic(dual.module(), d.n.module(), TRIALS, SEED).map_err(|e| e.to_string())?;
    let phi: Mat = iso
        .witness()
        .cloned()
        .ok_or(format!("Hom(M, A) vs N: {}", iso.label()))?;
    ensure(phi.inverse().is_some(), "witness is not invertible")?;
    let unit = unit_map(&d.m).map_err(|e| e.to_string())?;
    ensure(
        unit.is_injective() && unit.cokernel.is_zero(),
        format!("kernel {}, U dim {}", unit.kernel_dim, unit.cokernel.dim()),
    )?;
    let srn = strongly_right_nonsingular(&unit.cokernel, 6, TRIALS, SEED);
    ensure(srn.verdict == Verdict::Pass, srn.detail.clone())?;
    let nak = check_nakayama(&d);
    ensure(
        !nak.is_empty() && nak.iter().all(|c| c.passed()),
        "nakayama checks failed",
    )?;
    Ok(format!(
        "Hom(M, A) ≅ N, η injective with U = 0, {} nakayama checks",
        nak.len()
    ))
}

fn property_suites() -> Outcome {
    let mut n = 0;
    for p in PRIMES {
        for a in constructed(p) {
            a.validate()
                .into_result()
                .map_err(|e| format!("{a:?}: {e}"))?;
            let f = a.field();
            let mut sum = vec![0u32; a.dim()];
            for e in a.idempotents() {
                for (s, x) in sum.iter_mut().zip(e) {
                    *s = f.add(*s, *x);
                }
            }
            ensure(sum == a.unit(), "idempotents do not sum to 1")?;
            n += 1;
        }
        for a in catalog(p) {
            let deg = if a.dim() > 3 { 3 } else { 4 };
            ensure(
                bar_complex(&a, deg)
                    .map_err(|e| e.to_string())?
                    .is_complex(),
                "b∘b ≠ 0",
            )?;
            let mut g = rng(SEED ^ p);
            for _ in 0..4 {
                let m = random_module(&a, 3, &mut g);
                let r = minimal_resolution(&m, 4);
                ensure(
                    r.verify() && r.is_minimal(),
                    "resolution not exact or not minimal",
                )?;
                let u = random_projective_bimodule(&a, &a, &mut g).map_err(|e| e.to_string())?;
                ensure(
                    dual_basis(&u).map_err(|e| e.to_string())?.verify(&u),
                    "dual basis identity fails",
                )?;
            }
        }
    }
    let d = twist_datum();
    let x = serde_json::to_string(&run_semcheck(&d)).unwrap();
    let y = serde_json::to_string(&run_semcheck(&d)).unwrap();
    ensure(x == y, "reports differ across runs")?;
    Ok(format!(
        "{n} constructed algebras, bar complexes, resolutions, dual bases, determinism"
    ))
}

fn negative_controls() -> Outcome {
    let a = dual_numbers(gf(5));
    let f = a.field();
    let acts: Vec<Mat> = (0..a.dim())
        .map(|k| Mat::from_fn(f, 1, 1, |_, _| a.characters().get(k, 0)))
        .collect();
    let simple = Bimodule::from_actions(&a, &a, 1, &acts, &acts).map_err(|e| e.to_string())?;
    let d = SemDatum::new(&a, &a, Bimodule::regular(&a), simple).map_err(|e| e.to_string())?;
    let def = check_definition(&d);
    let c2 = def
        .checks
        .iter()
        .find(|c| c.name == "condition2")
        .ok_or("no condition2")?;
    ensure(
        c2.verdict == Verdict::Fail,
        format!("condition2: {:?}", c2.verdict),
    )?;
    ensure(
        matches!(&c2.witness, Some(Witness::Sides { sides }) if sides.iter().any(|s| !s.projective)),
        "no side witness",
    )?;
    let l = local_xy(f);
    let c = strongly_right_nonsingular(&Bimodule::regular(&l), 6, TRIALS, SEED);
    ensure(
        c.verdict == Verdict::Fail,
        format!("strongly_right_nonsingular: {:?}", c.verdict),
    )?;
    match &c.witness {
        Some(Witness::Pd {
            verdict: v @ singeq_core::homology::PdVerdict::InfiniteByCycle(cert),
            ..
        }) => ensure(
            v.is_infinite() && cert.verify(),
            "certificate does not verify",
        )?,
        other => return Err(format!("unexpected witness {other:?}")),
    }
    Ok(
        "condition2 fails with side witness; local regular bimodule fails by cycle certificate"
            .into(),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("local algebra", local_algebra),
        ("two-vertex algebra", remark_algebra),
        ("Hochschild oracle", hochschild_oracle),
        ("transfer axioms", transfer_axioms),
        ("twist end-to-end", twist_end_to_end),
        ("dual and unit on twist", dual_and_unit_on_twist),
        ("property suites", property_suites),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > BUDGET => Err(format!("{msg}; took {took:.1?}, budget {BUDGET:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg} ({took:.1?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} ({took:.1?})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
