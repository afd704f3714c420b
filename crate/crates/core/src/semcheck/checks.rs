use super::split::split_off_regular;
use super::{
    Check, DsgRow, HHComparison, Product, SemDatum, SideCheck, TransferRow, Verdict, Witness,
};
use crate::bimodule::{
    apply_tensor_functor, hom_dual_left, is_progenerator, tensor_over, trace_ideal, unit_map,
    Bimodule,
};
use crate::error::Result;
use crate::homology::{hochschild, key_isomorphism, pd, sing_hom, HHMethod, PdVerdict};
use crate::module::{decompose, is_isomorphic, IsoVerdict, Module};
use crate::transfer::transfer_hh;

fn side(label: &str, m: &Module) -> SideCheck {
    SideCheck {
        restriction: label.to_string(),
        dim: m.dim(),
        cover_dim: m.cover().projective.dim(),
        projective: m.is_projective(),
    }
}

fn sides_check(name: &str, sides: Vec<SideCheck>) -> Check {
    let bad: Vec<&str> = sides
        .iter()
        .filter(|s| !s.projective)
        .map(|s| s.restriction.as_str())
        .collect();
    let (verdict, detail) = if bad.is_empty() {
        (Verdict::Pass, "every restriction is projective".to_string())
    } else {
        (Verdict::Fail, format!("not projective: {}", bad.join(", ")))
    };
    Check::new(name, verdict, detail).with(Witness::Sides { sides })
}

fn pd_verdict_of(v: &PdVerdict) -> Verdict {
    match v {
        PdVerdict::Finite(_) => Verdict::Pass,
        PdVerdict::InfiniteByCycle(_) => Verdict::Fail,
        PdVerdict::Unknown(_) => Verdict::Undecided,
    }
}

#[derive(Clone, Debug)]
pub struct DefinitionOutcome {
    pub checks: Vec<Check>,
    /// `X` with `M ⊗_B N ≅ A ⊕ X`, and its projective dimension over `A^e`.
    pub x: Option<(Bimodule, PdVerdict)>,
    pub y: Option<(Bimodule, PdVerdict)>,
}

impl DefinitionOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn split_condition(
    d: &SemDatum,
    name: &str,
    product: Product,
) -> (Check, Option<(Bimodule, PdVerdict)>) {
    let (t, hint) = match product {
        Product::MN => (tensor_over(&d.m, &d.n), d.split_mn.as_ref()),
        Product::NM => (tensor_over(&d.n, &d.m), d.split_nm.as_ref()),
    };
    let t = match t {
        Ok(t) => t.bimodule,
        Err(e) => return (Check::from_error(name, &e), None),
    };
    let b = &d.bounds;
    let found = match split_off_regular(&t, hint, b.trials, d.seed) {
        Ok(r) => r,
        Err(e) => return (Check::from_error(name, &e), None),
    };
    let (Some(splitting), Some(x)) = (found.splitting, found.complement) else {
        let tried = found.candidates_tried;
        let check = if tried == 0 {
            Check::new(
                name,
                Verdict::Fail,
                "no bimodule map in one of the two directions",
            )
        } else {
            Check::new(
                name,
                Verdict::Undecided,
                format!("no splitting among {tried} candidates; this is not a proof of absence"),
            )
        };
        let w = Witness::NoSplitting {
            product,
            candidates_tried: tried,
        };
        return (check.with(w), None);
    };
    let verdict = match pd(x.module(), b.max_pd, b.trials, d.seed) {
        Ok(v) => v,
        Err(e) => return (Check::from_error(name, &e), None),
    };
    let check = Check::new(
        name,
        pd_verdict_of(&verdict),
        format!("complement of dim {} has pd {}", x.dim(), verdict.label()),
    )
    .with(Witness::Splitting {
        product,
        splitting,
        complement_dim: x.dim(),
        complement_pd: verdict.clone(),
    });
    (check, Some((x, verdict)))
}

/// The four defining conditions: `M` and `N` projective on both sides, and
/// `A`, `B` split off `M ⊗_B N`, `N ⊗_A M` with complements of finite
/// projective dimension over the envelopes.
pub fn check_definition(d: &SemDatum) -> DefinitionOutcome {
    let m = sides_check(
        "condition1",
        vec![
            side("M as left A-module", &d.m.restrict_left()),
            side("M as right B-module", &d.m.restrict_right()),
        ],
    );
    let n = sides_check(
        "condition2",
        vec![
            side("N as left B-module", &d.n.restrict_left()),
            side("N as right A-module", &d.n.restrict_right()),
        ],
    );
    let (c3, x) = split_condition(d, "condition3", Product::MN);
    let (c4, y) = split_condition(d, "condition4", Product::NM);
    DefinitionOutcome {
        checks: vec![m, n, c3, c4],
        x,
        y,
    }
}

/// `X` and `Y` are projective as one-sided modules.
pub fn check_side_projectivity(def: &DefinitionOutcome) -> Vec<Check> {
    let mut sides = Vec::new();
    for (label, c) in [("X", &def.x), ("Y", &def.y)] {
        if let Some((x, _)) = c {
            sides.push(side(&format!("{label} as left module"), &x.restrict_left()));
            sides.push(side(
                &format!("{label} as right module"),
                &x.restrict_right(),
            ));
        }
    }
    vec![sides_check("side_projectivity", sides)]
}

pub fn check_progenerators(d: &SemDatum) -> Vec<Check> {
    let parts = [
        ("M over A^op", d.m.restrict_left()),
        ("M over B", d.m.restrict_right()),
        ("N over B^op", d.n.restrict_left()),
        ("N over A", d.n.restrict_right()),
    ];
    let mut sides = Vec::new();
    let mut bad = Vec::new();
    for (label, m) in &parts {
        match (is_progenerator(m), trace_ideal(m)) {
            (Ok(ok), Ok(t)) => {
                sides.push((label.to_string(), t.dim(), m.algebra().dim()));
                if !ok {
                    bad.push(*label);
                }
            }
            (Err(e), _) | (_, Err(e)) => return vec![Check::from_error("progenerators", &e)],
        }
    }
    let check = if bad.is_empty() {
        Check::new(
            "progenerators",
            Verdict::Pass,
            "all four restrictions are progenerators",
        )
    } else {
        Check::new(
            "progenerators",
            Verdict::Fail,
            format!("not a progenerator: {}", bad.join(", ")),
        )
    };
    vec![check.with(Witness::TraceIdeals { sides })]
}

/// `Hom(M, A)` is projective over `B^op`.
fn dual_hypothesis(d: &SemDatum) -> Result<Option<Bimodule>> {
    let dual = hom_dual_left(&d.m)?;
    Ok(dual.restrict_left().is_projective().then_some(dual))
}

/// `Hom_{A^op}(M, A) ≅ N` over the envelope, then the unit map analysis.
pub fn check_dual_inverse(d: &SemDatum) -> Vec<Check> {
    let dual = match dual_hypothesis(d) {
        Ok(Some(dual)) => dual,
        Ok(None) => {
            return vec![Check::new(
                "dual_inverse",
                Verdict::Skipped,
                "hypothesis not satisfied: Hom(M, A) is not projective over B^op",
            )]
        }
        Err(e) => return vec![Check::from_error("dual_inverse", &e)],
    };
    let b = &d.bounds;
    let check = match is_isomorphic(dual.module(), d.n.module(), b.trials, d.seed) {
        Ok(IsoVerdict::Yes(map)) => Check::new("dual_inverse", Verdict::Pass, "Hom(M, A) ≅ N")
            .with(Witness::DualIsomorphism { map }),
        Ok(IsoVerdict::No(why)) => Check::new(
            "dual_inverse",
            Verdict::Fail,
            format!("Hom(M, A) and N differ: {why}"),
        ),
        Ok(v) => Check::new(
            "dual_inverse",
            Verdict::Undecided,
            format!("isomorphism search: {}", v.label()),
        ),
        Err(e) => Check::from_error("dual_inverse", &e),
    };
    let mut out = vec![check];
    out.extend(unit_cokernel_analysis(d));
    out
}

/// `η: B → End_A(M)`: injectivity, and the cokernel `U` is projective on the
/// right and strongly right nonsingular.
pub fn unit_cokernel_analysis(d: &SemDatum) -> Vec<Check> {
    let unit = match unit_map(&d.m) {
        Ok(u) => u,
        Err(e) => return vec![Check::from_error("unit_injective", &e)],
    };
    let u = &unit.cokernel;
    let w = Witness::UnitMap {
        kernel_dim: unit.kernel_dim,
        cokernel_dim: u.dim(),
    };
    let inj = if unit.is_injective() {
        Check::new(
            "unit_injective",
            Verdict::Pass,
            format!("cokernel U has dim {}", u.dim()),
        )
    } else {
        Check::new(
            "unit_injective",
            Verdict::Fail,
            format!("kernel of dim {}", unit.kernel_dim),
        )
    };
    let right = sides_check(
        "unit_cokernel_right_projective",
        vec![side("U as right B-module", &u.restrict_right())],
    );
    let b = &d.bounds;
    let srn = strongly_right_nonsingular(u, b.max_pd, b.trials, d.seed);
    vec![inj.with(w), right, srn]
}

/// `pd(S ⊗_B U) < ∞` for every simple `S`. Finite-dimensional modules are
/// iterated extensions of simples and `− ⊗_B U` is exact, so simples suffice.
pub fn strongly_right_nonsingular(
    u: &Bimodule,
    pd_bound: usize,
    trials: usize,
    seed: u64,
) -> Check {
    const NAME: &str = "strongly_right_nonsingular";
    if u.is_zero() {
        return Check::new(NAME, Verdict::Pass, "U = 0");
    }
    if !u.restrict_left().is_projective() || !u.restrict_right().is_projective() {
        return Check::new(
            NAME,
            Verdict::Skipped,
            "criterion inapplicable: U is not projective on both sides",
        );
    }
    let mut verdicts = Vec::new();
    for s in Module::simples(u.left()) {
        let t = match apply_tensor_functor(&s, u) {
            Ok(t) => t.module,
            Err(e) => return Check::from_error(NAME, &e),
        };
        match pd(&t, pd_bound, trials, seed) {
            Ok(v) => verdicts.push(v),
            Err(e) => return Check::from_error(NAME, &e),
        }
    }
    let labels: Vec<String> = verdicts.iter().map(PdVerdict::label).collect();
    let verdict = if let Some(i) = verdicts.iter().position(PdVerdict::is_infinite) {
        return Check::new(
            NAME,
            Verdict::Fail,
            format!("S{} ⊗ U has infinite projective dimension", i + 1),
        )
        .with(Witness::Pd {
            label: format!("S{} ⊗ U", i + 1),
            verdict: verdicts[i].clone(),
        });
    } else if verdicts.iter().all(PdVerdict::is_finite) {
        Verdict::Pass
    } else {
        Verdict::Undecided
    };
    Check::new(NAME, verdict, format!("pd(S ⊗ U): {}", labels.join(", ")))
        .with(Witness::Pds { verdicts })
}

/// `(− ⊗_A M)(ν Q_i)` and `ν((− ⊗_A M)(Q_i))`.
pub(crate) fn nakayama_pair(d: &SemDatum, i: usize) -> Result<(Module, Module)> {
    let q = Module::projective(&d.a, i);
    let lhs = apply_tensor_functor(&q.nakayama(), &d.m)?.module;
    let rhs = apply_tensor_functor(&q, &d.m)?.module.nakayama();
    Ok((lhs, rhs))
}

/// The functor `− ⊗_A M` on right modules commutes with the Nakayama
/// functors, sends injectives to injectives, and sends projective-injectives
/// to projective-injectives. Checked on the indecomposable projectives of `A`.
pub fn check_nakayama(d: &SemDatum) -> Vec<Check> {
    match dual_hypothesis(d) {
        Ok(Some(_)) => {}
        Ok(None) => {
            return vec![Check::new(
                "nakayama",
                Verdict::Skipped,
                "hypothesis not satisfied",
            )]
        }
        Err(e) => return vec![Check::from_error("nakayama", &e)],
    }
    let b = &d.bounds;
    (0..d.a.num_idempotents())
        .map(|i| {
            let name = format!("nakayama[{i}]");
            let (lhs, rhs) = match nakayama_pair(d, i) {
                Ok(p) => p,
                Err(e) => return Check::from_error(&name, &e),
            };
            let q = Module::projective(&d.a, i);
            let mut problems = Vec::new();
            if !lhs.is_injective() {
                problems.push("image of an injective is not injective".to_string());
            }
            if q.is_injective() {
                let fq = match apply_tensor_functor(&q, &d.m) {
                    Ok(t) => t.module,
                    Err(e) => return Check::from_error(&name, &e),
                };
                if !fq.is_projective() || !fq.is_injective() {
                    problems.push("a projective-injective is not sent to one".to_string());
                }
            }
            match is_isomorphic(&lhs, &rhs, b.trials, d.seed) {
                Ok(IsoVerdict::Yes(map)) if problems.is_empty() => {
                    Check::new(&name, Verdict::Pass, "ν commutes with the functor")
                        .with(Witness::NakayamaIsomorphism { vertex: i, map })
                }
                Ok(IsoVerdict::Yes(_)) => Check::new(&name, Verdict::Fail, problems.join("; ")),
                Ok(IsoVerdict::No(why)) => {
                    problems.push(format!("ν does not commute with the functor: {why}"));
                    Check::new(&name, Verdict::Fail, problems.join("; "))
                }
                Ok(v) => Check::new(
                    &name,
                    Verdict::Undecided,
                    format!("isomorphism search: {}", v.label()),
                ),
                Err(e) => Check::from_error(&name, &e),
            }
        })
        .collect()
}

/// Singularity-category Hom dimensions between simples agree before and
/// after applying `− ⊗_A M`.
pub fn check_dsg_equivalence_samples(d: &SemDatum) -> Vec<Check> {
    const NAME: &str = "dsg_samples";
    let b = &d.bounds;
    let simples = Module::simples(&d.a);
    let images: Result<Vec<Module>> = simples
        .iter()
        .map(|s| apply_tensor_functor(s, &d.m).map(|t| t.module))
        .collect();
    let images = match images {
        Ok(v) => v,
        Err(e) => return vec![Check::from_error(NAME, &e)],
    };
    let mut rows = Vec::new();
    let (mut open, mut differ) = (0, 0);
    for i in 0..simples.len() {
        for j in 0..simples.len() {
            let src = sing_hom(&simples[i], &simples[j], b.sing_stages, b.window);
            let tgt = sing_hom(&images[i], &images[j], b.sing_stages, b.window);
            let (src, tgt) = match (src, tgt) {
                (Ok(s), Ok(t)) => (s.verdict, t.verdict),
                (Err(e), _) | (_, Err(e)) => return vec![Check::from_error(NAME, &e)],
            };
            match (src.dim(), tgt.dim()) {
                (Some(x), Some(y)) if x != y => differ += 1,
                (Some(_), Some(_)) => {}
                _ => open += 1,
            }
            rows.push(DsgRow {
                pair: (i, j),
                source: src,
                target: tgt,
            });
        }
    }
    let total = rows.len();
    let check = if differ > 0 {
        Check::new(
            NAME,
            Verdict::Fail,
            format!("{differ} of {total} pairs differ"),
        )
    } else if open > 0 {
        Check::new(
            NAME,
            Verdict::Undecided,
            format!("{open} of {total} pairs did not stabilize"),
        )
    } else {
        Check::new(NAME, Verdict::Pass, format!("{total} pairs agree"))
    };
    vec![check.with(Witness::SingHom { rows })]
}

pub fn check_key_isomorphism(d: &SemDatum) -> Check {
    const NAME: &str = "key_isomorphism";
    match key_isomorphism(&d.m, &d.n, d.bounds.key_iso_degree) {
        Ok(report) => {
            let verdict = if report.agree {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            let detail = format!("degrees 0..={}", d.bounds.key_iso_degree);
            Check::new(NAME, verdict, detail).with(Witness::KeyIsomorphism { report })
        }
        Err(e) => Check::from_error(NAME, &e),
    }
}

fn transfer_vanishes(x: &Option<(Bimodule, PdVerdict)>, n: usize) -> Result<Option<bool>> {
    let Some((x, _)) = x else {
        return Ok(Some(true));
    };
    if x.is_zero() {
        return Ok(Some(true));
    }
    if !x.restrict_right().is_projective() {
        return Ok(None);
    }
    Ok(Some(transfer_hh(x, n)?.induced.is_zero()))
}

fn transfer_row(d: &SemDatum, def: &DefinitionOutcome, n: usize) -> Result<TransferRow> {
    let tm = transfer_hh(&d.m, n)?;
    let tn = transfer_hh(&d.n, n)?;
    Ok(TransferRow {
        degree: n,
        hh_a: tm.source.dim(),
        hh_b: tm.target.dim(),
        rank_m: tm.induced.rank(),
        rank_n: tn.induced.rank(),
        nm_identity: tm.induced.mul(&tn.induced).is_identity(),
        mn_identity: tn.induced.mul(&tm.induced).is_identity(),
        t_x_zero: transfer_vanishes(&def.x, n)?,
        t_y_zero: transfer_vanishes(&def.y, n)?,
    })
}

/// `HH_n(A) ≅ HH_n(B)` via `t_M` with inverse `t_N`, for `n = 1..=hh_degree`.
pub fn check_hh_invariance(
    d: &SemDatum,
    def: &DefinitionOutcome,
) -> (Check, Option<HHComparison>, Vec<TransferRow>) {
    const NAME: &str = "hh_invariance";
    let n_max = d.bounds.hh_degree;
    let tables = hochschild(&d.a, n_max, HHMethod::Bar).and_then(|a| {
        Ok(HHComparison {
            a,
            b: hochschild(&d.b, n_max, HHMethod::Bar)?,
        })
    });
    let hh = match tables {
        Ok(t) => t,
        Err(e) => return (Check::from_error(NAME, &e), None, Vec::new()),
    };
    let rows: Result<Vec<TransferRow>> = (1..=n_max).map(|n| transfer_row(d, def, n)).collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => return (Check::from_error(NAME, &e), Some(hh), Vec::new()),
    };
    let good = |r: &TransferRow| {
        r.hh_a == r.hh_b
            && r.rank_m == r.hh_a
            && r.nm_identity
            && r.mn_identity
            && r.t_x_zero != Some(false)
            && r.t_y_zero != Some(false)
    };
    let check = if rows.iter().all(good) {
        Check::new(
            NAME,
            Verdict::Pass,
            format!("t_M invertible with inverse t_N in degrees 1..={n_max}"),
        )
    } else {
        let bad: Vec<String> = rows
            .iter()
            .filter(|r| !good(r))
            .map(|r| r.degree.to_string())
            .collect();
        Check::new(
            NAME,
            Verdict::Fail,
            format!("fails in degrees {}", bad.join(", ")),
        )
    };
    let check = check.with(Witness::Transfer { rows: rows.clone() });
    (check, Some(hh), rows)
}

/// Exactly one indecomposable summand of `M` has infinite projective
/// dimension over the envelope.
pub fn check_unique_infinite_summand(d: &SemDatum) -> Check {
    const NAME: &str = "unique_infinite_summand";
    let b = &d.bounds;
    let report = match decompose(d.m.module(), b.trials, d.seed) {
        Ok(r) => r,
        Err(e) => return Check::from_error(NAME, &e),
    };
    let mut verdicts = Vec::new();
    for s in &report.summands {
        match pd(&s.module, b.max_pd, b.trials, d.seed) {
            Ok(v) => verdicts.push(v),
            Err(e) => return Check::from_error(NAME, &e),
        }
    }
    let infinite = verdicts.iter().filter(|v| v.is_infinite()).count();
    let unknown = verdicts
        .iter()
        .filter(|v| matches!(v, PdVerdict::Unknown(_)))
        .count();
    let k = verdicts.len();
    let check = if unknown > 0 {
        Check::new(
            NAME,
            Verdict::Undecided,
            format!("{unknown} of {k} summands have unknown pd"),
        )
    } else {
        match infinite {
            1 => Check::new(
                NAME,
                Verdict::Pass,
                format!("one of {k} summands has infinite pd"),
            ),
            0 => Check::new(
                NAME,
                Verdict::Skipped,
                "every summand has finite pd: the singularity categories are trivial",
            ),
            _ => Check::new(
                NAME,
                Verdict::Fail,
                format!("{infinite} of {k} summands have infinite pd"),
            ),
        }
    };
    check.with(Witness::Pds { verdicts })
}
