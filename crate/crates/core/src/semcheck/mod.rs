//! Verification of candidate singular equivalences of Morita type.
//!
//! A datum is a pair of bimodules `_A M_B`, `_B N_A`. The checks audit it
//! against the defining conditions and the consequences derived from them;
//! every check ends as a [`Check`] with a verdict and, where there is one, a
//! witness that can be re-verified without repeating any search.

mod checks;
mod split;

use serde::{Deserialize, Serialize};

pub use checks::{
    check_definition, check_dsg_equivalence_samples, check_dual_inverse, check_hh_invariance,
    check_key_isomorphism, check_nakayama, check_progenerators, check_side_projectivity,
    check_unique_infinite_summand, strongly_right_nonsingular, unit_cokernel_analysis,
    DefinitionOutcome,
};
pub use split::{split_off_regular, SplitResult, Splitting};

use crate::algebra::Algebra;
use crate::bimodule::{hom_dual_left, tensor_over, Bimodule};
use crate::error::{Error, Result};
use crate::homology::{HHTable, KeyIsoReport, PdVerdict, SingHomVerdict};
use crate::linalg::Mat;
use crate::module::{intertwines, Module};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Bounds {
    /// Syzygy depth for projective-dimension searches.
    pub max_pd: usize,
    pub trials: usize,
    pub hh_degree: usize,
    pub key_iso_degree: usize,
    pub sing_stages: usize,
    pub window: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_pd: 8,
            trials: 32,
            hh_degree: 3,
            key_iso_degree: 3,
            sing_stages: 4,
            window: 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SemDatum {
    pub a: Algebra,
    pub b: Algebra,
    /// An `A`–`B` bimodule.
    pub m: Bimodule,
    /// A `B`–`A` bimodule.
    pub n: Bimodule,
    /// Optional splitting of `A` off `M ⊗_B N`.
    pub split_mn: Option<Splitting>,
    /// Optional splitting of `B` off `N ⊗_A M`.
    pub split_nm: Option<Splitting>,
    pub bounds: Bounds,
    pub seed: u64,
}

impl SemDatum {
    pub fn new(a: &Algebra, b: &Algebra, m: Bimodule, n: Bimodule) -> Result<SemDatum> {
        if m.left() != a || m.right() != b {
            return Err(Error::AlgebraMismatch("M must be an A–B bimodule"));
        }
        if n.left() != b || n.right() != a {
            return Err(Error::AlgebraMismatch("N must be a B–A bimodule"));
        }
        m.validate()?;
        n.validate()?;
        Ok(SemDatum {
            a: a.clone(),
            b: b.clone(),
            m,
            n,
            split_mn: None,
            split_nm: None,
            bounds: Bounds::default(),
            seed: 0,
        })
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// `M = N = A`.
    pub fn identity(a: &Algebra) -> SemDatum {
        let r = Bimodule::regular(a);
        SemDatum::new(a, a, r.clone(), r).expect("regular bimodule is valid")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
    Skipped,
}

/// A one-sided restriction and the size of its projective cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCheck {
    pub restriction: String,
    pub dim: usize,
    pub cover_dim: usize,
    pub projective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DsgRow {
    pub pair: (usize, usize),
    pub source: SingHomVerdict,
    pub target: SingHomVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferRow {
    pub degree: usize,
    pub hh_a: usize,
    pub hh_b: usize,
    pub rank_m: usize,
    pub rank_n: usize,
    /// `t_N ∘ t_M = Id` on `HH_n(A)`.
    pub nm_identity: bool,
    /// `t_M ∘ t_N = Id` on `HH_n(B)`.
    pub mn_identity: bool,
    /// `t_X = 0`, `None` when `X` is not projective on the right.
    pub t_x_zero: Option<bool>,
    pub t_y_zero: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Product {
    /// `M ⊗_B N`.
    MN,
    /// `N ⊗_A M`.
    NM,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Sides {
        sides: Vec<SideCheck>,
    },
    Splitting {
        product: Product,
        splitting: Splitting,
        complement_dim: usize,
        complement_pd: PdVerdict,
    },
    NoSplitting {
        product: Product,
        candidates_tried: usize,
    },
    /// `φ: Hom(M, A) → N` over the envelope of `B` and `A`.
    DualIsomorphism {
        map: Mat,
    },
    /// `φ: F(ν Q_i) → ν F(Q_i)` with `F = − ⊗_A M`.
    NakayamaIsomorphism {
        vertex: usize,
        map: Mat,
    },
    TraceIdeals {
        sides: Vec<(String, usize, usize)>,
    },
    UnitMap {
        kernel_dim: usize,
        cokernel_dim: usize,
    },
    Pd {
        label: String,
        verdict: PdVerdict,
    },
    Pds {
        verdicts: Vec<PdVerdict>,
    },
    SingHom {
        rows: Vec<DsgRow>,
    },
    KeyIsomorphism {
        report: KeyIsoReport,
    },
    Transfer {
        rows: Vec<TransferRow>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(name: &str, verdict: Verdict, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            verdict,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with(mut self, w: Witness) -> Check {
        self.witness = Some(w);
        self
    }

    pub(crate) fn from_error(name: &str, e: &Error) -> Check {
        Check::new(name, Verdict::Undecided, e.to_string())
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Complement {
    pub dim: usize,
    pub pd: PdVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct HHComparison {
    pub a: HHTable,
    pub b: HHTable,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemReport {
    pub checks: Vec<Check>,
    pub x: Option<Complement>,
    pub y: Option<Complement>,
    pub hh: Option<HHComparison>,
    pub transfer: Vec<TransferRow>,
    pub key_iso: Option<KeyIsoReport>,
}

impl SemReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.check(name).map(|c| c.verdict)
    }

    /// `0` when nothing failed or stayed open, `1` on a failure, `2` when
    /// something is undecided but nothing failed.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            1
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Undecided) {
            2
        } else {
            0
        }
    }

    /// Re-checks every stored witness against the datum.
    pub fn reverify(&self, d: &SemDatum) -> Result<bool> {
        for c in &self.checks {
            if c.verdict != Verdict::Pass {
                continue;
            }
            if let Some(w) = &c.witness {
                if !w.verify(d)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl Witness {
    pub fn verify(&self, d: &SemDatum) -> Result<bool> {
        Ok(match self {
            Witness::Splitting {
                product,
                splitting,
                complement_pd,
                ..
            } => {
                let t = match product {
                    Product::MN => tensor_over(&d.m, &d.n)?.bimodule,
                    Product::NM => tensor_over(&d.n, &d.m)?.bimodule,
                };
                splitting.verify(&t) && pd_witness_ok(complement_pd)
            }
            Witness::DualIsomorphism { map } => {
                let dual = hom_dual_left(&d.m)?;
                is_iso(dual.module(), d.n.module(), map)
            }
            Witness::NakayamaIsomorphism { vertex, map } => {
                let (lhs, rhs) = checks::nakayama_pair(d, *vertex)?;
                is_iso(&lhs, &rhs, map)
            }
            Witness::Pd { verdict, .. } => pd_witness_ok(verdict),
            Witness::Pds { verdicts } => verdicts.iter().all(pd_witness_ok),
            _ => true,
        })
    }
}

fn is_iso(m: &Module, n: &Module, f: &Mat) -> bool {
    f.is_square() && intertwines(m, n, f) && f.rank() == f.rows()
}

fn pd_witness_ok(v: &PdVerdict) -> bool {
    match v {
        PdVerdict::InfiniteByCycle(c) => c.verify(),
        _ => true,
    }
}

/// All checks, in dependency order.
pub fn run_semcheck(d: &SemDatum) -> SemReport {
    let mut checks = Vec::new();
    let def = check_definition(d);
    checks.extend(def.checks.iter().cloned());
    let defined = def.passed();
    let complement = |pd: &Option<(Bimodule, PdVerdict)>| {
        pd.as_ref().map(|(x, v)| Complement {
            dim: x.dim(),
            pd: v.clone(),
        })
    };
    let (x, y) = (complement(&def.x), complement(&def.y));
    let gate = |name: &str| {
        Check::new(
            name,
            Verdict::Skipped,
            "the defining conditions do not hold",
        )
    };
    if defined {
        checks.extend(check_side_projectivity(&def));
    } else {
        checks.push(gate("side_projectivity"));
    }
    checks.extend(check_progenerators(d));
    if defined {
        checks.extend(check_dual_inverse(d));
        checks.extend(check_nakayama(d));
        checks.extend(check_dsg_equivalence_samples(d));
    } else {
        for name in ["dual_inverse", "nakayama", "dsg_samples"] {
            checks.push(gate(name));
        }
    }
    let key = check_key_isomorphism(d);
    let key_iso = match &key.witness {
        Some(Witness::KeyIsomorphism { report }) => Some(report.clone()),
        _ => None,
    };
    checks.push(key);
    let (mut hh, mut transfer) = (None, Vec::new());
    if defined {
        let (c, table, rows) = check_hh_invariance(d, &def);
        checks.push(c);
        hh = table;
        transfer = rows;
    } else {
        checks.push(gate("hh_invariance"));
    }
    checks.push(check_unique_infinite_summand(d));
    SemReport {
        checks,
        x,
        y,
        hh,
        transfer,
        key_iso,
    }
}
