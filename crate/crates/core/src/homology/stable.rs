use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{Mat, Quotient, Subspace};
use crate::module::{hom_space, HomSpace, Module};

/// `Hom(M, N)` modulo maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom: HomSpace,
    /// Maps factoring through the cover of `N`, in `hom` coordinates.
    pub null: Subspace,
    pub quotient: Quotient,
}

impl StableHom {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Representatives of a basis of the quotient.
    pub fn reps(&self) -> Vec<Mat> {
        let lift = self.quotient.lift();
        (0..self.dim())
            .map(|k| self.hom.combine(lift.row(k)))
            .collect()
    }

    /// Class of a homomorphism.
    pub fn class(&self, f: &Mat) -> Option<Vec<u32>> {
        self.hom.coords(f).map(|c| self.quotient.project(&c))
    }
}

pub fn stable_hom(m: &Module, n: &Module) -> Result<StableHom> {
    let hom = hom_space(m, n)?;
    let null = crate::module::projective_factoring(&hom)?;
    let quotient = Quotient::new(null.clone());
    Ok(StableHom {
        hom,
        null,
        quotient,
    })
}

/// `Ωf: ΩV → ΩW` for a homomorphism `f: V → W`, in the bases of the syzygies.
pub fn omega_map(v: &Module, w: &Module, f: &Mat) -> Mat {
    let fld = v.field();
    let a = v.algebra();
    let (cv, cw) = (v.cover(), w.cover());
    let pw = &cw.projective;
    // per vertex: basis of P_W e_i and its image in W
    let mut lifts: HashMap<usize, (Mat, Mat)> = HashMap::new();
    let mut big = Mat::zeros(fld, cv.dim(), cw.dim());
    for (s, b) in cv.blocks.iter().enumerate() {
        let (basis, image) = lifts.entry(b.vertex).or_insert_with(|| {
            let basis = pw.vertex_space(b.vertex).basis().clone();
            let image = basis.mul(&cw.map);
            (basis, image)
        });
        let y = f.vec_mul(cv.generators.row(s));
        let x = image
            .solve(&Mat::row_vector(fld, &y))
            .expect("shapes agree")
            .expect("cover is surjective on each vertex space");
        let z = basis.vec_mul(x.row(0));
        let zk = Mat::from_rows(
            fld,
            cw.dim(),
            &pw.action()
                .iter()
                .map(|r| r.vec_mul(&z))
                .collect::<Vec<_>>(),
        );
        let block = a.projective(b.vertex).basis.basis().mul(&zk);
        for t in 0..b.dim {
            big.row_mut(b.offset + t).copy_from_slice(block.row(t));
        }
    }
    let restricted = cv.kernel.basis().mul(&big);
    cw.kernel.coords_mat(&restricted)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SingHomVerdict {
    Stabilized { dim: usize, from_stage: usize },
    NotStabilized { bound: usize },
}

impl SingHomVerdict {
    pub fn label(&self) -> String {
        match self {
            SingHomVerdict::Stabilized { dim, .. } => format!("Stabilized({dim})"),
            SingHomVerdict::NotStabilized { bound } => format!("NotStabilized({bound})"),
        }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            SingHomVerdict::Stabilized { dim, .. } => Some(*dim),
            SingHomVerdict::NotStabilized { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingHomReport {
    /// `dim` of the stable Hom between `Ω^i V` and `Ω^i W`.
    pub stage_dims: Vec<usize>,
    /// `ranks[i][k-1]` is the rank of the composite of `k` transitions from stage `i`.
    pub ranks: Vec<Vec<usize>>,
    pub window: usize,
    pub verdict: SingHomVerdict,
    /// Stages were cut off by the size cap before `i_max` was reached.
    pub truncated: bool,
}

/// Stages whose plain Hom space exceeds this dimension are not computed.
pub const STAGE_HOM_CAP: usize = 256;

struct Stages {
    modules: Vec<(Module, Module)>,
    stable: Vec<StableHom>,
    /// `transitions[i]: stage i → stage i+1`.
    transitions: Vec<Mat>,
}

impl Stages {
    /// Makes stages `0..=n` available; false when the cap was hit.
    fn ensure(&mut self, n: usize) -> Result<bool> {
        while self.stable.len() <= n {
            let i = self.stable.len();
            if i > 0 {
                let (v, w) = &self.modules[i - 1];
                let next = (v.syzygy(), w.syzygy());
                self.modules.push(next);
            }
            let (v, w) = &self.modules[i];
            // a homomorphism is fixed by the images of the top generators
            let bound: usize = v
                .cover()
                .blocks
                .iter()
                .map(|b| w.dimension_vector()[b.vertex])
                .sum();
            if bound > STAGE_HOM_CAP {
                return Ok(false);
            }
            let st = stable_hom(v, w)?;
            self.stable.push(st);
            if i > 0 {
                let t = self.transition(i - 1);
                self.transitions.push(t);
            }
        }
        Ok(true)
    }

    fn transition(&self, i: usize) -> Mat {
        let (v, w) = &self.modules[i];
        let src = &self.stable[i];
        let dst = &self.stable[i + 1];
        let f = v.field();
        let rows: Vec<Vec<u32>> = src
            .reps()
            .iter()
            .map(|rep| {
                let om = omega_map(v, w, rep);
                dst.class(&om)
                    .expect("Ω of a homomorphism is a homomorphism")
            })
            .collect();
        Mat::from_rows(f, dst.dim(), &rows)
    }

    fn composite_rank(&self, i: usize, k: usize) -> usize {
        let mut m = self.transitions[i].clone();
        for j in i + 1..i + k {
            m = m.mul(&self.transitions[j]);
        }
        m.rank()
    }
}

/// Hom in the singularity category as the colimit of stable Homs along syzygies.
pub fn sing_hom(v: &Module, w: &Module, i_max: usize, window: usize) -> Result<SingHomReport> {
    v.same_algebra(w)?;
    let window = window.max(1);
    let mut st = Stages {
        modules: vec![(v.clone(), w.clone())],
        stable: Vec::new(),
        transitions: Vec::new(),
    };
    let mut ranks: Vec<Vec<usize>> = Vec::new();
    let mut verdict = None;
    let mut truncated = false;
    let mut i = 0;
    while i <= i_max {
        if !st.ensure(i)? {
            truncated = true;
            break;
        }
        if st.stable[i].dim() == 0 {
            verdict = Some(SingHomVerdict::Stabilized {
                dim: 0,
                from_stage: i,
            });
            break;
        }
        if !st.ensure(i + 1 + window)? {
            truncated = true;
            break;
        }
        while ranks.len() <= i + 1 {
            let j = ranks.len();
            ranks.push((1..=window).map(|k| st.composite_rank(j, k)).collect());
        }
        let c = ranks[i][0];
        if ranks[i].iter().chain(&ranks[i + 1]).all(|&r| r == c) {
            verdict = Some(SingHomVerdict::Stabilized {
                dim: c,
                from_stage: i,
            });
            break;
        }
        i += 1;
    }
    let verdict = verdict.unwrap_or(SingHomVerdict::NotStabilized {
        bound: i.min(i_max),
    });
    Ok(SingHomReport {
        stage_dims: st.stable.iter().map(StableHom::dim).collect(),
        ranks,
        window,
        verdict,
        truncated,
    })
}
