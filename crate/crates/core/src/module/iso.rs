use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{hom_space, HomSpace, Module};
use crate::error::Result;
use crate::linalg::Mat;

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// An invertible homomorphism `M → N`.
    Yes(Mat),
    No(String),
    Undecided {
        trials: usize,
    },
}

#[derive(Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
enum IsoVerdictRepr<'a> {
    Yes { witness: &'a Mat },
    No { reason: &'a str },
    Undecided { trials: usize },
}

impl Serialize for IsoVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            IsoVerdict::Yes(w) => IsoVerdictRepr::Yes { witness: w },
            IsoVerdict::No(r) => IsoVerdictRepr::No { reason: r },
            IsoVerdict::Undecided { trials } => IsoVerdictRepr::Undecided { trials: *trials },
        }
        .serialize(s)
    }
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }

    pub fn witness(&self) -> Option<&Mat> {
        match self {
            IsoVerdict::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Yes(_) => "yes",
            IsoVerdict::No(_) => "no",
            IsoVerdict::Undecided { .. } => "undecided",
        }
    }
}

/// Exhaustive search over `Hom(M, N)` is used below this many elements.
const EXHAUSTIVE_LIMIT: u64 = 1 << 12;

pub fn is_isomorphic(m: &Module, n: &Module, trials: usize, seed: u64) -> Result<IsoVerdict> {
    m.same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::No(format!(
            "dimensions {} and {}",
            m.dim(),
            n.dim()
        )));
    }
    if m.dim() == 0 {
        return Ok(IsoVerdict::Yes(Mat::zeros(m.field(), 0, 0)));
    }
    if m.dimension_vector() != n.dimension_vector() {
        return Ok(IsoVerdict::No("dimension vectors differ".into()));
    }
    if m.top_multiplicities() != n.top_multiplicities() {
        return Ok(IsoVerdict::No(format!(
            "top multiplicities {:?} and {:?}",
            m.top_multiplicities(),
            n.top_multiplicities()
        )));
    }
    let mn = hom_space(m, n)?;
    let nm = hom_space(n, m)?;
    if mn.dim() != nm.dim() {
        return Ok(IsoVerdict::No(format!(
            "dim Hom(M,N) = {} but dim Hom(N,M) = {}",
            mn.dim(),
            nm.dim()
        )));
    }
    let em = hom_space(m, m)?.dim();
    let en = hom_space(n, n)?.dim();
    if em != mn.dim() || en != mn.dim() {
        return Ok(IsoVerdict::No(format!(
            "dim End(M) = {em}, dim End(N) = {en}, dim Hom(M,N) = {}",
            mn.dim()
        )));
    }
    Ok(search_invertible(&mn, trials, seed))
}

pub(crate) fn search_invertible(h: &HomSpace, trials: usize, seed: u64) -> IsoVerdict {
    let n = h.source.dim();
    let p = h.source.field().p() as u64;
    let k = h.dim();
    let invertible = |f: &Mat| f.rank() == n;
    for b in &h.basis {
        if invertible(b) {
            return IsoVerdict::Yes(b.clone());
        }
    }
    let total = (k as u32)
        .checked_mul(64 - p.leading_zeros())
        .filter(|&bits| bits <= 40)
        .map(|_| p.pow(k as u32));
    if let Some(total) = total.filter(|&t| t <= EXHAUSTIVE_LIMIT) {
        let mut c = vec![0u32; k];
        for mut x in 0..total {
            for ci in c.iter_mut() {
                *ci = (x % p) as u32;
                x /= p;
            }
            let f = h.combine(&c);
            if invertible(&f) {
                return IsoVerdict::Yes(f);
            }
        }
        return IsoVerdict::No("exhaustive search found no invertible homomorphism".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let c: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p as u32)).collect();
        let f = h.combine(&c);
        if invertible(&f) {
            return IsoVerdict::Yes(f);
        }
    }
    IsoVerdict::Undecided { trials }
}
