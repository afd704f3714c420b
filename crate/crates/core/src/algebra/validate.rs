use std::fmt;

use serde::Serialize;

use super::Algebra;
use crate::linalg::{Mat, Subspace};

/// Evidence that an algebra is split basic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBasicCertificate {
    pub dim: usize,
    pub idempotents: usize,
    pub radical_dim: usize,
    /// Smallest `k` with `J^k = 0`.
    pub nilpotency_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    NonAssociative {
        i: usize,
        j: usize,
        k: usize,
    },
    UnitLaw {
        i: usize,
    },
    NotIdempotent {
        i: usize,
    },
    NotOrthogonal {
        i: usize,
        j: usize,
    },
    IdempotentSum,
    RadicalNotIdeal {
        radical_index: usize,
        basis_index: usize,
        left: bool,
    },
    RadicalNotNilpotent {
        steps: usize,
    },
    RadicalDependent,
    NotSplitBasic {
        quotient_dim: usize,
        idempotents: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonAssociative { i, j, k } => {
                write!(f, "(b{i}·b{j})·b{k} ≠ b{i}·(b{j}·b{k})")
            }
            Violation::UnitLaw { i } => write!(f, "unit does not fix basis element b{i}"),
            Violation::NotIdempotent { i } => write!(f, "e{i}·e{i} ≠ e{i}"),
            Violation::NotOrthogonal { i, j } => write!(f, "e{i}·e{j} ≠ 0"),
            Violation::IdempotentSum => write!(f, "idempotents do not sum to the unit"),
            Violation::RadicalNotIdeal {
                radical_index,
                basis_index,
                left,
            } => {
                if *left {
                    write!(f, "b{basis_index}·r{radical_index} leaves the radical span")
                } else {
                    write!(f, "r{radical_index}·b{basis_index} leaves the radical span")
                }
            }
            Violation::RadicalNotNilpotent { steps } => {
                write!(f, "radical span is not nilpotent after {steps} powers")
            }
            Violation::RadicalDependent => write!(f, "radical vectors are linearly dependent"),
            Violation::NotSplitBasic {
                quotient_dim,
                idempotents,
            } => write!(
                f,
                "A/J has dimension {quotient_dim} but there are {idempotents} idempotents with \
                 independent images; only split basic algebras are supported"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Validation {
    Pass(SplitBasicCertificate),
    Fail(Violation),
}

impl Validation {
    pub fn is_pass(&self) -> bool {
        matches!(self, Validation::Pass(_))
    }

    pub fn into_result(self) -> crate::Result<SplitBasicCertificate> {
        match self {
            Validation::Pass(c) => Ok(c),
            Validation::Fail(v) => Err(crate::Error::InvalidAlgebra(v.to_string())),
        }
    }
}

pub(super) fn validate(a: &Algebra) -> Validation {
    match run(a) {
        Ok(c) => Validation::Pass(c),
        Err(v) => Validation::Fail(v),
    }
}

fn run(a: &Algebra) -> Result<SplitBasicCertificate, Violation> {
    let f = a.field();
    let d = a.dim();
    let mut lhs = vec![0u32; d];
    let mut rhs = vec![0u32; d];
    for i in 0..d {
        for j in 0..d {
            let ij = a.product(i, j);
            for k in 0..d {
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                for &(l, c) in ij {
                    for &(m, e) in a.product(l as usize, k) {
                        let m = m as usize;
                        lhs[m] = f.add(lhs[m], f.mul(c, e));
                    }
                }
                for &(l, c) in a.product(j, k) {
                    for &(m, e) in a.product(i, l as usize) {
                        let m = m as usize;
                        rhs[m] = f.add(rhs[m], f.mul(c, e));
                    }
                }
                if lhs != rhs {
                    return Err(Violation::NonAssociative { i, j, k });
                }
            }
        }
    }
    let one = a.unit();
    for i in 0..d {
        let b = a.basis_vector(i);
        if a.mul(one, &b) != b || a.mul(&b, one) != b {
            return Err(Violation::UnitLaw { i });
        }
    }
    let es = a.idempotents();
    let mut sum = vec![0u32; d];
    for (i, e) in es.iter().enumerate() {
        for (j, g) in es.iter().enumerate() {
            let p = a.mul(e, g);
            if i == j && p != *e {
                return Err(Violation::NotIdempotent { i });
            }
            if i != j && p.iter().any(|&x| x != 0) {
                return Err(Violation::NotOrthogonal { i, j });
            }
        }
        for (s, &x) in sum.iter_mut().zip(e) {
            *s = f.add(*s, x);
        }
    }
    if sum != one {
        return Err(Violation::IdempotentSum);
    }
    let rad = a.radical();
    let rad_mat = Mat::from_rows(f, d, rad);
    let jspan = Subspace::span(&rad_mat);
    if jspan.dim() != rad.len() {
        return Err(Violation::RadicalDependent);
    }
    for (s, r) in rad.iter().enumerate() {
        for k in 0..d {
            let b = a.basis_vector(k);
            if !jspan.contains(&a.mul(&b, r)) {
                return Err(Violation::RadicalNotIdeal {
                    radical_index: s,
                    basis_index: k,
                    left: true,
                });
            }
            if !jspan.contains(&a.mul(r, &b)) {
                return Err(Violation::RadicalNotIdeal {
                    radical_index: s,
                    basis_index: k,
                    left: false,
                });
            }
        }
    }
    // J^{k+1} = J^k·J
    let mut power = jspan.clone();
    let mut index = 1;
    while power.dim() > 0 {
        if index > d {
            return Err(Violation::RadicalNotNilpotent { steps: d });
        }
        let mut rows = Vec::new();
        for x in 0..power.dim() {
            for r in rad {
                rows.push(a.mul(power.basis().row(x), r));
            }
        }
        let next = Subspace::span(&Mat::from_rows(f, d, &rows));
        if next.dim() == power.dim() {
            return Err(Violation::RadicalNotNilpotent { steps: index });
        }
        power = next;
        index += 1;
    }
    let mut with_e = jspan.clone();
    let independent = es.iter().filter(|e| with_e.insert(e)).count();
    if d - rad.len() != es.len() || independent != es.len() {
        return Err(Violation::NotSplitBasic {
            quotient_dim: d - rad.len(),
            idempotents: independent,
        });
    }
    Ok(SplitBasicCertificate {
        dim: d,
        idempotents: es.len(),
        radical_dim: rad.len(),
        nilpotency_index: index,
    })
}
