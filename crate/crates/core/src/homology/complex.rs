use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Quotient, SparseMat, Subspace};

/// Largest boundary matrix (rows × columns) the bar method will build.
pub const BAR_ENTRY_CAP: u128 = 1 << 22;

/// A finite piece of a chain complex: `boundaries[n]: C_n → C_{n-1}`
/// (`boundaries[0]` has no columns).
#[derive(Clone, Debug)]
pub struct Complex {
    pub dims: Vec<usize>,
    pub boundaries: Vec<SparseMat>,
}

impl Complex {
    /// Homology dimensions in degrees `0..dims.len()-1`; the top degree is
    /// only used for the incoming boundary.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(SparseMat::rank).collect();
        (0..self.dims.len().saturating_sub(1))
            .map(|n| self.dims[n] - ranks[n] - ranks[n + 1])
            .collect()
    }

    /// `∂_{n}∘∂_{n+1} = 0` in every computed degree.
    pub fn is_complex(&self) -> bool {
        (1..self.boundaries.len()).all(|n| {
            self.boundaries[n]
                .to_dense()
                .mul(&self.boundaries[n - 1].to_dense())
                .is_zero()
        })
    }
}

fn sparse_rows(m: &Mat) -> Vec<Vec<(usize, u32)>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|e| *e.1 != 0)
                .map(|(j, &v)| (j, v))
                .collect()
        })
        .collect()
}

fn check_cap(what: &str, rows: u128, cols: u128) -> Result<()> {
    let needed = rows.saturating_mul(cols);
    if needed > BAR_ENTRY_CAP {
        return Err(Error::SizeCap {
            what: what.to_string(),
            needed,
            cap: BAR_ENTRY_CAP,
            hint: "use the minimal-resolution method or a lower degree",
        });
    }
    Ok(())
}

/// Boundary of the Hochschild complex `C_n(A, T) = T ⊗ A^{⊗n}` with
/// coefficients in an `A`–`A` bimodule `T`. The basis of `C_n` is indexed by
/// `x·d^n + (a_1 … a_n)` read as base-`d` digits, most significant first.
pub fn hochschild_boundary(t: &Bimodule, n: usize) -> Result<SparseMat> {
    let a = t.left();
    let f = t.field();
    let d = a.dim();
    let td = t.dim();
    let cols_n = |k: usize| td as u128 * (d as u128).pow(k as u32);
    if n == 0 {
        return Ok(SparseMat::new(f, td, 0));
    }
    check_cap("Hochschild boundary", cols_n(n), cols_n(n - 1))?;
    let rows = cols_n(n) as usize;
    let cols = cols_n(n - 1) as usize;
    let rho: Vec<Vec<Vec<(usize, u32)>>> = t.right_actions().iter().map(sparse_rows).collect();
    let lambda: Vec<Vec<Vec<(usize, u32)>>> = t.left_actions().iter().map(sparse_rows).collect();
    let block = d.pow(n as u32 - 1);
    let mut m = SparseMat::new(f, rows, cols);
    let mut digits = vec![0usize; n];
    for r in 0..rows {
        let x = r / (block * d);
        let mut rest = r % (block * d);
        for k in (0..n).rev() {
            digits[k] = rest % d;
            rest /= d;
        }
        // x·a_1 ⊗ a_2 … a_n
        let tail: usize = digits[1..].iter().fold(0, |acc, &k| acc * d + k);
        for &(y, c) in &rho[digits[0]][x] {
            m.push(r, y * block + tail, c);
        }
        // x ⊗ … a_i a_{i+1} …
        for i in 0..n - 1 {
            let sign = f.sign(i + 1);
            for &(k, c) in a.product(digits[i], digits[i + 1]) {
                let mut idx = x;
                for (j, &dj) in digits.iter().enumerate() {
                    if j == i + 1 {
                        continue;
                    }
                    idx = idx * d + if j == i { k as usize } else { dj };
                }
                m.push(r, idx, f.mul(sign, c));
            }
        }
        // ± a_n·x ⊗ a_1 … a_{n-1}
        let head: usize = digits[..n - 1].iter().fold(0, |acc, &k| acc * d + k);
        let sign = f.sign(n);
        for &(y, c) in &lambda[digits[n - 1]][x] {
            m.push(r, y * block + head, f.mul(sign, c));
        }
    }
    m.finalize();
    Ok(m)
}

/// `C_0 … C_{n_max+1}` of the Hochschild complex with coefficients in `T`.
pub fn hochschild_complex(t: &Bimodule, n_max: usize) -> Result<Complex> {
    let d = t.left().dim();
    let mut dims = Vec::with_capacity(n_max + 2);
    let mut boundaries = Vec::with_capacity(n_max + 2);
    for n in 0..=n_max + 1 {
        dims.push(t.dim() * d.pow(n as u32));
        boundaries.push(hochschild_boundary(t, n)?);
    }
    Ok(Complex { dims, boundaries })
}

/// The bar complex `C_n(A) = A^{⊗(n+1)}` with the Hochschild boundary.
pub fn bar_complex(a: &Algebra, n_max: usize) -> Result<Complex> {
    hochschild_complex(&Bimodule::regular(a), n_max)
}

/// `H_n = Z_n / B_n` with explicit cycle representatives.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub cycles: Subspace,
    /// `Z_n / B_n` in the coordinates of `cycles`.
    pub quotient: Quotient,
}

impl HomologyBasis {
    /// `d_n: C_n → C_{n-1}` and `d_{n+1}: C_{n+1} → C_n`.
    pub fn new(d_n: &Mat, d_next: &Mat) -> HomologyBasis {
        let cycles = Subspace::span(&d_n.kernel_basis());
        let bounds = cycles.coords_mat(&Subspace::span(d_next).basis().clone());
        let quotient = Quotient::new(Subspace::span(&bounds));
        HomologyBasis { cycles, quotient }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn field(&self) -> Field {
        self.cycles.field()
    }

    /// Cycle representatives, one per row.
    pub fn reps(&self) -> Mat {
        self.quotient.lift().mul(self.cycles.basis())
    }

    /// Class of a chain, `None` unless it is a cycle.
    pub fn class(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.cycles.coords(v).map(|c| self.quotient.project(&c))
    }
}
