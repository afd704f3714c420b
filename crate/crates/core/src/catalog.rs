//! Small algebras and random modules used by tests, benches and the CLI.

use rand::Rng;

use crate::algebra::{Algebra, QuiverPresentation};
use crate::linalg::{Field, Mat};
use crate::module::Module;

/// `KQ/⟨α², βα⟩` with a loop α at 1 and β: 2 → 1.
pub fn remark14(field: Field) -> Algebra {
    let mut q = QuiverPresentation::new(field, &["1", "2"]);
    q.arrow("α", "1", "1").unwrap();
    q.arrow("β", "2", "1").unwrap();
    q.relation(&["α", "α"]).unwrap();
    q.relation(&["β", "α"]).unwrap();
    q.build().unwrap()
}

/// `K[x, y]/(x², y², xy)`, three-dimensional and local.
pub fn local_xy(field: Field) -> Algebra {
    let mut q = QuiverPresentation::new(field, &["1"]);
    q.arrow("x", "1", "1").unwrap();
    q.arrow("y", "1", "1").unwrap();
    for r in [["x", "x"], ["y", "y"], ["x", "y"], ["y", "x"]] {
        q.relation(&r).unwrap();
    }
    q.build().unwrap()
}

/// `K[x]/(x²)`.
pub fn dual_numbers(field: Field) -> Algebra {
    Algebra::truncated_polynomial(field, 2).unwrap()
}

/// Path algebra of `1 → 2`.
pub fn a2(field: Field) -> Algebra {
    let mut q = QuiverPresentation::new(field, &["1", "2"]);
    q.arrow("a", "1", "2").unwrap();
    q.build().unwrap()
}

/// The automorphism `x ↦ c·x` of `K[x]/(x^n)` as a matrix on the path basis
/// (row `k` is the image of `x^k`).
pub fn scaling_automorphism(a: &Algebra, c: u32) -> Mat {
    let f = a.field();
    let d = a.dim();
    Mat::from_fn(f, d, d, |i, j| if i == j { f.pow(c, i as u64) } else { 0 })
}

/// A random module: the quotient of a sum of random indecomposable
/// projectives by the submodule generated by a few random vectors.
pub fn random_module<R: Rng>(a: &Algebra, max_summands: usize, rng: &mut R) -> Module {
    let r = a.num_idempotents();
    let k = rng.gen_range(1..=max_summands.max(1));
    let parts: Vec<Module> = (0..k)
        .map(|_| Module::projective(a, rng.gen_range(0..r)))
        .collect();
    let p = Module::direct_sum(&parts).unwrap();
    let relations = rng.gen_range(0..=p.dim().min(3));
    let rows = Mat::random(a.field(), relations, p.dim(), rng);
    let sub = p.generated_by(&rows);
    p.quotient(&sub).0
}
