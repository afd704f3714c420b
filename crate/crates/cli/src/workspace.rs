//! The JSON workspace format.
//!
//! ```json
//! {
//!   "config": {"seed": 0, "trials": 32, "max": 6},
//!   "algebras": {
//!     "A": {"field": 5, "kind": "quiver", "quiver": {
//!       "vertices": ["1", "2"],
//!       "arrows": [{"name": "α", "src": "1", "tgt": "1"}, {"name": "β", "src": "2", "tgt": "1"}],
//!       "relations": [["α", "α"], ["β", "α"]]}}
//!   },
//!   "modules": {"S2": {"algebra": "A", "dim": 1, "action": {"e1": [[0]], "e2": [[1]]}}},
//!   "bimodules": {"M": {"left": "A", "right": "A", "module": {"dim": 4, "action": {"e1⊗e1": [[...]]}}}},
//!   "sem": {"twist": {"A": "A", "B": "A", "M": "M", "N": "N", "bounds": {"max_pd": 8}, "seed": 7}}
//! }
//! ```
//!
//! Relations list arrows in the order they are traversed: `["β", "α"]` is the
//! path that runs along β and then α, so it must be composable (β ends where
//! α starts). In the example `αβ` is not a path at all.
//!
//! Paths are labelled by their arrows joined with `*` (`"β*α"`), trivial paths
//! by `e` followed by the vertex name. Module actions are row-major matrices
//! acting on row vectors from the right. An action may omit basis elements
//! that are products of listed ones; those are filled in by multiplying.
//! Envelope basis elements of a bimodule are labelled `a⊗b` with `a` from the
//! left algebra and `b` from the right one, ordered `(i, j) ↦ i·dim(B) + j`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use singeq_core::algebra::QuiverPresentation;
use singeq_core::semcheck::{Bounds, SemDatum, Splitting};
use singeq_core::{Algebra, Bimodule, Field, Mat, Module};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{at}: {msg}")]
    Schema { at: String, msg: String },
    #[error("{at}: {source}")]
    Invalid {
        at: String,
        source: singeq_core::Error,
    },
}

fn schema(at: &str, msg: impl Into<String>) -> InputError {
    InputError::Schema {
        at: at.to_string(),
        msg: msg.into(),
    }
}

fn invalid(at: &str) -> impl FnOnce(singeq_core::Error) -> InputError + '_ {
    move |source| InputError::Invalid {
        at: at.to_string(),
        source,
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    pub trials: usize,
    pub max: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            trials: 32,
            max: 6,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSpec {
    #[serde(default)]
    config: Config,
    #[serde(default)]
    algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default)]
    sem: BTreeMap<String, SemSpec>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Quiver,
    Table,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraSpec {
    field: u64,
    kind: Kind,
    quiver: Option<QuiverSpec>,
    table: Option<TableSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverSpec {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowSpec>,
    #[serde(default)]
    relations: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowSpec {
    name: String,
    src: String,
    tgt: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableSpec {
    dim: usize,
    unit: Vec<i64>,
    constants: Vec<(usize, usize, usize, i64)>,
    idempotents: Vec<Vec<i64>>,
    #[serde(default)]
    radical: Vec<Vec<i64>>,
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleSpec {
    algebra: Option<String>,
    dim: usize,
    action: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BimoduleSpec {
    left: String,
    right: String,
    module: ModuleSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitSpec {
    s: Vec<Vec<i64>>,
    r: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SemSpec {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "M")]
    m: String,
    #[serde(rename = "N")]
    n: String,
    #[serde(rename = "split_MN")]
    split_mn: Option<SplitSpec>,
    #[serde(rename = "split_NM")]
    split_nm: Option<SplitSpec>,
    bounds: Option<Bounds>,
    seed: Option<u64>,
}

/// Validated objects of one workspace file, by name.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub config: Config,
    pub algebras: BTreeMap<String, Algebra>,
    pub modules: BTreeMap<String, Module>,
    pub bimodules: BTreeMap<String, Bimodule>,
    pub sem: BTreeMap<String, SemDatum>,
}

impl Workspace {
    pub fn load(path: &Path, field: Option<u64>) -> Result<Workspace, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Workspace::parse(&text, field)
    }

    /// `field` replaces the prime of every algebra.
    pub fn parse(text: &str, field: Option<u64>) -> Result<Workspace, InputError> {
        let spec: FileSpec = serde_json::from_str(text).map_err(|e| InputError::Json {
            line: e.line(),
            column: e.column(),
            msg: strip_position(&e.to_string()),
        })?;
        let mut ws = Workspace {
            config: spec.config,
            ..Workspace::default()
        };
        for (name, a) in &spec.algebras {
            let at = format!("algebras.{name}");
            ws.algebras
                .insert(name.clone(), build_algebra(&at, a, field)?);
        }
        for (name, m) in &spec.modules {
            let at = format!("modules.{name}");
            let alg_name = m
                .algebra
                .as_deref()
                .ok_or_else(|| schema(&at, "missing field `algebra`"))?;
            let alg = ws.algebra(&at, alg_name)?;
            ws.modules.insert(name.clone(), build_module(&at, &alg, m)?);
        }
        for (name, b) in &spec.bimodules {
            let at = format!("bimodules.{name}");
            let left = ws.algebra(&at, &b.left)?;
            let right = ws.algebra(&at, &b.right)?;
            let env = left.envelope_with(&right).map_err(invalid(&at))?;
            let module = build_module(&format!("{at}.module"), &env, &b.module)?;
            let bm = Bimodule::from_module(&left, &right, module).map_err(invalid(&at))?;
            ws.bimodules.insert(name.clone(), bm);
        }
        for (name, s) in &spec.sem {
            let at = format!("sem.{name}");
            let datum = ws.build_sem(&at, s)?;
            ws.sem.insert(name.clone(), datum);
        }
        Ok(ws)
    }

    fn algebra(&self, at: &str, name: &str) -> Result<Algebra, InputError> {
        self.algebras
            .get(name)
            .cloned()
            .ok_or_else(|| schema(at, format!("unknown algebra {name:?}")))
    }

    fn bimodule(&self, at: &str, name: &str) -> Result<Bimodule, InputError> {
        self.bimodules
            .get(name)
            .cloned()
            .ok_or_else(|| schema(at, format!("unknown bimodule {name:?}")))
    }

    fn build_sem(&self, at: &str, s: &SemSpec) -> Result<SemDatum, InputError> {
        let a = self.algebra(at, &s.a)?;
        let b = self.algebra(at, &s.b)?;
        let m = self.bimodule(at, &s.m)?;
        let n = self.bimodule(at, &s.n)?;
        let mut d = SemDatum::new(&a, &b, m, n).map_err(invalid(at))?;
        let split = |key: &str, sp: &Option<SplitSpec>| -> Result<Option<Splitting>, InputError> {
            let Some(sp) = sp else { return Ok(None) };
            let f = a.field();
            let at = format!("{at}.{key}");
            Ok(Some(Splitting {
                s: matrix(&format!("{at}.s"), f, &sp.s, None)?,
                r: matrix(&format!("{at}.r"), f, &sp.r, None)?,
            }))
        };
        d.split_mn = split("split_MN", &s.split_mn)?;
        d.split_nm = split("split_NM", &s.split_nm)?;
        d.bounds = s.bounds.clone().unwrap_or_default();
        d.seed = s.seed.unwrap_or(self.config.seed);
        Ok(d)
    }

    /// A module by name; a bimodule name gives its module over the envelope.
    pub fn module(&self, name: &str) -> Option<Module> {
        self.modules
            .get(name)
            .cloned()
            .or_else(|| self.bimodules.get(name).map(|b| b.module().clone()))
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn build_algebra(at: &str, spec: &AlgebraSpec, field: Option<u64>) -> Result<Algebra, InputError> {
    let f = Field::new(field.unwrap_or(spec.field)).map_err(invalid(&format!("{at}.field")))?;
    let alg = match spec.kind {
        Kind::Quiver => {
            let q = spec
                .quiver
                .as_ref()
                .ok_or_else(|| schema(at, "kind is \"quiver\" but `quiver` is missing"))?;
            let verts: Vec<&str> = q.vertices.iter().map(String::as_str).collect();
            let mut p = QuiverPresentation::new(f, &verts);
            for (i, a) in q.arrows.iter().enumerate() {
                p.arrow(&a.name, &a.src, &a.tgt)
                    .map_err(invalid(&format!("{at}.quiver.arrows[{i}]")))?;
            }
            for (i, r) in q.relations.iter().enumerate() {
                let path: Vec<&str> = r.iter().map(String::as_str).collect();
                p.relation(&path)
                    .map_err(invalid(&format!("{at}.quiver.relations[{i}]")))?;
            }
            p.build().map_err(invalid(at))?
        }
        Kind::Table => {
            let t = spec
                .table
                .as_ref()
                .ok_or_else(|| schema(at, "kind is \"table\" but `table` is missing"))?;
            let v = |x: &[i64]| x.iter().map(|&c| f.from_i64(c)).collect::<Vec<u32>>();
            let constants: Vec<_> = t
                .constants
                .iter()
                .map(|&(i, j, k, c)| (i, j, k, f.from_i64(c)))
                .collect();
            Algebra::from_table(
                f,
                t.dim,
                t.labels.clone(),
                &constants,
                v(&t.unit),
                t.idempotents.iter().map(|e| v(e)).collect(),
                t.radical.iter().map(|e| v(e)).collect(),
            )
            .map_err(invalid(at))?
        }
    };
    alg.validate().into_result().map_err(invalid(at))?;
    Ok(alg)
}

fn matrix(at: &str, f: Field, rows: &[Vec<i64>], square: Option<usize>) -> Result<Mat, InputError> {
    let cols = match square {
        Some(n) => n,
        None => rows.first().map_or(0, Vec::len),
    };
    if let Some(n) = square {
        if rows.len() != n {
            return Err(schema(at, format!("{} rows, expected {n}", rows.len())));
        }
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(schema(
                at,
                format!("row {i} has {} entries, expected {cols}", r.len()),
            ));
        }
    }
    let data = rows.iter().flatten().map(|&c| f.from_i64(c)).collect();
    Ok(Mat::from_vec(f, rows.len(), cols, data))
}

fn build_module(at: &str, alg: &Algebra, spec: &ModuleSpec) -> Result<Module, InputError> {
    let f = alg.field();
    let d = alg.dim();
    let mut action: Vec<Option<Mat>> = vec![None; d];
    for (label, rows) in &spec.action {
        let k = alg.label_index(label).ok_or_else(|| {
            schema(
                &format!("{at}.action"),
                format!("unknown basis label {label:?}"),
            )
        })?;
        action[k] = Some(matrix(
            &format!("{at}.action.{label}"),
            f,
            rows,
            Some(spec.dim),
        )?);
    }
    fill_products(alg, spec.dim, &mut action);
    let missing: Vec<&str> = (0..d)
        .filter(|&k| action[k].is_none())
        .map(|k| alg.labels()[k].as_str())
        .collect();
    if !missing.is_empty() {
        return Err(schema(
            &format!("{at}.action"),
            format!(
                "no action for {} (not a product of listed elements)",
                missing.join(", ")
            ),
        ));
    }
    let action = action.into_iter().map(Option::unwrap).collect();
    let m = Module::new(alg, spec.dim, action).map_err(invalid(at))?;
    m.validate()
        .map_err(|v| schema(at, format!("module validation failed: {v}")))?;
    Ok(m)
}

/// Fills in `ρ(b_k)` whenever `b_k` is a scalar multiple of a product of
/// known basis elements, and `ρ(1) = I` when the unit is a basis element.
fn fill_products(alg: &Algebra, dim: usize, action: &mut [Option<Mat>]) {
    let f = alg.field();
    let d = alg.dim();
    let unit: Vec<usize> = (0..d).filter(|&k| alg.unit()[k] != 0).collect();
    if let [k] = unit[..] {
        if action[k].is_none() {
            action[k] = Some(Mat::identity(f, dim).scale(f.inv(alg.unit()[k])));
        }
    }
    loop {
        let mut changed = false;
        for i in 0..d {
            for j in 0..d {
                let (Some(x), Some(y)) = (&action[i], &action[j]) else {
                    continue;
                };
                if let [(k, c)] = alg.product(i, j) {
                    let k = *k as usize;
                    if action[k].is_none() {
                        action[k] = Some(x.mul(y).scale(f.inv(*c)));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return;
        }
    }
}
