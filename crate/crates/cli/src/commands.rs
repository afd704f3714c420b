use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use singeq_core::homology::{
    hochschild, minimal_resolution, pd, sing_hom, stable_hom, HHMethod, PdVerdict, SingHomVerdict,
};
use singeq_core::module::decompose;
use singeq_core::semcheck::{run_semcheck, SemReport, Verdict};
use singeq_core::transfer::transfer_hh;
use singeq_core::Module;
use thiserror::Error;

use crate::table::render;
use crate::workspace::{InputError, Workspace};

#[derive(Debug, Parser)]
#[command(
    name = "singeq",
    version,
    about = "Exact homological computations over GF(p)"
)]
pub struct Cli {
    /// Workspace JSON file.
    #[arg(short, long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Reinterpret every algebra over GF(p).
    #[arg(long, global = true)]
    pub field: Option<u64>,
    /// Directory for the JSON report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate every object in the workspace.
    Validate,
    /// Minimal projective resolution.
    Resolve {
        #[arg(long)]
        module: String,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Projective dimension.
    Pd {
        #[arg(long)]
        module: String,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Homomorphisms modulo those factoring through projectives.
    Stablehom { x: String, y: String },
    /// Morphisms in the singularity category.
    Dsghom {
        x: String,
        y: String,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, default_value_t = 2)]
        window: usize,
    },
    /// Hochschild homology dimensions.
    Hh {
        algebra: String,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, default_value = "minimal")]
        method: HHMethod,
    },
    /// The map on Hochschild homology induced by a bimodule.
    Transfer {
        #[arg(long)]
        bimodule: String,
        #[arg(long)]
        degree: usize,
    },
    /// Krull–Schmidt decomposition.
    Decompose { x: String },
    /// Audit the sem data of a workspace file.
    Semcheck {
        file: PathBuf,
        #[arg(long)]
        max_pd: Option<usize>,
        /// Only this datum.
        #[arg(long)]
        datum: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] singeq_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Size caps count as undecided, everything else as failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(singeq_core::Error::SizeCap { .. }) => 2,
            _ => 1,
        }
    }
}

/// One command's output: the JSON body, its table rendering, and the exit code.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub body: Value,
    pub table: String,
    pub exit: i32,
}

impl Report {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("report serializes") + "\n"
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

struct Ctx {
    ws: Workspace,
    seed: u64,
    trials: usize,
    max: usize,
}

impl Ctx {
    fn module(&self, name: &str) -> Result<Module, CliError> {
        self.ws
            .module(name)
            .ok_or_else(|| usage(format!("unknown module {name:?}")))
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Command::Semcheck {
        file,
        max_pd,
        datum,
    } = &cli.command
    {
        let ws = Workspace::load(file, cli.field)?;
        return semcheck(ws, cli, *max_pd, datum.as_deref());
    }
    let path = cli
        .workspace
        .as_ref()
        .ok_or_else(|| usage("this command needs --workspace FILE".into()))?;
    let ws = Workspace::load(path, cli.field)?;
    let ctx = Ctx {
        seed: cli.seed.unwrap_or(ws.config.seed),
        trials: cli.trials.unwrap_or(ws.config.trials),
        max: ws.config.max,
        ws,
    };
    match &cli.command {
        Command::Validate => Ok(validate(&ctx)),
        Command::Resolve { module, max } => resolve(&ctx, module, max.unwrap_or(ctx.max)),
        Command::Pd { module, max } => pd_cmd(&ctx, module, max.unwrap_or(ctx.max)),
        Command::Stablehom { x, y } => stablehom(&ctx, x, y),
        Command::Dsghom { x, y, max, window } => {
            dsghom(&ctx, x, y, max.unwrap_or(ctx.max), *window)
        }
        Command::Hh {
            algebra,
            max,
            method,
        } => hh(&ctx, algebra, max.unwrap_or(ctx.max), *method),
        Command::Transfer { bimodule, degree } => transfer(&ctx, bimodule, *degree),
        Command::Decompose { x } => decompose_cmd(&ctx, x),
        Command::Semcheck { .. } => unreachable!(),
    }
}

fn validate(ctx: &Ctx) -> Report {
    let ws = &ctx.ws;
    let mut rows = Vec::new();
    for (name, a) in &ws.algebras {
        rows.push(vec![
            "algebra".into(),
            name.clone(),
            a.dim().to_string(),
            format!("GF({})", a.field().p()),
        ]);
    }
    for (name, m) in &ws.modules {
        let dv: Vec<String> = m.dimension_vector().iter().map(usize::to_string).collect();
        rows.push(vec![
            "module".into(),
            name.clone(),
            m.dim().to_string(),
            format!("[{}]", dv.join(",")),
        ]);
    }
    for (name, b) in &ws.bimodules {
        rows.push(vec![
            "bimodule".into(),
            name.clone(),
            b.dim().to_string(),
            String::new(),
        ]);
    }
    for name in ws.sem.keys() {
        rows.push(vec![
            "sem".into(),
            name.clone(),
            String::new(),
            String::new(),
        ]);
    }
    let body = json!({
        "objects": rows.iter().map(|r| json!({"kind": r[0], "name": r[1], "dim": r[2], "info": r[3]})).collect::<Vec<_>>(),
        "valid": true,
    });
    Report {
        command: "validate",
        table: render(&["kind", "name", "dim", "info"], &rows),
        body,
        exit: 0,
    }
}

fn resolve(ctx: &Ctx, name: &str, max: usize) -> Result<Report, CliError> {
    let m = ctx.module(name)?;
    let res = minimal_resolution(&m, max);
    let r = m.algebra().num_idempotents();
    let mut rows = Vec::new();
    let mut terms = Vec::new();
    for (k, c) in res.covers.iter().enumerate() {
        let mut tops = vec![0usize; r];
        for b in &c.blocks {
            tops[b.vertex] += 1;
        }
        let shown: Vec<String> = tops.iter().map(usize::to_string).collect();
        rows.push(vec![
            k.to_string(),
            format!("[{}]", shown.join(",")),
            c.dim().to_string(),
        ]);
        terms.push(json!({"degree": k, "tops": tops, "dim": c.dim()}));
    }
    let (minimal, exact) = (res.is_minimal(), res.verify());
    let body = json!({
        "module": name, "max": max, "terms": terms,
        "complete": res.complete, "minimal": minimal, "exact": exact,
    });
    let mut table = render(&["degree", "tops", "dim"], &rows);
    table.push_str(&format!(
        "complete: {}  minimal: {minimal}  exact: {exact}\n",
        res.complete
    ));
    Ok(Report {
        command: "resolve",
        body,
        table,
        exit: if minimal && exact { 0 } else { 1 },
    })
}

fn pd_cmd(ctx: &Ctx, name: &str, max: usize) -> Result<Report, CliError> {
    let m = ctx.module(name)?;
    let v = pd(&m, max, ctx.trials, ctx.seed)?;
    let exit = match &v {
        PdVerdict::Unknown(_) => 2,
        PdVerdict::InfiniteByCycle(c) if !c.verify() => 1,
        _ => 0,
    };
    let mut rows = vec![vec!["verdict".into(), v.label()]];
    if let PdVerdict::InfiniteByCycle(c) = &v {
        let dims: Vec<String> = c.shapes.iter().map(|s| s.0.to_string()).collect();
        rows.push(vec!["cycle dims".into(), dims.join(" → ")]);
        rows.push(vec!["entered at depth".into(), c.depth.to_string()]);
    }
    Ok(Report {
        command: "pd",
        body: json!({"module": name, "max": max, "seed": ctx.seed, "trials": ctx.trials, "pd": to_value(&v)}),
        table: render(&["module", name], &rows),
        exit,
    })
}

fn stablehom(ctx: &Ctx, x: &str, y: &str) -> Result<Report, CliError> {
    let (m, n) = (ctx.module(x)?, ctx.module(y)?);
    let s = stable_hom(&m, &n)?;
    let (h, p) = (s.hom.dim(), s.null.dim());
    let rows = vec![vec![h.to_string(), p.to_string(), s.dim().to_string()]];
    Ok(Report {
        command: "stablehom",
        body: json!({"x": x, "y": y, "hom": h, "projective": p, "stable": s.dim()}),
        table: render(&["hom", "projective", "stable"], &rows),
        exit: 0,
    })
}

fn dsghom(ctx: &Ctx, x: &str, y: &str, max: usize, window: usize) -> Result<Report, CliError> {
    let (m, n) = (ctx.module(x)?, ctx.module(y)?);
    let r = sing_hom(&m, &n, max, window)?;
    let rows: Vec<Vec<String>> = r
        .stage_dims
        .iter()
        .enumerate()
        .map(|(i, d)| vec![i.to_string(), d.to_string()])
        .collect();
    let mut table = render(&["stage", "stable hom"], &rows);
    table.push_str(&format!("verdict: {}", r.verdict.label()));
    table.push_str(if r.truncated {
        " (stages cut off by the size cap)\n"
    } else {
        "\n"
    });
    let exit = match r.verdict {
        SingHomVerdict::Stabilized { .. } => 0,
        SingHomVerdict::NotStabilized { .. } => 2,
    };
    Ok(Report {
        command: "dsghom",
        body: json!({"x": x, "y": y, "max": max, "report": to_value(&r)}),
        table,
        exit,
    })
}

fn hh(ctx: &Ctx, name: &str, max: usize, method: HHMethod) -> Result<Report, CliError> {
    let a = ctx
        .ws
        .algebras
        .get(name)
        .ok_or_else(|| usage(format!("unknown algebra {name:?}")))?;
    let t = hochschild(a, max, method)?;
    let rows: Vec<Vec<String>> = t
        .dims
        .iter()
        .enumerate()
        .map(|(n, d)| vec![n.to_string(), d.to_string()])
        .collect();
    Ok(Report {
        command: "hh",
        body: json!({"algebra": name, "max": max, "table": to_value(&t)}),
        table: render(&["n", "dim HH_n"], &rows),
        exit: 0,
    })
}

fn transfer(ctx: &Ctx, name: &str, degree: usize) -> Result<Report, CliError> {
    let b = ctx
        .ws
        .bimodules
        .get(name)
        .ok_or_else(|| usage(format!("unknown bimodule {name:?}")))?;
    let t = transfer_hh(b, degree)?;
    let rows = vec![vec![
        degree.to_string(),
        t.source.dim().to_string(),
        t.target.dim().to_string(),
        t.induced.rank().to_string(),
    ]];
    let mut table = render(&["n", "dim source", "dim target", "rank"], &rows);
    for r in t.induced.to_rows() {
        let r: Vec<String> = r.iter().map(u32::to_string).collect();
        table.push_str(&format!("  [{}]\n", r.join(" ")));
    }
    Ok(Report {
        command: "transfer",
        body: json!({
            "bimodule": name, "degree": degree,
            "source_dim": t.source.dim(), "target_dim": t.target.dim(),
            "rank": t.induced.rank(), "induced": to_value(&t.induced),
        }),
        table,
        exit: 0,
    })
}

fn decompose_cmd(ctx: &Ctx, name: &str) -> Result<Report, CliError> {
    let m = ctx.module(name)?;
    let r = decompose(&m, ctx.trials, ctx.seed)?;
    let mut rows = Vec::new();
    let mut classes = Vec::new();
    for &(i, mult) in &r.classes {
        let s = &r.summands[i];
        let dv: Vec<String> = s
            .module
            .dimension_vector()
            .iter()
            .map(usize::to_string)
            .collect();
        rows.push(vec![
            i.to_string(),
            s.module.dim().to_string(),
            format!("[{}]", dv.join(",")),
            mult.to_string(),
            to_value(&s.certificate)["kind"]
                .as_str()
                .unwrap_or("")
                .to_string(),
        ]);
        classes.push(json!({
            "representative": i, "dim": s.module.dim(),
            "dimension_vector": s.module.dimension_vector(),
            "multiplicity": mult, "certificate": to_value(&s.certificate),
        }));
    }
    let verified = r.verify(&m);
    let body = json!({
        "module": name, "seed": ctx.seed, "trials": ctx.trials,
        "summands": r.summands.len(), "classes": classes, "unresolved": r.unresolved,
        "certificate": to_value(&r.certificate), "verified": verified,
    });
    let mut table = render(
        &[
            "summand",
            "dim",
            "dimension vector",
            "multiplicity",
            "certificate",
        ],
        &rows,
    );
    if r.unresolved > 0 {
        table.push_str(&format!(
            "{} pairs of summands not separated\n",
            r.unresolved
        ));
    }
    let exit = if !verified {
        1
    } else if r.unresolved > 0 {
        2
    } else {
        0
    };
    Ok(Report {
        command: "decompose",
        body,
        table,
        exit,
    })
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Undecided => "undecided",
        Verdict::Skipped => "skipped",
    }
}

fn semcheck(
    ws: Workspace,
    cli: &Cli,
    max_pd: Option<usize>,
    only: Option<&str>,
) -> Result<Report, CliError> {
    if let Some(name) = only {
        if !ws.sem.contains_key(name) {
            return Err(usage(format!("unknown sem datum {name:?}")));
        }
    }
    if ws.sem.is_empty() {
        return Err(usage("the file has no sem data".into()));
    }
    let mut reports: BTreeMap<String, SemReport> = BTreeMap::new();
    let mut table = String::new();
    let mut exit = 0;
    for (name, d) in &ws.sem {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        let mut d = d.clone();
        if let Some(p) = max_pd {
            d.bounds.max_pd = p;
        }
        if let Some(t) = cli.trials {
            d.bounds.trials = t;
        }
        if let Some(s) = cli.seed {
            d.seed = s;
        }
        let r = run_semcheck(&d);
        let rows: Vec<Vec<String>> = r
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.clone(),
                    verdict_label(c.verdict).into(),
                    c.detail.clone(),
                ]
            })
            .collect();
        table.push_str(&format!("{name}\n"));
        table.push_str(&render(&["check", "verdict", "detail"], &rows));
        if !r.transfer.is_empty() {
            let rows: Vec<Vec<String>> = r
                .transfer
                .iter()
                .map(|t| {
                    vec![
                        t.degree.to_string(),
                        t.hh_a.to_string(),
                        t.hh_b.to_string(),
                        t.rank_m.to_string(),
                        (t.nm_identity && t.mn_identity).to_string(),
                    ]
                })
                .collect();
            table.push_str(&render(
                &["n", "HH_n(A)", "HH_n(B)", "rank t_M", "t_N t_M = Id"],
                &rows,
            ));
        }
        exit = match (exit, r.exit_code()) {
            (1, _) | (_, 1) => 1,
            (2, _) | (_, 2) => 2,
            _ => 0,
        };
        reports.insert(name.clone(), r);
    }
    Ok(Report {
        command: "semcheck",
        body: to_value(&reports),
        table,
        exit,
    })
}
