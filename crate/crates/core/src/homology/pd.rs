use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{decompose, intertwines, is_isomorphic, IsoVerdict, Module};

/// Syzygies are iterated directly while the module stays this small.
const SYZYGY_DIM_CAP: usize = 512;
/// Bound on distinct indecomposables explored in the summand graph.
const GRAPH_NODE_CAP: usize = 32;

#[derive(Clone, Debug)]
pub enum PdVerdict {
    /// `Ω^{n+1} M = 0` and `Ω^n M ≠ 0` (the zero module counts as `Finite(0)`).
    Finite(usize),
    InfiniteByCycle(CycleCertificate),
    /// No zero syzygy up to the bound and no cycle found.
    Unknown(usize),
}

impl PdVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, PdVerdict::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PdVerdict::InfiniteByCycle(_))
    }

    pub fn label(&self) -> String {
        match self {
            PdVerdict::Finite(n) => format!("Finite({n})"),
            PdVerdict::InfiniteByCycle(c) => format!("InfiniteByCycle(length {})", c.len()),
            PdVerdict::Unknown(n) => format!("Unknown({n})"),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
enum PdRepr<'a> {
    Finite { pd: usize },
    InfiniteByCycle { cycle: &'a CycleCertificate },
    Unknown { bound: usize },
}

impl Serialize for PdVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PdVerdict::Finite(n) => PdRepr::Finite { pd: *n },
            PdVerdict::InfiniteByCycle(c) => PdRepr::InfiniteByCycle { cycle: c },
            PdVerdict::Unknown(n) => PdRepr::Unknown { bound: *n },
        }
        .serialize(s)
    }
}

/// Indecomposables `U_0 → U_1 → … → U_0` with `U_{k+1}` a direct summand of `Ω(U_k)`.
#[derive(Clone, Debug, Serialize)]
pub struct CycleCertificate {
    /// `(dim, dimension vector)` of each node, for reports.
    pub shapes: Vec<(usize, Vec<usize>)>,
    /// Number of syzygy steps from the input to the first node.
    pub depth: usize,
    #[serde(skip)]
    pub nodes: Vec<Module>,
    #[serde(skip)]
    pub edges: Vec<CycleEdge>,
}

/// `U_{k+1} → Ω(U_k) → U_{k+1}` composing to the identity.
#[derive(Clone, Debug)]
pub struct CycleEdge {
    pub embedding: Mat,
    pub projection: Mat,
}

impl CycleCertificate {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Recomputes each syzygy and checks the split embeddings.
    pub fn verify(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 || self.edges.len() != n {
            return false;
        }
        (0..n).all(|k| {
            let omega = self.nodes[k].syzygy();
            let next = &self.nodes[(k + 1) % n];
            let e = &self.edges[k];
            !next.is_projective()
                && intertwines(next, &omega, &e.embedding)
                && intertwines(&omega, next, &e.projection)
                && e.embedding.mul(&e.projection).is_identity()
        })
    }
}

pub fn pd(m: &Module, n_max: usize, trials: usize, seed: u64) -> Result<PdVerdict> {
    let mut current = m.clone();
    for k in 0..=n_max {
        if current.dim() > SYZYGY_DIM_CAP {
            break;
        }
        let next = current.syzygy();
        if next.is_zero() {
            return Ok(PdVerdict::Finite(k));
        }
        current = next;
    }
    if let Some(cert) = find_cycle(m, n_max, trials, seed)? {
        return Ok(PdVerdict::InfiniteByCycle(cert));
    }
    Ok(PdVerdict::Unknown(n_max))
}

struct Edge {
    to: usize,
    embedding: Mat,
    projection: Mat,
}

struct Graph {
    nodes: Vec<Module>,
    depth: Vec<usize>,
    edges: Vec<Vec<Edge>>,
}

impl Graph {
    /// Index of a node isomorphic to `x`, with an isomorphism `node → x`.
    fn find(&self, x: &Module, trials: usize, seed: u64) -> Result<Option<(usize, Mat)>> {
        for (i, n) in self.nodes.iter().enumerate() {
            if let IsoVerdict::Yes(phi) = is_isomorphic(n, x, trials, seed)? {
                return Ok(Some((i, phi)));
            }
        }
        Ok(None)
    }

    fn cycle(&self) -> Option<Vec<usize>> {
        // colouring DFS; the cycle is returned in edge order
        let n = self.nodes.len();
        let mut colour = vec![0u8; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if colour[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            colour[root] = 1;
            while let Some(top) = stack.last_mut() {
                let (u, i) = *top;
                if i < self.edges[u].len() {
                    top.1 += 1;
                    let v = self.edges[u][i].to;
                    match colour[v] {
                        0 => {
                            colour[v] = 1;
                            parent[v] = u;
                            stack.push((v, 0));
                        }
                        1 => {
                            let mut path = vec![u];
                            let mut w = u;
                            while w != v {
                                w = parent[w];
                                path.push(w);
                            }
                            path.reverse();
                            return Some(path);
                        }
                        _ => {}
                    }
                } else {
                    colour[u] = 2;
                    stack.pop();
                }
            }
        }
        None
    }
}

fn find_cycle(
    m: &Module,
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<CycleCertificate>> {
    let mut g = Graph {
        nodes: Vec::new(),
        depth: Vec::new(),
        edges: Vec::new(),
    };
    let mut queue = std::collections::VecDeque::new();
    let top = match capped(decompose(m, trials, seed))? {
        Some(r) => r,
        None => return Ok(None),
    };
    for s in top.summands {
        if s.module.is_projective() || capped(g.find(&s.module, trials, seed))?.flatten().is_some()
        {
            continue;
        }
        g.nodes.push(s.module);
        g.depth.push(0);
        g.edges.push(Vec::new());
        queue.push_back(g.nodes.len() - 1);
    }
    while let Some(u) = queue.pop_front() {
        if g.depth[u] >= n_max {
            continue;
        }
        let omega = g.nodes[u].syzygy();
        if omega.is_zero() || omega.dim() > SYZYGY_DIM_CAP {
            continue;
        }
        // nodes too large to split are left unexplored
        let Some(parts) = capped(decompose(&omega, trials, seed))? else {
            continue;
        };
        for s in parts.summands {
            if s.module.is_projective() {
                continue;
            }
            let (to, phi) = match capped(g.find(&s.module, trials, seed))?.flatten() {
                Some(found) => found,
                None => {
                    if g.nodes.len() >= GRAPH_NODE_CAP {
                        continue;
                    }
                    let f = s.module.field();
                    g.nodes.push(s.module.clone());
                    g.depth.push(g.depth[u] + 1);
                    g.edges.push(Vec::new());
                    queue.push_back(g.nodes.len() - 1);
                    (g.nodes.len() - 1, Mat::identity(f, s.module.dim()))
                }
            };
            let inv = phi.inverse().expect("isomorphism");
            g.edges[u].push(Edge {
                to,
                embedding: phi.mul(&s.embedding),
                projection: s.projection.mul(&inv),
            });
        }
        if let Some(path) = g.cycle() {
            return Ok(Some(certificate(&g, &path)));
        }
    }
    Ok(None)
}

fn capped<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::SizeCap { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn certificate(g: &Graph, path: &[usize]) -> CycleCertificate {
    let n = path.len();
    let mut edges = Vec::with_capacity(n);
    for k in 0..n {
        let (u, v) = (path[k], path[(k + 1) % n]);
        let e = g.edges[u]
            .iter()
            .find(|e| e.to == v)
            .expect("edge on cycle");
        edges.push(CycleEdge {
            embedding: e.embedding.clone(),
            projection: e.projection.clone(),
        });
    }
    let nodes: Vec<Module> = path.iter().map(|&i| g.nodes[i].clone()).collect();
    CycleCertificate {
        shapes: nodes
            .iter()
            .map(|x| (x.dim(), x.dimension_vector()))
            .collect(),
        depth: path.iter().map(|&i| g.depth[i]).min().unwrap_or(0),
        nodes,
        edges,
    }
}
