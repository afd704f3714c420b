use std::collections::{BTreeMap, HashMap};

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A quiver with monomial relations.
///
/// Paths compose left to right: `p q` means "first `p`, then `q`", so the
/// relation `["β", "α"]` kills the path that traverses β and then α.
#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<usize>>,
}

impl QuiverPresentation {
    pub fn new(field: Field, vertices: &[&str]) -> Self {
        QuiverPresentation {
            field,
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: Vec::new(),
            relations: Vec::new(),
        }
    }

    fn vertex(&self, v: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::Quiver(format!("unknown vertex {v:?}")))
    }

    pub fn arrow(&mut self, name: &str, src: &str, tgt: &str) -> Result<&mut Self> {
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::Quiver(format!("duplicate arrow {name:?}")));
        }
        let (src, tgt) = (self.vertex(src)?, self.vertex(tgt)?);
        self.arrows.push(Arrow {
            name: name.to_string(),
            src,
            tgt,
        });
        Ok(self)
    }

    /// Adds a relation given by arrow names in traversal order.
    pub fn relation(&mut self, path: &[&str]) -> Result<&mut Self> {
        let shown = path.join("·");
        if path.len() < 2 {
            return Err(Error::Quiver(format!(
                "relation {shown:?} has length {}, relations need length at least 2",
                path.len()
            )));
        }
        let mut idx = Vec::with_capacity(path.len());
        for name in path {
            let a = self
                .arrows
                .iter()
                .position(|a| a.name == *name)
                .ok_or_else(|| {
                    Error::Quiver(format!("relation {shown:?} uses unknown arrow {name:?}"))
                })?;
            idx.push(a);
        }
        for w in idx.windows(2) {
            let (a, b) = (&self.arrows[w[0]], &self.arrows[w[1]]);
            if a.tgt != b.src {
                return Err(Error::Quiver(format!(
                    "relation {shown:?} is not composable: {} ends at {} but {} starts at {}",
                    a.name, self.vertices[a.tgt], b.name, self.vertices[b.src]
                )));
            }
        }
        self.relations.push(idx);
        Ok(self)
    }

    fn is_relation_free_suffix(&self, path: &[usize]) -> bool {
        // only suffixes can be new when one arrow is appended
        self.relations.iter().all(|r| !path.ends_with(r))
    }

    /// Relation-free paths: trivial paths first, then by length, then
    /// lexicographically in arrow order.
    pub fn paths(&self) -> Result<Vec<(usize, Vec<usize>)>> {
        self.check_finite()?;
        let mut out: Vec<(usize, Vec<usize>)> =
            (0..self.vertices.len()).map(|v| (v, vec![])).collect();
        let mut frontier: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                out.push((self.arrows[p[0]].src, p.clone()));
                let end = self.arrows[*p.last().unwrap()].tgt;
                for (a, arr) in self.arrows.iter().enumerate() {
                    if arr.src != end {
                        continue;
                    }
                    let mut q = p.clone();
                    q.push(a);
                    if self.is_relation_free_suffix(&q) {
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }

    /// Relation-free paths are determined by their last `L-1` arrows, where
    /// `L` is the longest relation; a cycle among such windows means the
    /// path basis is infinite.
    fn check_finite(&self) -> Result<()> {
        let l = self
            .relations
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(2)
            .max(2);
        let w = l - 1;
        // enumerate relation-free windows of length w
        let mut windows: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 1..w {
            let mut next = Vec::new();
            for p in &windows {
                let end = self.arrows[*p.last().unwrap()].tgt;
                for (a, arr) in self.arrows.iter().enumerate() {
                    if arr.src == end {
                        let mut q = p.clone();
                        q.push(a);
                        if self.is_relation_free_suffix(&q) {
                            next.push(q);
                        }
                    }
                }
            }
            windows = next;
        }
        let index: HashMap<&[usize], usize> = windows
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); windows.len()];
        for (i, p) in windows.iter().enumerate() {
            let end = self.arrows[*p.last().unwrap()].tgt;
            for (a, arr) in self.arrows.iter().enumerate() {
                if arr.src != end {
                    continue;
                }
                let mut q = p.clone();
                q.push(a);
                // every relation has length ≤ w+1, so checking suffixes of q suffices
                if self.is_relation_free_suffix(&q) {
                    let j = index[&q[1..]];
                    succ[i].push((j, a));
                }
            }
        }
        // iterative DFS with colors
        let n = windows.len();
        let mut color = vec![0u8; n];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < succ[v].len() {
                    let (u, a) = succ[v][*next];
                    *next += 1;
                    match color[u] {
                        0 => {
                            color[u] = 1;
                            parent[u] = Some((v, a));
                            stack.push((u, 0));
                        }
                        1 => {
                            // back edge v -> u closes a cycle
                            let mut arrows = vec![a];
                            let mut x = v;
                            while x != u {
                                let (px, pa) = parent[x].expect("on stack");
                                arrows.push(pa);
                                x = px;
                            }
                            arrows.reverse();
                            let cycle = arrows
                                .iter()
                                .map(|&a| self.arrows[a].name.as_str())
                                .collect::<Vec<_>>()
                                .join("·");
                            return Err(Error::UnboundedCycle { cycle });
                        }
                        _ => {}
                    }
                } else {
                    color[v] = 2;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// The bound quiver algebra with basis the relation-free paths.
    pub fn build(&self) -> Result<Algebra> {
        let paths = self.paths()?;
        let d = paths.len();
        let nv = self.vertices.len();
        if nv == 0 {
            return Err(Error::Quiver("quiver has no vertices".into()));
        }
        let index: BTreeMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let start = |p: &(usize, Vec<usize>)| p.0;
        let end = |p: &(usize, Vec<usize>)| match p.1.last() {
            Some(&a) => self.arrows[a].tgt,
            None => p.0,
        };
        let mut products = vec![Vec::new(); d * d];
        for (i, p) in paths.iter().enumerate() {
            for (j, q) in paths.iter().enumerate() {
                if end(p) != start(q) {
                    continue;
                }
                let mut w = p.1.clone();
                w.extend_from_slice(&q.1);
                let key = (start(p), w);
                // a path is nonzero iff all its subpaths avoid relations; the
                // concatenation is in the basis exactly when it is relation-free
                if let Some(&k) = index.get(&key) {
                    products[i * d + j].push((k as u32, 1));
                }
            }
        }
        let labels = paths
            .iter()
            .map(|(v, p)| {
                if p.is_empty() {
                    format!("e{}", self.vertices[*v])
                } else {
                    p.iter()
                        .map(|&a| self.arrows[a].name.as_str())
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        let unit = (0..d).map(|i| u32::from(i < nv)).collect();
        let idempotents = (0..nv)
            .map(|v| (0..d).map(|i| u32::from(i == v)).collect())
            .collect();
        let radical = (nv..d)
            .map(|k| (0..d).map(|i| u32::from(i == k)).collect())
            .collect();
        Ok(Algebra::from_parts(
            self.field,
            labels,
            products,
            unit,
            idempotents,
            radical,
        ))
    }
}
