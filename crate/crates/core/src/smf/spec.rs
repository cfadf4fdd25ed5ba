use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, SimpleType, Weight};

/// `(C^*)^t × G_1 × … × G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub torus_count: usize,
    pub semisimple: RootSystem,
}

impl GroupSpec {
    pub fn new(torus_count: usize, semisimple: RootSystem) -> Self {
        GroupSpec { torus_count, semisimple }
    }

    /// Saturated group for `rep`: one torus per summand.
    pub fn saturated(semisimple: &RootSystem, rep: &RepSpec) -> Self {
        GroupSpec { torus_count: rep.len(), semisimple: semisimple.clone() }
    }

    /// Parses `"C*xC*xA3"`; `C*` tokens count torus factors.
    pub fn parse(s: &str) -> Result<Self> {
        let mut torus_count = 0;
        let mut factors = Vec::new();
        let mut pos = 0;
        for tok in s.split(['x', 'X']) {
            let t = tok.trim();
            match t {
                "C*" | "c*" | "T" => torus_count += 1,
                "" => return Err(Error::Parse { pos, token: tok.to_string(), msg: "empty factor".into() }),
                _ => factors.push(SimpleType::parse(t).map_err(|_| Error::Parse {
                    pos,
                    token: t.to_string(),
                    msg: "expected `C*` or a simple type such as `A3`".into(),
                })?),
            }
            pos += tok.len() + 1;
        }
        Ok(GroupSpec { torus_count, semisimple: RootSystem::new(factors) })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["C*".to_string(); self.torus_count];
        parts.extend(self.semisimple.factors().iter().map(|t| t.to_string()));
        write!(f, "{}", parts.join("x"))
    }
}

/// Irreducible summands, each a dominant weight of the semisimple part
/// (concatenated per factor; zero on factors acting trivially).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RepSpec {
    pub summands: Vec<Weight>,
}

impl RepSpec {
    pub fn new(system: &RootSystem, summands: Vec<Weight>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::Precondition("representation needs at least one summand".into()));
        }
        for w in &summands {
            system.check_dominant(w)?;
        }
        Ok(RepSpec { summands })
    }

    /// Parses `"[1,0,0] ; [0,1,0]"` or per-factor `"[1]x[0] ; [1]x[1]"`.
    pub fn parse(system: &RootSystem, s: &str) -> Result<Self> {
        let mut summands = Vec::new();
        let mut offset = 0;
        for part in s.split(';') {
            let w = system.parse_weight(part).map_err(|e| match e {
                Error::Parse { pos, token, msg } => Error::Parse { pos: pos + offset, token, msg },
                other => other,
            })?;
            summands.push(w);
            offset += part.len() + 1;
        }
        RepSpec::new(system, summands)
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn dims(&self, system: &RootSystem) -> Result<Vec<usize>> {
        self.summands.iter().map(|w| Ok(system.weyl_dim(w)? as usize)).collect()
    }

    /// Input-grammar rendering, e.g. `[1]x[0] ; [2]x[1]`; parses back to `self`.
    pub fn render(&self, system: &RootSystem) -> String {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|w| {
                let f: Vec<String> = (0..system.factors().len())
                    .map(|i| {
                        let body: Vec<String> = system.part(w, i).iter().map(|x| x.to_string()).collect();
                        format!("[{}]", body.join(","))
                    })
                    .collect();
                f.join("x")
            })
            .collect();
        parts.join(" ; ")
    }
}

/// Bipartite graph: simple factors against summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepDiagram {
    pub factors: usize,
    pub summands: usize,
    /// `(factor, summand)` pairs with nontrivial action, sorted.
    pub edges: Vec<(usize, usize)>,
}

pub fn diagram(system: &RootSystem, rep: &RepSpec) -> RepDiagram {
    let mut edges = Vec::new();
    for f in 0..system.factors().len() {
        for (j, w) in rep.summands.iter().enumerate() {
            if system.part(w, f).iter().any(|&x| x != 0) {
                edges.push((f, j));
            }
        }
    }
    RepDiagram { factors: system.factors().len(), summands: rep.len(), edges }
}

/// Connectedness of the diagram over all vertices.
pub fn is_indecomposable(d: &RepDiagram) -> bool {
    let total = d.factors + d.summands;
    if total == 0 {
        return false;
    }
    let mut seen = vec![false; total];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(f, s) in &d.edges {
            let (a, b) = (f, d.factors + s);
            let next = if a == v { b } else if b == v { a } else { continue };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Result of deleting one edge from a diagram.
#[derive(Clone, Debug)]
pub struct EdgeRemoval {
    pub edge: (usize, usize),
    pub system: RootSystem,
    pub rep: RepSpec,
    pub diagram: RepDiagram,
}

/// Every single-edge deletion: the factor acts trivially on that summand,
/// isolated summands and factors are dropped.
pub fn edge_removals(system: &RootSystem, rep: &RepSpec) -> Vec<EdgeRemoval> {
    let d = diagram(system, rep);
    let mut out = Vec::new();
    for &(f, s) in &d.edges {
        let mut summands = rep.summands.clone();
        for x in &mut summands[s][system.range(f)] {
            *x = 0;
        }
        summands.retain(|w| w.iter().any(|&x| x != 0));
        let keep: Vec<usize> = (0..d.factors)
            .filter(|&g| summands.iter().any(|w| system.part(w, g).iter().any(|&x| x != 0)))
            .collect();
        let sub = RootSystem::new(keep.iter().map(|&g| system.factors()[g]).collect());
        let summands: Vec<Weight> =
            summands.iter().map(|w| keep.iter().flat_map(|&g| system.part(w, g).to_vec()).collect()).collect();
        if summands.is_empty() {
            continue;
        }
        let rep = RepSpec { summands };
        let diagram = diagram(&sub, &rep);
        out.push(EdgeRemoval { edge: (f, s), system: sub, rep, diagram });
    }
    out
}

fn permute_factor(system: &RootSystem, w: &[i32], f: usize, perm: &[usize]) -> Weight {
    let mut out = w.to_vec();
    let r = system.range(f);
    for (i, &j) in perm.iter().enumerate() {
        out[r.start + i] = w[r.start + j];
    }
    out
}

/// Canonical representative up to geometric equivalence: one diagram
/// automorphism per factor, per-summand dualization, summands sorted.
/// Among all choices the lexicographically largest summand list wins, so
/// that e.g. `[0,1]` on `A2` becomes the natural `[1,0]`.
pub fn normalize_geometric(system: &RootSystem, rep: &RepSpec) -> RepSpec {
    let autos: Vec<Vec<Vec<usize>>> = system.factors().iter().map(|t| t.diagram_automorphisms()).collect();
    let mut choice = vec![0usize; autos.len()];
    let mut best: Option<Vec<Weight>> = None;
    loop {
        let mut summands: Vec<Weight> = rep
            .summands
            .iter()
            .map(|w| {
                let mut v = w.clone();
                for (f, &c) in choice.iter().enumerate() {
                    v = permute_factor(system, &v, f, &autos[f][c]);
                }
                let d = system.dual(&v);
                v.max(d)
            })
            .collect();
        summands.sort_by(|a, b| b.cmp(a));
        if best.as_ref().is_none_or(|b| summands > *b) {
            best = Some(summands);
        }
        let mut f = 0;
        loop {
            if f == choice.len() {
                return RepSpec { summands: best.expect("at least one choice") };
            }
            choice[f] += 1;
            if choice[f] < autos[f].len() {
                break;
            }
            choice[f] = 0;
            f += 1;
        }
    }
}

/// Distinct factor indices acting on a summand.
pub fn support(system: &RootSystem, w: &[i32]) -> BTreeSet<usize> {
    (0..system.factors().len()).filter(|&f| system.part(w, f).iter().any(|&x| x != 0)).collect()
}
