use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{Kind, SimpleType};
use crate::rootdata::{RootSystem, Weight};
use crate::smf::RepSpec;

/// Exact rationals used throughout the Clifford oracle.
pub type Q = BigRational;

/// Largest module dimension `realize` accepts.
pub const MAX_REALIZED_DIM: usize = 16;

pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sparse square matrix, entries keyed by `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), Q>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.add(i, i, Q::one());
        }
        m
    }

    pub fn add(&mut self, row: usize, col: usize, x: Q) {
        if x.is_zero() {
            return;
        }
        let e = self.entries.entry((row, col)).or_insert_with(Q::zero);
        *e += x;
        if e.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Q {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix { dim: self.dim, entries: self.entries.iter().map(|(&(r, c), x)| ((c, r), x.clone())).collect() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut m = Self::zero(self.dim);
        for (&(r, c), x) in &self.entries {
            m.add(r, c, x * s);
        }
        m
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (&(r, c), x) in &other.entries {
            m.add(r, c, x.clone());
        }
        m
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut by_row: BTreeMap<usize, Vec<(usize, &Q)>> = BTreeMap::new();
        for (&(r, c), x) in &other.entries {
            by_row.entry(r).or_default().push((c, x));
        }
        let mut m = Self::zero(self.dim);
        for (&(r, k), x) in &self.entries {
            for (c, y) in by_row.get(&k).into_iter().flatten() {
                m.add(r, *c, x * *y);
            }
        }
        m
    }

    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).minus(&other.mul(self))
    }

    /// `a ⊗ b` with row index `i·dim(b) + j`.
    pub fn kron(a: &Self, b: &Self) -> Self {
        let mut m = Self::zero(a.dim * b.dim);
        for (&(r1, c1), x) in &a.entries {
            for (&(r2, c2), y) in &b.entries {
                m.add(r1 * b.dim + r2, c1 * b.dim + c2, x * y);
            }
        }
        m
    }

    /// Diagonal entries when the matrix is diagonal.
    pub fn diagonal(&self) -> Option<Vec<Q>> {
        if self.entries.keys().any(|(r, c)| r != c) {
            return None;
        }
        Some((0..self.dim).map(|i| self.get(i, i)).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenKind {
    E,
    F,
    H,
}

/// Chevalley generator `e_i`, `f_i` or `h_i` of one simple factor.
#[derive(Clone, Debug)]
pub struct Generator {
    pub factor: usize,
    pub index: usize,
    pub kind: GenKind,
    pub matrix: SparseMatrix,
}

/// Lie-algebra action on a basis of weight vectors.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub dim: usize,
    pub system: RootSystem,
    pub generators: Vec<Generator>,
    /// Weight of each basis vector in fundamental-weight coordinates.
    pub weights: Vec<Weight>,
    /// Basis range of each summand.
    pub blocks: Vec<Range<usize>>,
}

impl MatrixRep {
    pub fn generator(&self, factor: usize, index: usize, kind: GenKind) -> &SparseMatrix {
        &self
            .generators
            .iter()
            .find(|g| g.factor == factor && g.index == index && g.kind == kind)
            .expect("generator present")
            .matrix
    }

    /// Checks `[h_i, e_j] = a_ji e_j`, `[h_i, f_j] = -a_ji f_j` and
    /// `[e_i, f_j] = δ_ij h_i` within each factor, and commutation across factors.
    pub fn check_relations(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Precondition(format!("generator relation fails: {what}")));
        for (fi, t) in self.system.factors().iter().enumerate() {
            let a = t.cartan();
            for i in 0..t.rank {
                let h = self.generator(fi, i, GenKind::H);
                for j in 0..t.rank {
                    let e = self.generator(fi, j, GenKind::E);
                    let f = self.generator(fi, j, GenKind::F);
                    if h.bracket(e) != e.scale(&q(a[j][i] as i64)) {
                        return fail(format!("[h{i},e{j}] on factor {fi}"));
                    }
                    if h.bracket(f) != f.scale(&q(-a[j][i] as i64)) {
                        return fail(format!("[h{i},f{j}] on factor {fi}"));
                    }
                    let ef = self.generator(fi, i, GenKind::E).bracket(f);
                    let want = if i == j { h.clone() } else { SparseMatrix::zero(self.dim) };
                    if ef != want {
                        return fail(format!("[e{i},f{j}] on factor {fi}"));
                    }
                }
            }
        }
        for g1 in &self.generators {
            for g2 in &self.generators {
                if g1.factor < g2.factor && !g1.matrix.bracket(&g2.matrix).is_zero() {
                    return fail(format!("factors {} and {} do not commute", g1.factor, g2.factor));
                }
            }
        }
        Ok(())
    }
}

fn unit(dim: usize, r: usize, c: usize, x: i64) -> SparseMatrix {
    let mut m = SparseMatrix::zero(dim);
    m.add(r, c, q(x));
    m
}

/// Raising operators of the natural module, Bourbaki numbering; basis
/// `v_1..v_r, (v_0), v_{-r}..v_{-1}` for types B, C, D.
fn natural_raising(t: SimpleType) -> Result<(usize, Vec<SparseMatrix>)> {
    let r = t.rank;
    let pair = |n: usize, a: usize, b: usize, qa: usize, qb: usize| unit(n, a, b, 1).minus(&unit(n, qb, qa, 1));
    match t.kind {
        Kind::A => Ok((r + 1, (0..r).map(|i| unit(r + 1, i, i + 1, 1)).collect())),
        Kind::B => {
            let n = 2 * r + 1;
            let neg = |j: usize| 2 * r - j;
            let mut es: Vec<SparseMatrix> = (0..r - 1).map(|i| pair(n, i, i + 1, neg(i), neg(i + 1))).collect();
            es.push(unit(n, r - 1, r, 1).minus(&unit(n, r, neg(r - 1), 1)));
            Ok((n, es))
        }
        Kind::C => {
            let n = 2 * r;
            let neg = |j: usize| 2 * r - 1 - j;
            let mut es: Vec<SparseMatrix> = (0..r - 1).map(|i| pair(n, i, i + 1, neg(i), neg(i + 1))).collect();
            es.push(unit(n, r - 1, neg(r - 1), 1));
            Ok((n, es))
        }
        Kind::D => {
            let n = 2 * r;
            let neg = |j: usize| 2 * r - 1 - j;
            let mut es: Vec<SparseMatrix> = (0..r - 1).map(|i| pair(n, i, i + 1, neg(i), neg(i + 1))).collect();
            es.push(unit(n, r - 2, neg(r - 1), 1).minus(&unit(n, r - 1, neg(r - 2), 1)));
            Ok((n, es))
        }
        _ => Err(Error::Unsupported(format!("no matrix model for type {t}"))),
    }
}

/// `(e, f, h)` triples from raising operators: `f ∝ eᵀ` scaled so `[h, e] = 2e`.
fn chevalley_triples(es: Vec<SparseMatrix>) -> Vec<[SparseMatrix; 3]> {
    es.into_iter()
        .map(|e| {
            let et = e.transpose();
            let h0 = e.bracket(&et);
            let he = h0.bracket(&e);
            let (&(r, c), x) = e.entries.iter().next().expect("nonzero raising operator");
            let c2 = he.get(r, c) / x;
            let s = q(2) / c2;
            [e, et.scale(&s), h0.scale(&s)]
        })
        .collect()
}

/// Action induced on `Λ^k` (antisymmetric) or `S^k` of a module of dimension `n`.
fn induced(triples: &[[SparseMatrix; 3]], n: usize, k: usize, symmetric: bool) -> (usize, Vec<[SparseMatrix; 3]>) {
    let mut basis: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, symmetric: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, if symmetric { i } else { i + 1 }, symmetric, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, symmetric, &mut cur, &mut basis);
    let index: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = basis.len();
    let lift = |x: &SparseMatrix| {
        let mut m = SparseMatrix::zero(dim);
        for (col, mono) in basis.iter().enumerate() {
            for p in 0..mono.len() {
                if p > 0 && mono[p] == mono[p - 1] {
                    continue;
                }
                let copies = mono.iter().filter(|&&s| s == mono[p]).count() as i64;
                for (&(i, j), a) in &x.entries {
                    if j != mono[p] {
                        continue;
                    }
                    let mut next = mono.clone();
                    next[p] = i;
                    let mut sign = 1i64;
                    if symmetric {
                        next.sort_unstable();
                    } else {
                        if next.iter().filter(|&&s| s == i).count() > 1 {
                            continue;
                        }
                        let mut v = next.clone();
                        for a in 0..v.len() {
                            for b in 0..v.len() - 1 - a {
                                if v[b] > v[b + 1] {
                                    v.swap(b, b + 1);
                                    sign = -sign;
                                }
                            }
                        }
                        next = v;
                    }
                    let factor = if symmetric { copies } else { 1 };
                    m.add(index[&next], col, a * q(sign * factor));
                }
            }
        }
        m
    };
    let out = triples.iter().map(|[e, f, h]| [lift(e), lift(f), lift(h)]).collect();
    (dim, out)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn weights_of(triples: &[[SparseMatrix; 3]], dim: usize) -> Vec<Weight> {
    let diags: Vec<Vec<Q>> = triples.iter().map(|t| t[2].diagonal().expect("diagonal Cartan")).collect();
    (0..dim).map(|b| diags.iter().map(|d| d[b].to_integer().try_into().expect("small weight")).collect()).collect()
}

fn weight_multiset(mut w: Vec<Weight>) -> Vec<Weight> {
    w.sort();
    w
}

/// Module of one simple factor with highest weight `lambda`, found among the
/// exterior and symmetric powers of the natural module and its dual.
fn realize_factor(t: SimpleType, lambda: &[i32]) -> Result<(usize, Vec<[SparseMatrix; 3]>)> {
    let single = RootSystem::new(vec![t]);
    if lambda.iter().all(|&x| x == 0) {
        let z = SparseMatrix::zero(1);
        return Ok((1, (0..t.rank).map(|_| [z.clone(), z.clone(), z.clone()]).collect()));
    }
    let target_dim = single.weyl_dim(lambda)? as usize;
    if target_dim > MAX_REALIZED_DIM {
        return Err(Error::Unsupported(format!("module {} of {t} has dimension {target_dim} > {MAX_REALIZED_DIM}", single.format_weight(lambda))));
    }
    let ws = single.weight_system(lambda)?;
    let mut target: Vec<Weight> = Vec::new();
    for (w, m) in &ws.all {
        for _ in 0..*m {
            target.push(w.clone());
        }
    }
    let target = weight_multiset(target);
    let (n, es) = natural_raising(t)?;
    let natural = chevalley_triples(es);
    let dual: Vec<[SparseMatrix; 3]> = natural
        .iter()
        .map(|[e, f, h]| [e.transpose().scale(&q(-1)), f.transpose().scale(&q(-1)), h.transpose().scale(&q(-1))])
        .collect();
    for base in [&natural, &dual] {
        for symmetric in [false, true] {
            for k in 1..=target_dim.max(n) {
                let dim = if symmetric { binomial(n + k - 1, k) } else if k <= n { binomial(n, k) } else { 0 };
                if dim != target_dim {
                    continue;
                }
                let (d, m) = induced(base, n, k, symmetric);
                if weight_multiset(weights_of(&m, d)) == target {
                    return Ok((d, m));
                }
            }
        }
    }
    Err(Error::Unsupported(format!("no tensor model for {} of {t}", single.format_weight(lambda))))
}

/// Matrix model of the irreducible module with highest weight `lambda`:
/// an outer tensor product of per-factor models.
pub fn realize(system: &RootSystem, lambda: &[i32]) -> Result<MatrixRep> {
    system.check_dominant(lambda)?;
    let mut parts = Vec::new();
    for (f, t) in system.factors().iter().enumerate() {
        parts.push(realize_factor(*t, system.part(lambda, f))?);
    }
    let dim: usize = parts.iter().map(|p| p.0).product();
    if dim > MAX_REALIZED_DIM {
        return Err(Error::Unsupported(format!("dimension {dim} > {MAX_REALIZED_DIM}")));
    }
    let mut generators = Vec::new();
    let mut weights: Vec<Weight> = vec![Vec::new(); dim];
    for (f, (d, triples)) in parts.iter().enumerate() {
        let before: usize = parts[..f].iter().map(|p| p.0).product();
        let after: usize = parts[f + 1..].iter().map(|p| p.0).product();
        let wrap = |m: &SparseMatrix| SparseMatrix::kron(&SparseMatrix::kron(&SparseMatrix::identity(before), m), &SparseMatrix::identity(after));
        for (i, triple) in triples.iter().enumerate() {
            for (kind, m) in [GenKind::E, GenKind::F, GenKind::H].into_iter().zip(triple) {
                generators.push(Generator { factor: f, index: i, kind, matrix: wrap(m) });
            }
        }
        let local = weights_of(triples, *d);
        for (b, w) in weights.iter_mut().enumerate() {
            w.extend_from_slice(&local[(b / after) % d]);
        }
    }
    Ok(MatrixRep { dim, system: system.clone(), generators, weights, blocks: vec![0..dim] })
}

/// Direct sum of the summands' models, block diagonal.
pub fn realize_sum(system: &RootSystem, rep: &RepSpec) -> Result<MatrixRep> {
    let parts: Vec<MatrixRep> = rep.summands.iter().map(|w| realize(system, w)).collect::<Result<_>>()?;
    let dim: usize = parts.iter().map(|p| p.dim).sum();
    let mut generators: Vec<Generator> = parts[0]
        .generators
        .iter()
        .map(|g| Generator { factor: g.factor, index: g.index, kind: g.kind, matrix: SparseMatrix::zero(dim) })
        .collect();
    let mut weights = Vec::new();
    let mut blocks = Vec::new();
    let mut offset = 0;
    for p in &parts {
        for (g, pg) in generators.iter_mut().zip(&p.generators) {
            for (&(r, c), x) in &pg.matrix.entries {
                g.matrix.add(r + offset, c + offset, x.clone());
            }
        }
        weights.extend(p.weights.iter().cloned());
        blocks.push(offset..offset + p.dim);
        offset += p.dim;
    }
    Ok(MatrixRep { dim, system: system.clone(), generators, weights, blocks })
}

