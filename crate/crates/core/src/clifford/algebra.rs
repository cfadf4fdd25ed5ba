use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::{q, GenKind, MatrixRep, Q, SparseMatrix};
use crate::error::{Error, Result};
use crate::smf::TorusEmbedding;

/// Largest `dim(V ⊕ V*)` accepted by [`clifford_invariants`].
pub const MAX_CLIFFORD_DIM: usize = 16;

/// Normal-ordered monomial `v_S λ_T`: vectors left, dual vectors right,
/// each in increasing index order.
pub type Monomial = (u32, u32);

/// Element of `Cl(V ⊕ V*)` for the pairing `⟨(v,λ),(w,μ)⟩ = λ(w) + μ(v)`,
/// so `λ_j v_i + v_i λ_j = δ_ij` and all other generators anticommute.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    pub d: usize,
    pub terms: BTreeMap<Monomial, Q>,
}

fn parity(x: u32) -> i64 {
    if x.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn above(mask: u32, i: usize) -> u32 {
    mask & !((1u32 << (i + 1)) - 1)
}

impl CliffordElement {
    pub fn zero(d: usize) -> Self {
        CliffordElement { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::monomial(d, (0, 0), Q::one())
    }

    pub fn monomial(d: usize, m: Monomial, c: Q) -> Self {
        let mut x = Self::zero(d);
        x.add_term(m, c);
        x
    }

    pub fn vector(d: usize, i: usize) -> Self {
        Self::monomial(d, (1 << i, 0), Q::one())
    }

    pub fn covector(d: usize, j: usize) -> Self {
        Self::monomial(d, (0, 1 << j), Q::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut x = Self::zero(self.d);
        for (m, c) in &self.terms {
            x.add_term(*m, c * s);
        }
        x
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for (m, c) in &other.terms {
            x.add_term(*m, c.clone());
        }
        x
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&q(-1)))
    }

    /// Right multiplication by `v_i`, term by term.
    fn times_vector(&self, i: usize) -> Self {
        let bit = 1u32 << i;
        let mut x = Self::zero(self.d);
        for (&(s, t), c) in &self.terms {
            if s & bit == 0 {
                let sign = parity(t) * parity(above(s, i));
                x.add_term((s | bit, t), c * q(sign));
            }
            if t & bit != 0 {
                x.add_term((s, t & !bit), c * q(parity(above(t, i))));
            }
        }
        x
    }

    /// Right multiplication by `λ_j`.
    fn times_covector(&self, j: usize) -> Self {
        let bit = 1u32 << j;
        let mut x = Self::zero(self.d);
        for (&(s, t), c) in &self.terms {
            if t & bit == 0 {
                x.add_term((s, t | bit), c * q(parity(above(t, j))));
            }
        }
        x
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.d);
        for (&(s, t), c) in &other.terms {
            let mut x = self.scale(c);
            for i in 0..self.d {
                if s >> i & 1 == 1 {
                    x = x.times_vector(i);
                }
            }
            for j in 0..self.d {
                if t >> j & 1 == 1 {
                    x = x.times_covector(j);
                }
            }
            out = out.plus(&x);
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).minus(&other.mul(self))
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mono = |(s, t): Monomial| {
            let mut out: Vec<String> = (0..self.d).filter(|i| s >> i & 1 == 1).map(|i| format!("v{}", i + 1)).collect();
            out.extend((0..self.d).filter(|j| t >> j & 1 == 1).map(|j| format!("l{}", j + 1)));
            if out.is_empty() {
                "1".to_string()
            } else {
                out.join("")
            }
        };
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{}", mono(*m))).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Replaces one set bit of `mask` by the image under `x`, as a derivation on
/// the wedge of the basis vectors in `mask`. `dual` uses `-xᵀ`.
fn derive_mask(x: &SparseMatrix, mask: u32, dual: bool, out: &mut Vec<(u32, Q)>) {
    for (&(r, c), a) in &x.entries {
        let (from, to, coeff) = if dual { (r, c, -a.clone()) } else { (c, r, a.clone()) };
        let fb = 1u32 << from;
        if mask & fb == 0 {
            continue;
        }
        let rest = mask & !fb;
        let tb = 1u32 << to;
        if rest & tb != 0 {
            continue;
        }
        let sign = parity(mask & (fb - 1)) * parity(rest & (tb - 1));
        out.push((rest | tb, coeff * q(sign)));
    }
}

/// Action of a Lie-algebra element (matrix on `V`) on `Cl(V ⊕ V*)` by derivation.
pub fn derivation(x: &SparseMatrix, el: &CliffordElement) -> CliffordElement {
    let mut out = CliffordElement::zero(el.d);
    let mut buf = Vec::new();
    for (&(s, t), c) in &el.terms {
        buf.clear();
        derive_mask(x, s, false, &mut buf);
        for (s2, a) in buf.drain(..) {
            out.add_term((s2, t), c * a);
        }
        derive_mask(x, t, true, &mut buf);
        for (t2, a) in buf.drain(..) {
            out.add_term((s, t2), c * a);
        }
    }
    out
}

/// Torus character of a monomial: row `r` is `Σ_j T[r][j] (|S∩V_j| - |T∩V_j|)`.
fn torus_character(rep: &MatrixRep, t: Option<&TorusEmbedding>, (s, tt): Monomial) -> Vec<i64> {
    let Some(t) = t else { return Vec::new() };
    let charge: Vec<i64> = rep
        .blocks
        .iter()
        .map(|b| {
            let m = (((1u64 << b.end) - 1) as u32) & !(((1u64 << b.start) - 1) as u32);
            (s & m).count_ones() as i64 - (tt & m).count_ones() as i64
        })
        .collect();
    t.matrix.iter().map(|row| row.iter().zip(&charge).map(|(a, b)| a * b).sum()).collect()
}

fn block_key(rep: &MatrixRep, (s, t): Monomial) -> Vec<(u32, u32)> {
    rep.blocks
        .iter()
        .map(|b| {
            let m = (((1u64 << b.end) - 1) as u32) & !(((1u64 << b.start) - 1) as u32);
            ((s & m).count_ones(), (t & m).count_ones())
        })
        .collect()
}

/// Kernel of the sparse constraint rows over `ncols` unknowns.
fn kernel(rows: Vec<BTreeMap<usize, Q>>, ncols: usize) -> Vec<BTreeMap<usize, Q>> {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
    for mut row in rows {
        for (p, prow) in &pivots {
            if let Some(c) = row.get(p).cloned() {
                for (k, x) in prow {
                    let e = row.entry(*k).or_insert_with(Q::zero);
                    *e -= &c * x;
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            }
        }
        let Some((&p, lead)) = row.iter().next() else { continue };
        let inv = Q::one() / lead.clone();
        let row: BTreeMap<usize, Q> = row.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        for prow in pivots.values_mut() {
            if let Some(c) = prow.get(&p).cloned() {
                for (k, x) in &row {
                    let e = prow.entry(*k).or_insert_with(Q::zero);
                    *e -= &c * x;
                    if e.is_zero() {
                        prow.remove(k);
                    }
                }
            }
        }
        pivots.insert(p, row);
    }
    (0..ncols)
        .filter(|c| !pivots.contains_key(c))
        .map(|free| {
            let mut v = BTreeMap::new();
            v.insert(free, Q::one());
            for (p, prow) in &pivots {
                if let Some(x) = prow.get(&free) {
                    v.insert(*p, -x.clone());
                }
            }
            v
        })
        .collect()
}

/// Basis of `Cl(V ⊕ V*)^G`, the centralizer of `G` acting on `ΛV`. With a
/// torus, only monomials of trivial torus character are admitted; the
/// saturated torus is the identity embedding.
pub fn clifford_invariants(rep: &MatrixRep, torus: Option<&TorusEmbedding>) -> Result<Vec<CliffordElement>> {
    let d = rep.dim;
    if 2 * d > MAX_CLIFFORD_DIM {
        return Err(Error::Precondition(format!("dim(V ⊕ V*) = {} exceeds {MAX_CLIFFORD_DIM}", 2 * d)));
    }
    if let Some(t) = torus {
        if t.matrix.iter().any(|row| row.len() != rep.blocks.len()) {
            return Err(Error::Precondition("torus embedding must have one column per summand".into()));
        }
    }
    let r = rep.system.rank();
    let mut blocks: BTreeMap<Vec<(u32, u32)>, Vec<Monomial>> = BTreeMap::new();
    let full = if d == 0 { 0 } else { ((1u64 << d) - 1) as u32 };
    for s in 0..=full {
        for t in 0..=full {
            let mut w = vec![0i32; r];
            for i in 0..d {
                if s >> i & 1 == 1 {
                    w.iter_mut().zip(&rep.weights[i]).for_each(|(a, b)| *a += b);
                }
                if t >> i & 1 == 1 {
                    w.iter_mut().zip(&rep.weights[i]).for_each(|(a, b)| *a -= b);
                }
            }
            if w.iter().any(|&x| x != 0) || torus_character(rep, torus, (s, t)).iter().any(|&x| x != 0) {
                continue;
            }
            blocks.entry(block_key(rep, (s, t))).or_default().push((s, t));
        }
    }
    let ops: Vec<&SparseMatrix> = rep.generators.iter().filter(|g| g.kind != GenKind::H).map(|g| &g.matrix).collect();
    let mut basis = Vec::new();
    for cols in blocks.values() {
        let mut rows: BTreeMap<(usize, Monomial), BTreeMap<usize, Q>> = BTreeMap::new();
        for (ci, m) in cols.iter().enumerate() {
            let x = CliffordElement::monomial(d, *m, Q::one());
            for (oi, op) in ops.iter().enumerate() {
                for (target, c) in derivation(op, &x).terms {
                    rows.entry((oi, target)).or_default().insert(ci, c);
                }
            }
        }
        for v in kernel(rows.into_values().collect(), cols.len()) {
            let mut el = CliffordElement::zero(d);
            for (ci, c) in v {
                el.add_term(cols[ci], c);
            }
            basis.push(el);
        }
    }
    Ok(basis)
}

/// Whether every generator of `rep` (and the torus) kills `x`.
pub fn is_invariant(rep: &MatrixRep, torus: Option<&TorusEmbedding>, x: &CliffordElement) -> bool {
    rep.generators.iter().all(|g| derivation(&g.matrix, x).is_zero())
        && x.terms.keys().all(|m| torus_character(rep, torus, *m).iter().all(|&c| c == 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Commutativity {
    pub commutative: bool,
    /// Indices of a non-commuting basis pair.
    pub witness: Option<(usize, usize)>,
}

/// Pairwise commutator test on a basis.
pub fn is_commutative(basis: &[CliffordElement]) -> Commutativity {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !basis[i].commutator(&basis[j]).is_zero() {
                return Commutativity { commutative: false, witness: Some((i, j)) };
            }
        }
    }
    Commutativity { commutative: true, witness: None }
}
