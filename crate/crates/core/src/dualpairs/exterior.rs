use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::Partition;

/// Sparse element of `Λ(C^n ⊗ C^m)`. Basis vector `e_{i,a}` (0-based) is bit
/// `i·m + a`; a monomial is the wedge of its set bits in increasing order.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorVector {
    n: usize,
    m: usize,
    terms: BTreeMap<u64, Rational64>,
}

/// Elementary operator on the exterior algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// Left multiplication by a basis vector.
    Wedge(u32),
    /// Interior product with the coordinate functional of a basis vector.
    Contract(u32),
}

/// Sign and result of applying an elementary operator to a monomial.
pub fn apply_elementary(op: Elementary, mono: u64) -> Option<(i64, u64)> {
    let (bit, present_needed) = match op {
        Elementary::Wedge(b) => (b, false),
        Elementary::Contract(b) => (b, true),
    };
    let mask = 1u64 << bit;
    if (mono & mask != 0) != present_needed {
        return None;
    }
    let below = (mono & (mask - 1)).count_ones();
    let sign = if below % 2 == 0 { 1 } else { -1 };
    Some((sign, mono ^ mask))
}

impl ExteriorVector {
    pub fn zero(n: usize, m: usize) -> Self {
        assert!(n * m <= 64, "at most 64 basis vectors");
        ExteriorVector { n, m, terms: BTreeMap::new() }
    }

    /// The empty wedge `1`.
    pub fn one(n: usize, m: usize) -> Self {
        Self::monomial(n, m, 0, Rational64::one())
    }

    pub fn monomial(n: usize, m: usize, mask: u64, c: Rational64) -> Self {
        let mut v = Self::zero(n, m);
        v.add_term(mask, c);
        v
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    /// Bit index of `e_{i,a}` (0-based).
    pub fn index(&self, i: usize, a: usize) -> u32 {
        (i * self.m + a) as u32
    }

    pub fn add_term(&mut self, mask: u64, c: Rational64) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(Rational64::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, Rational64)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of a homogeneous vector, `None` if mixed or zero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|k| k.count_ones());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: Rational64) -> Self {
        let mut out = Self::zero(self.n, self.m);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, *v);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(-Rational64::one()))
    }

    /// Applies a composite `ops[0] ∘ ops[1] ∘ …` (rightmost first).
    pub fn apply_word(&self, ops: &[Elementary]) -> Self {
        let mut out = Self::zero(self.n, self.m);
        'terms: for (mono, c) in &self.terms {
            let mut mono = *mono;
            let mut sign = 1i64;
            for op in ops.iter().rev() {
                match apply_elementary(*op, mono) {
                    Some((s, next)) => {
                        sign *= s;
                        mono = next;
                    }
                    None => continue 'terms,
                }
            }
            out.add_term(mono, c * Rational64::from_integer(sign));
        }
        out
    }

    /// `e_{i,a}` as index pairs, in increasing bit order.
    pub fn indices(&self, mask: u64) -> Vec<(usize, usize)> {
        (0..64).filter(|b| mask >> b & 1 == 1).map(|b| (b / self.m, b % self.m)).collect()
    }
}

impl fmt::Debug for ExteriorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let wedge: Vec<String> = self.indices(*k).iter().map(|(i, a)| format!("e{},{}", i + 1, a + 1)).collect();
                let body = if wedge.is_empty() { "1".to_string() } else { wedge.join("^") };
                format!("{c}*{body}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `ω_λ = e_{1,1} ∧ … ∧ e_{1,λ_1} ∧ e_{2,1} ∧ … ∧ e_{n,λ_n}`.
pub fn hwv_omega(lambda: &Partition, n: usize, m: usize) -> Result<ExteriorVector> {
    if !lambda.fits_box(n, m as u32) {
        return Err(Error::BoxViolation { partition: lambda.to_string(), rows: n, cols: m });
    }
    let mut mask = 0u64;
    for i in 0..lambda.len() {
        for a in 0..lambda.part(i) as usize {
            mask |= 1 << (i * m + a);
        }
    }
    Ok(ExteriorVector::monomial(n, m, mask, Rational64::one()))
}

/// Which of the three families an operator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorKind {
    Raise(usize, usize),
    Lower(usize, usize),
    Preserve(usize, usize),
}

/// A quadratic operator `Σ c · x y` plus a scalar shift stored doubled.
#[derive(Clone, Debug)]
pub struct ExteriorOperator {
    pub kind: OperatorKind,
    pub words: Vec<(i64, [Elementary; 2])>,
    /// Twice the scalar shift, e.g. `-n` for `d_{a,a}`.
    pub shift2: i64,
}

impl ExteriorOperator {
    pub fn apply(&self, v: &ExteriorVector) -> ExteriorVector {
        let mut out = ExteriorVector::zero(v.n, v.m);
        for (c, word) in &self.words {
            out = out.plus(&v.apply_word(word).scale(Rational64::from_integer(*c)));
        }
        if self.shift2 != 0 {
            out = out.plus(&v.scale(Rational64::new(self.shift2, 2)));
        }
        out
    }

    /// Change of exterior degree.
    pub fn degree_shift(&self) -> i32 {
        match self.kind {
            OperatorKind::Raise(..) => 2,
            OperatorKind::Lower(..) => -2,
            OperatorKind::Preserve(..) => 0,
        }
    }
}

/// `e^+_{a,b}`, `e^-_{a,b}` for `a < b` and `d_{a,b}` for all `a, b`
/// (0-based indices), with the form `(e_i, e_j) = δ_{i, n+1-j}`.
pub fn build_operators(n: usize, m: usize) -> Vec<ExteriorOperator> {
    let idx = |i: usize, a: usize| (i * m + a) as u32;
    let mut ops = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            ops.push(ExteriorOperator {
                kind: OperatorKind::Raise(a, b),
                words: (0..n).map(|i| (1, [Elementary::Wedge(idx(i, a)), Elementary::Wedge(idx(n - 1 - i, b))])).collect(),
                shift2: 0,
            });
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            ops.push(ExteriorOperator {
                kind: OperatorKind::Lower(a, b),
                words: (0..n).map(|i| (1, [Elementary::Contract(idx(i, a)), Elementary::Contract(idx(n - 1 - i, b))])).collect(),
                shift2: 0,
            });
        }
    }
    for a in 0..m {
        for b in 0..m {
            // contraction with the form-dual of e_{n+1-i} is the coordinate functional of e_i
            ops.push(ExteriorOperator {
                kind: OperatorKind::Preserve(a, b),
                words: (0..n).map(|i| (1, [Elementary::Wedge(idx(i, a)), Elementary::Contract(idx(i, b))])).collect(),
                shift2: if a == b { -(n as i64) } else { 0 },
            });
        }
    }
    ops
}

/// True when every lowering operator `e^-_{a,b}` kills `ω`.
pub fn is_harmonic(omega: &ExteriorVector, n: usize, m: usize) -> bool {
    build_operators(n, m)
        .iter()
        .filter(|op| matches!(op.kind, OperatorKind::Lower(..)))
        .all(|op| op.apply(omega).is_zero())
}

/// `[x, y]` applied to `v`.
pub fn commutator_apply(x: &ExteriorOperator, y: &ExteriorOperator, v: &ExteriorVector) -> ExteriorVector {
    x.apply(&y.apply(v)).minus(&y.apply(&x.apply(v)))
}

/// Sparse matrix entry `((column, row), coefficient)` on the monomial basis.
pub type MatrixEntry = ((u64, u64), Rational64);

/// Matrix of a linear map on `Λ(C^n ⊗ C^m)`, entries sorted by column then row.
pub fn matrix_of<F>(n: usize, m: usize, exec: Exec, f: F) -> Vec<MatrixEntry>
where
    F: Fn(&ExteriorVector) -> ExteriorVector + Sync + Send,
{
    assert!(n * m < 32, "basis too large to enumerate");
    let basis: Vec<u64> = (0..1u64 << (n * m)).collect();
    exec.map(&basis, |&col| {
        let image = f(&ExteriorVector::monomial(n, m, col, Rational64::one()));
        image.terms().map(|(row, c)| ((col, row), c)).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Basis of `so_n` for the split form: `E_{ij} - E_{n-1-j, n-1-i}` with `i + j < n - 1`.
pub fn so_n_basis(n: usize) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n - 1 {
                let mut x = vec![vec![0i64; n]; n];
                x[i][j] += 1;
                x[n - 1 - j][n - 1 - i] -= 1;
                out.push(x);
            }
        }
    }
    out
}

/// Derivation action of a matrix `X ∈ gl_n` on `Λ(C^n ⊗ C^m)`.
pub fn derivation(x: &[Vec<i64>], v: &ExteriorVector) -> ExteriorVector {
    let (n, m) = v.ambient();
    let mut out = ExteriorVector::zero(n, m);
    for l in 0..n {
        for k in 0..n {
            if x[l][k] == 0 {
                continue;
            }
            for a in 0..m {
                let word = [Elementary::Wedge((l * m + a) as u32), Elementary::Contract((k * m + a) as u32)];
                out = out.plus(&v.apply_word(&word).scale(Rational64::from_integer(x[l][k])));
            }
        }
    }
    out
}
