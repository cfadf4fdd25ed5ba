//! Root data of products of simple Lie algebras: Cartan matrices, positive
//! roots, dominant reflection, the Weyl dimension formula, Freudenthal
//! weight multiplicities and ε-coordinates for classical types.

mod eps;
mod factor;
mod types;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use eps::{eps_len, eps_to_omega, omega_to_eps};
pub use factor::{FactorData, FactorWeights};
pub use types::{Kind, SimpleType};

/// Integer coordinates in the fundamental-weight basis, concatenated across
/// the simple factors of a [`RootSystem`].
pub type Weight = Vec<i32>;

static FACTORS: Lazy<RwLock<HashMap<SimpleType, Arc<FactorData>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn factor_data(ty: SimpleType) -> Arc<FactorData> {
    if let Some(d) = FACTORS.read().get(&ty) {
        return d.clone();
    }
    let d = Arc::new(FactorData::new(ty));
    FACTORS.write().entry(ty).or_insert(d).clone()
}

struct Inner {
    factors: Vec<SimpleType>,
    offsets: Vec<usize>,
    data: Vec<Arc<FactorData>>,
    rank: usize,
}

/// An ordered product of simple root systems. The empty product is allowed
/// and stands for the trivial group.
#[derive(Clone)]
pub struct RootSystem(Arc<Inner>);

/// Weights of an irreducible module over a product system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub dominant: Vec<(Weight, u64)>,
    pub all: Vec<(Weight, u64)>,
}

impl WeightSystem {
    pub fn dim(&self) -> u64 {
        self.all.iter().map(|(_, m)| m).sum()
    }
}

impl RootSystem {
    pub fn new(factors: Vec<SimpleType>) -> Self {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut rank = 0;
        for f in &factors {
            offsets.push(rank);
            rank += f.rank;
        }
        let data = factors.iter().map(|&t| factor_data(t)).collect();
        RootSystem(Arc::new(Inner { factors, offsets, data, rank }))
    }

    pub fn trivial() -> Self {
        RootSystem::new(Vec::new())
    }

    /// Parses `"A2"`, `"B3xA1"`, `"D6"`; the empty string is the trivial system.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RootSystem::trivial());
        }
        let factors = s.split(['x', 'X', '×']).map(SimpleType::parse).collect::<Result<Vec<_>>>()?;
        Ok(RootSystem::new(factors))
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.0.factors
    }

    pub fn factor_data(&self, i: usize) -> &FactorData {
        &self.0.data[i]
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Coordinate range of factor `i`.
    pub fn range(&self, i: usize) -> std::ops::Range<usize> {
        let o = self.0.offsets[i];
        o..o + self.0.factors[i].rank
    }

    pub fn zero(&self) -> Weight {
        vec![0; self.rank()]
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank()]
    }

    /// `ω_i` of factor `f`.
    pub fn fundamental(&self, f: usize, i: usize) -> Weight {
        let mut w = self.zero();
        w[self.range(f).start + i] = 1;
        w
    }

    pub fn check_weight(&self, w: &[i32]) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::WeightArity { weight: w.to_vec(), got: w.len(), expected: self.rank(), system: self.to_string() });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &[i32]) -> Result<()> {
        self.check_weight(w)?;
        if w.iter().any(|&x| x < 0) {
            return Err(Error::NonDominant(w.to_vec()));
        }
        Ok(())
    }

    /// Reflects `w` (read as `λ + ρ`) into the dominant chamber in place and
    /// returns the sign of the Weyl element, or 0 if `w` lies on a wall.
    pub fn reflect_in_place(&self, w: &mut [i32]) -> i8 {
        let mut sign = 1i8;
        for (f, d) in self.0.data.iter().enumerate() {
            let s = d.reflect_signed(&mut w[self.range(f)]);
            if s == 0 {
                return 0;
            }
            sign *= s;
        }
        sign
    }

    pub fn dominant_reflect(&self, w: &[i32]) -> (i8, Weight) {
        let mut v = w.to_vec();
        let s = self.reflect_in_place(&mut v);
        (s, v)
    }

    /// The dominant Weyl conjugate of `w`.
    pub fn to_dominant(&self, w: &[i32]) -> Weight {
        let mut v = w.to_vec();
        for (f, d) in self.0.data.iter().enumerate() {
            d.reflect_plain(&mut v[self.range(f)]);
        }
        v
    }

    pub fn weyl_dim(&self, lambda: &[i32]) -> Result<u128> {
        self.check_dominant(lambda)?;
        Ok(self.weyl_dim_unchecked(lambda))
    }

    pub(crate) fn weyl_dim_unchecked(&self, lambda: &[i32]) -> u128 {
        let mut d: u128 = 1;
        for (f, data) in self.0.data.iter().enumerate() {
            let part = data.weyl_dim(&lambda[self.range(f)]).to_u128().expect("dimension fits in 128 bits");
            d = d.checked_mul(part).expect("dimension fits in 128 bits");
        }
        d
    }

    fn factor_weights(&self, lambda: &[i32]) -> Vec<Arc<FactorWeights>> {
        self.0.data.iter().enumerate().map(|(f, d)| d.weights(&lambda[self.range(f)])).collect()
    }

    /// Weight multiset of `V(λ)` (all weights, and the dominant ones).
    pub fn weight_system(&self, lambda: &[i32]) -> Result<WeightSystem> {
        self.check_dominant(lambda)?;
        let parts = self.factor_weights(lambda);
        let mut dominant = cartesian(&parts, |p| &p.dominant);
        dominant.sort_by(|a, b| b.0.cmp(&a.0));
        let mut all = cartesian(&parts, |p| &p.all);
        all.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(WeightSystem { dominant, all })
    }

    /// All weights of `V(λ)` with multiplicity, unsorted.
    pub(crate) fn weights_unchecked(&self, lambda: &[i32]) -> Vec<(Weight, u64)> {
        cartesian(&self.factor_weights(lambda), |p| &p.all)
    }

    /// Number of weights (with multiplicity) of `V(λ)`; equals the dimension.
    pub fn weight_count(&self, lambda: &[i32]) -> usize {
        self.factor_weights(lambda).iter().map(|p| p.all.len()).product()
    }

    /// `-w_0(λ)`, the highest weight of the dual module.
    pub fn dual(&self, w: &[i32]) -> Weight {
        let mut out = w.to_vec();
        for (f, t) in self.0.factors.iter().enumerate() {
            let r = self.range(f);
            for (i, &j) in t.dual_permutation().iter().enumerate() {
                out[r.start + i] = w[r.start + j];
            }
        }
        out
    }

    /// Weight restricted to factor `f`.
    pub fn part<'a>(&self, w: &'a [i32], f: usize) -> &'a [i32] {
        &w[self.range(f)]
    }

    /// Bracket rendering: one bracket per factor, e.g. `[2][2][1,1]`.
    pub fn format_weight(&self, w: &[i32]) -> String {
        if self.0.factors.is_empty() {
            return "[]".to_string();
        }
        (0..self.0.factors.len())
            .map(|f| {
                let body: Vec<String> = self.part(w, f).iter().map(|x| x.to_string()).collect();
                format!("[{}]", body.join(","))
            })
            .collect()
    }

    /// Parses `"[1,0]"` or the per-factor form `"[1]x[0,1]"` / `"[1][0,1]"`.
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let mut out = Vec::new();
        let mut pos = 0;
        let bytes = s.as_bytes();
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            token: s.get(pos..).unwrap_or("").chars().take(8).collect(),
            msg: msg.to_string(),
        };
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' | b'x' | b'X' => pos += 1,
                b'[' => {
                    let close = s[pos..].find(']').ok_or_else(|| err(pos, "unclosed bracket"))? + pos;
                    let body = s[pos + 1..close].trim();
                    if !body.is_empty() {
                        for (k, tok) in body.split(',').enumerate() {
                            let v: i32 = tok.trim().parse().map_err(|_| err(pos + 1, &format!("bad integer in entry {}", k + 1)))?;
                            out.push(v);
                        }
                    }
                    pos = close + 1;
                }
                _ => return Err(err(pos, "expected `[`")),
            }
        }
        self.check_weight(&out)?;
        Ok(out)
    }
}

fn cartesian(parts: &[Arc<FactorWeights>], pick: impl Fn(&FactorWeights) -> &Vec<(Vec<i32>, u64)>) -> Vec<(Weight, u64)> {
    let mut acc: Vec<(Weight, u64)> = vec![(Vec::new(), 1)];
    for p in parts {
        let mut next = Vec::with_capacity(acc.len() * pick(p).len());
        for (w, m) in &acc {
            for (x, n) in pick(p) {
                let mut v = w.clone();
                v.extend_from_slice(x);
                next.push((v, m * n));
            }
        }
        acc = next;
    }
    acc
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.factors == other.0.factors
    }
}

impl Eq for RootSystem {}

impl std::hash::Hash for RootSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.factors.hash(state)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.0.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", names.join("x"))
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({self})")
    }
}

impl Serialize for RootSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        RootSystem::parse(&s).map_err(serde::de::Error::custom)
    }
}
