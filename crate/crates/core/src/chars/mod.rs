//! The representation ring of a product root system: virtual characters,
//! Klimyk tensor products, Adams operations, exterior and symmetric powers,
//! plethysm, dualization and the classical branching rules.

mod branch;
mod kernel;
mod lambda;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rootdata::{RootSystem, Weight};
use crate::Mult;

pub use branch::{
    branch_gl_interlace, branch_gl_to_o, branch_gl_to_sp, label_dim, o_to_so, o_to_so_character, so_system, BranchGroup, BranchLabel,
    BranchResult,
};
pub use kernel::brauer_product;
pub use lambda::{adams, exterior_power, plethysm, plethysm_all, plethysm_with, symmetric_power, PowerKind, PowerTower};

/// An element of the representation ring: a finite integer combination of
/// irreducible characters indexed by dominant weights.
#[derive(Clone, PartialEq, Eq)]
pub struct VirtualCharacter {
    system: RootSystem,
    terms: BTreeMap<Weight, Mult>,
}

impl VirtualCharacter {
    pub fn zero(system: &RootSystem) -> Self {
        VirtualCharacter { system: system.clone(), terms: BTreeMap::new() }
    }

    pub fn trivial(system: &RootSystem) -> Self {
        let mut c = Self::zero(system);
        c.terms.insert(system.zero(), 1);
        c
    }

    pub fn irreducible(system: &RootSystem, lambda: &[i32]) -> Result<Self> {
        system.check_dominant(lambda)?;
        let mut c = Self::zero(system);
        c.terms.insert(lambda.to_vec(), 1);
        Ok(c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, Mult)>>(system: &RootSystem, terms: I) -> Result<Self> {
        let mut c = Self::zero(system);
        for (w, m) in terms {
            system.check_dominant(&w)?;
            c.add_term(w, m);
        }
        Ok(c)
    }

    /// Trusted constructor; keys must be dominant and values nonzero.
    pub(crate) fn from_map(system: &RootSystem, terms: BTreeMap<Weight, Mult>) -> Self {
        debug_assert!(terms.iter().all(|(w, m)| *m != 0 && w.iter().all(|&x| x >= 0)));
        VirtualCharacter { system: system.clone(), terms }
    }

    pub fn add_term(&mut self, w: Weight, m: Mult) {
        if m == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// Terms in lexicographic order of their highest weights.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, Mult)> {
        self.terms.iter().map(|(w, m)| (w, *m))
    }

    pub fn multiplicity(&self, w: &[i32]) -> Mult {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when all multiplicities are nonnegative.
    pub fn is_actual(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// `Σ m · dim V(λ)`.
    pub fn dim(&self) -> Mult {
        self.terms.iter().map(|(w, m)| m * self.system.weyl_dim_unchecked(w) as Mult).sum()
    }

    /// Largest multiplicity and the smallest weight attaining it.
    pub fn max_multiplicity(&self) -> Option<(&Weight, Mult)> {
        let mut best: Option<(&Weight, Mult)> = None;
        for (w, &m) in &self.terms {
            if best.map_or(true, |(_, b)| m > b) {
                best = Some((w, m));
            }
        }
        best
    }

    /// Smallest weight with multiplicity at least 2.
    pub fn first_repeated(&self) -> Option<(&Weight, Mult)> {
        self.terms.iter().find(|(_, &m)| m >= 2).map(|(w, &m)| (w, m))
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m <= 1)
    }

    pub fn scale(&self, k: Mult) -> Self {
        if k == 0 {
            return Self::zero(&self.system);
        }
        let terms = self.terms.iter().map(|(w, m)| (w.clone(), m * k)).collect();
        Self::from_map(&self.system, terms)
    }

    /// Exact division of every multiplicity; `None` if some entry is not divisible.
    pub fn div_exact(&self, k: Mult) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (w, m) in &self.terms {
            if m % k != 0 {
                return None;
            }
            terms.insert(w.clone(), m / k);
        }
        Some(Self::from_map(&self.system, terms))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.system != other.system {
            return Err(Error::SystemMismatch(self.system.to_string(), other.system.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.terms.clone();
        for (w, m) in &other.terms {
            let e = out.entry(w.clone()).or_insert(0);
            *e += m;
        }
        out.retain(|_, m| *m != 0);
        Ok(Self::from_map(&self.system, out))
    }

    /// Weight multiset of the character: every weight of every term, scaled
    /// by the term multiplicity and aggregated.
    pub fn formal_weights(&self) -> Vec<(Weight, Mult)> {
        let mut acc: HashMap<Weight, Mult> = HashMap::new();
        for (lambda, m) in &self.terms {
            for (w, k) in self.system.weights_unchecked(lambda) {
                *acc.entry(w).or_insert(0) += m * k as Mult;
            }
        }
        let mut out: Vec<(Weight, Mult)> = acc.into_iter().filter(|(_, m)| *m != 0).collect();
        out.sort();
        out
    }

    /// Number of weights (with multiplicity) of the irreducible terms,
    /// weighted by `|m|`; the cost of using this side as the weight side.
    pub fn weight_mass(&self) -> u128 {
        self.terms.iter().map(|(w, m)| m.unsigned_abs() * self.system.weight_count(w) as u128).sum()
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.tensor_with(other, Exec::default())
    }

    /// Tensor product by the Brauer-Klimyk rule, expanding the cheaper side
    /// into weights.
    pub fn tensor_with(&self, other: &Self, exec: Exec) -> Result<Self> {
        self.check_same(other)?;
        let (left, right) = if self.weight_mass() <= other.weight_mass() { (other, self) } else { (self, other) };
        Ok(brauer_product(left, &right.formal_weights(), 1, exec))
    }

    /// `λ ↦ -w_0 λ` on every term.
    pub fn dualize(&self) -> Self {
        let terms = self.terms.iter().map(|(w, m)| (self.system.dual(w), *m)).collect();
        Self::from_map(&self.system, terms)
    }

    /// External tensor product over the concatenated system.
    pub fn outer(&self, other: &Self) -> Self {
        let mut factors = self.system.factors().to_vec();
        factors.extend_from_slice(other.system.factors());
        let system = RootSystem::new(factors);
        let mut terms = BTreeMap::new();
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                terms.insert(w, m * n);
            }
        }
        Self::from_map(&system, terms)
    }

    /// Text form: `[0,0] + [0,4] + 2[2,2]`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, &m)) in self.terms.iter().enumerate() {
            let body = self.system.format_weight(w);
            let coef = match m.abs() {
                1 => String::new(),
                a => a.to_string(),
            };
            match (i, m < 0) {
                (0, false) => out.push_str(&format!("{coef}{body}")),
                (0, true) => out.push_str(&format!("-{coef}{body}")),
                (_, false) => out.push_str(&format!(" + {coef}{body}")),
                (_, true) => out.push_str(&format!(" - {coef}{body}")),
            }
        }
        out
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.system, self.render())
    }
}

impl Add for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: Self) -> VirtualCharacter {
        self.try_add(rhs).expect("characters on the same system")
    }
}

impl Sub for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, rhs: Self) -> VirtualCharacter {
        self.try_add(&-rhs).expect("characters on the same system")
    }
}

impl Neg for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        self.scale(-1)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    w: Weight,
    m: Mult,
}

#[derive(Serialize, Deserialize)]
struct CharJson {
    system: RootSystem,
    terms: Vec<TermJson>,
}

impl Serialize for VirtualCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharJson {
            system: self.system.clone(),
            terms: self.terms.iter().map(|(w, m)| TermJson { w: w.clone(), m: *m }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CharJson::deserialize(d)?;
        VirtualCharacter::from_terms(&raw.system, raw.terms.into_iter().map(|t| (t.w, t.m))).map_err(serde::de::Error::custom)
    }
}
