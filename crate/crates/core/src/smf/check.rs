use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use super::spec::{support, GroupSpec, RepSpec};
use crate::chars::{PowerKind, PowerTower, VirtualCharacter};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rootdata::{RootSystem, Weight};
use crate::Mult;

/// Resource limits; exceeding one yields [`Error::Indeterminate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Maximum number of irreducible terms in any intermediate character.
    pub max_terms: usize,
    /// Wall-clock budget per check.
    pub max_seconds: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_terms: 2_000_000, max_seconds: 120 }
    }
}

impl Caps {
    /// Defaults overridden by `SMFKIT_CAPS="terms=N,secs=S"`.
    pub fn from_env() -> Result<Self> {
        match std::env::var("SMFKIT_CAPS") {
            Ok(s) => Caps::parse(&s),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut caps = Caps::default();
        let mut pos = 0;
        for item in s.split(',') {
            let err = |msg: &str| Error::Parse { pos, token: item.to_string(), msg: msg.to_string() };
            let (key, value) = item.split_once('=').ok_or_else(|| err("expected key=value"))?;
            let value: u64 = value.trim().parse().map_err(|_| err("expected an unsigned integer"))?;
            match key.trim() {
                "terms" => caps.max_terms = value as usize,
                "secs" => caps.max_seconds = value,
                _ => return Err(err("unknown cap, expected `terms` or `secs`")),
            }
            pos += item.len() + 1;
        }
        Ok(caps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "SMF")]
    Smf,
    #[serde(rename = "NotSMF")]
    NotSmf,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Smf => "SMF",
            Verdict::NotSmf => "NotSMF",
        })
    }
}

/// A repeated irreducible: `mult · V(weight)` inside `Λ^{multidegree}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub multidegree: Vec<u32>,
    pub weight: Weight,
    pub mult: Mult,
    /// Shared torus character, for torus-restricted checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SmfStats {
    /// Largest total degree `Σ r_i` examined.
    pub max_degree: u32,
    /// Characters built (exterior powers and products).
    pub characters: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SMFReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: SmfStats,
}

struct Budget {
    caps: Caps,
    start: Instant,
    characters: AtomicUsize,
    max_degree: AtomicU32,
}

impl Budget {
    fn new(caps: Caps) -> Self {
        Budget { caps, start: Instant::now(), characters: AtomicUsize::new(0), max_degree: AtomicU32::new(0) }
    }

    fn charge(&self, chi: &VirtualCharacter, progress: impl Fn() -> String) -> Result<()> {
        self.characters.fetch_add(1, Ordering::Relaxed);
        if chi.len() > self.caps.max_terms {
            return Err(Error::Indeterminate {
                reason: format!("{} terms exceeds the cap of {}", chi.len(), self.caps.max_terms),
                progress: progress(),
            });
        }
        if self.start.elapsed() > Duration::from_secs(self.caps.max_seconds) {
            return Err(Error::Indeterminate { reason: format!("{} s budget exhausted", self.caps.max_seconds), progress: progress() });
        }
        Ok(())
    }

    fn stats(&self) -> SmfStats {
        SmfStats { max_degree: self.max_degree.load(Ordering::Relaxed), characters: self.characters.load(Ordering::Relaxed) }
    }
}

/// Exterior powers `Λ^0 … Λ^d` of each summand over the full system, the
/// upper half obtained by dualizing the lower half.
struct Powers {
    dims: Vec<usize>,
    table: Vec<Vec<VirtualCharacter>>,
}

fn embed(chi: &VirtualCharacter, system: &RootSystem, factors: &[usize]) -> VirtualCharacter {
    let mut out = VirtualCharacter::zero(system);
    let sub = chi.system();
    for (w, m) in chi.terms() {
        let mut full = system.zero();
        for (k, &f) in factors.iter().enumerate() {
            full[system.range(f)].copy_from_slice(sub.part(w, k));
        }
        out.add_term(full, m);
    }
    out
}

fn restrict(system: &RootSystem, w: &[i32], factors: &[usize]) -> (RootSystem, Weight) {
    let sub = RootSystem::new(factors.iter().map(|&f| system.factors()[f]).collect());
    let weight = factors.iter().flat_map(|&f| system.part(w, f).to_vec()).collect();
    (sub, weight)
}

impl Powers {
    fn build(system: &RootSystem, rep: &RepSpec, budget: &Budget, exec: Exec) -> Result<Self> {
        let dims = rep.dims(system)?;
        let mut table = Vec::new();
        for (i, w) in rep.summands.iter().enumerate() {
            let factors: Vec<usize> = support(system, w).into_iter().collect();
            let (sub, sw) = restrict(system, w, &factors);
            let chi = VirtualCharacter::irreducible(&sub, &sw)?;
            let d = dims[i];
            let mut tower = PowerTower::new(PowerKind::Exterior, &chi, exec);
            let mut row: Vec<VirtualCharacter> = Vec::with_capacity(d + 1);
            for k in 0..=d / 2 {
                let p = embed(tower.get(k), system, &factors);
                budget.charge(&p, || format!("exterior power {k} of summand {}", i + 1))?;
                row.push(p);
            }
            for k in d / 2 + 1..=d {
                row.push(row[d - k].dualize());
            }
            table.push(row);
        }
        Ok(Powers { dims, table })
    }

    fn get(&self, i: usize, k: u32) -> &VirtualCharacter {
        &self.table[i][k as usize]
    }
}

/// `Λ^{r_1}V_1 ⊗ … ⊗ Λ^{r_l}V_l` as a character of the semisimple part.
pub fn multidegree_component(system: &RootSystem, rep: &RepSpec, r: &[u32]) -> Result<VirtualCharacter> {
    if r.len() != rep.len() {
        return Err(Error::Precondition(format!("multidegree has {} entries for {} summands", r.len(), rep.len())));
    }
    let budget = Budget::new(Caps { max_terms: usize::MAX, max_seconds: u64::MAX });
    let mut acc = VirtualCharacter::trivial(system);
    for (i, w) in rep.summands.iter().enumerate() {
        let d = system.weyl_dim(w)? as u32;
        if r[i] > d {
            return Ok(VirtualCharacter::zero(system));
        }
        let factors: Vec<usize> = support(system, w).into_iter().collect();
        let (sub, sw) = restrict(system, w, &factors);
        let chi = VirtualCharacter::irreducible(&sub, &sw)?;
        let k = r[i].min(d - r[i]);
        let mut p = embed(PowerTower::new(PowerKind::Exterior, &chi, Exec::default()).get(k as usize), system, &factors);
        if k != r[i] {
            p = p.dualize();
        }
        acc = acc.tensor(&p)?;
        budget.charge(&acc, String::new)?;
    }
    Ok(acc)
}

fn format_progress(r: &[u32]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("at multidegree ({})", parts.join(","))
}

fn search_prefix(
    powers: &Powers,
    budget: &Budget,
    prefix: &mut Vec<u32>,
    acc: &VirtualCharacter,
    exec: Exec,
) -> Result<Option<Witness>> {
    let i = prefix.len();
    if i == powers.dims.len() {
        let deg: u32 = prefix.iter().sum();
        budget.max_degree.fetch_max(deg, Ordering::Relaxed);
        return Ok(acc.first_repeated().map(|(w, m)| Witness { multidegree: prefix.clone(), weight: w.clone(), mult: m, torus: None }));
    }
    for k in 0..=powers.dims[i] as u32 {
        prefix.push(k);
        let next = acc.tensor_with(powers.get(i, k), exec)?;
        budget.charge(&next, || format_progress(prefix))?;
        let found = search_prefix(powers, budget, prefix, &next, exec)?;
        prefix.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn check_saturated_pairing(g: &GroupSpec, v: &RepSpec) -> Result<()> {
    if g.torus_count != v.len() {
        return Err(Error::Precondition(format!(
            "saturated check needs one torus factor per summand ({} tori, {} summands)",
            g.torus_count,
            v.len()
        )));
    }
    Ok(())
}

pub fn smf_check_saturated(g: &GroupSpec, v: &RepSpec, caps: Caps) -> Result<SMFReport> {
    smf_check_saturated_with(g, v, caps, Exec::default())
}

/// Sweeps multidegrees lexicographically with `r_1 ≤ ⌈dim V_1 / 2⌉`; the
/// remaining ones are duals of explored ones.
pub fn smf_check_saturated_with(g: &GroupSpec, v: &RepSpec, caps: Caps, exec: Exec) -> Result<SMFReport> {
    check_saturated_pairing(g, v)?;
    let system = &g.semisimple;
    let budget = Budget::new(caps);
    let powers = Powers::build(system, v, &budget, exec)?;
    let firsts: Vec<u32> = (0..=powers.dims[0].div_ceil(2) as u32).collect();
    let found = exec.find_map_first(&firsts, |&r1| {
        let mut prefix = vec![r1];
        let acc = powers.get(0, r1).clone();
        match search_prefix(&powers, &budget, &mut prefix, &acc, Exec::Sequential) {
            Ok(None) => None,
            Ok(Some(w)) => Some(Ok(w)),
            Err(e) => Some(Err(e)),
        }
    });
    let stats = budget.stats();
    match found {
        None => Ok(SMFReport { verdict: Verdict::Smf, witness: None, stats }),
        Some(Ok(w)) => Ok(SMFReport { verdict: Verdict::NotSmf, witness: Some(w), stats }),
        Some(Err(e)) => Err(e),
    }
}

/// Single summand: `Λ^k V` for `k ≤ ⌈dim V / 2⌉`.
pub fn smf_check_irreducible(g: &GroupSpec, lambda: &[i32], caps: Caps) -> Result<SMFReport> {
    let rep = RepSpec::new(&g.semisimple, vec![lambda.to_vec()])?;
    smf_check_saturated(&GroupSpec::new(1, g.semisimple.clone()), &rep, caps)
}

/// Homomorphism from a smaller torus to the saturated one: row `a` gives
/// the exponents of new character `a` on each summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusEmbedding {
    pub matrix: Vec<Vec<i64>>,
}

impl TorusEmbedding {
    /// One-dimensional torus `z ↦ (z^{a_1}, …, z^{a_l})`.
    pub fn one_parameter(exponents: &[i64]) -> Self {
        TorusEmbedding { matrix: vec![exponents.to_vec()] }
    }

    /// Parses `"2,1"` (one row) or `"1,0;0,1"` (rows separated by `;`).
    pub fn parse(s: &str) -> Result<Self> {
        let mut matrix = Vec::new();
        let mut pos = 0;
        for row in s.split(';') {
            let mut out = Vec::new();
            for tok in row.split(',') {
                out.push(tok.trim().parse::<i64>().map_err(|_| Error::Parse {
                    pos,
                    token: tok.to_string(),
                    msg: "expected an integer exponent".into(),
                })?);
                pos += tok.len() + 1;
            }
            matrix.push(out);
        }
        Ok(TorusEmbedding { matrix })
    }

    pub fn character(&self, r: &[u32]) -> Vec<i64> {
        self.matrix.iter().map(|row| row.iter().zip(r).map(|(a, &x)| a * x as i64).sum()).collect()
    }
}

fn all_multidegrees(dims: &[usize]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out.into_iter().flat_map(|p| (0..=d as u32).map(move |k| [p.clone(), vec![k]].concat())).collect();
    }
    out
}

pub fn smf_check_torus(g: &GroupSpec, v: &RepSpec, t: &TorusEmbedding, caps: Caps) -> Result<SMFReport> {
    smf_check_torus_with(g, v, t, caps, Exec::default())
}

/// Multidegrees grouped by their torus character; each group must be
/// multiplicity-free as a whole. No complement pruning.
pub fn smf_check_torus_with(g: &GroupSpec, v: &RepSpec, t: &TorusEmbedding, caps: Caps, exec: Exec) -> Result<SMFReport> {
    if t.matrix.len() != g.torus_count || t.matrix.iter().any(|row| row.len() != v.len()) {
        return Err(Error::Precondition(format!(
            "torus embedding must be {}x{} (torus factors x summands)",
            g.torus_count,
            v.len()
        )));
    }
    let system = &g.semisimple;
    let budget = Budget::new(caps);
    let powers = Powers::build(system, v, &budget, exec)?;
    let degrees = all_multidegrees(&powers.dims);
    let parts = exec.map(&degrees, |r| -> Result<VirtualCharacter> {
        let mut acc = VirtualCharacter::trivial(system);
        for (i, &k) in r.iter().enumerate() {
            acc = acc.tensor_with(powers.get(i, k), Exec::Sequential)?;
        }
        budget.max_degree.fetch_max(r.iter().sum(), Ordering::Relaxed);
        budget.charge(&acc, || format_progress(r))?;
        Ok(acc)
    });
    let mut groups: BTreeMap<Vec<i64>, Vec<(usize, VirtualCharacter)>> = BTreeMap::new();
    for (idx, part) in parts.into_iter().enumerate() {
        groups.entry(t.character(&degrees[idx])).or_default().push((idx, part?));
    }
    let stats = budget.stats();
    for (chi, members) in groups {
        let mut total = VirtualCharacter::zero(system);
        for (_, c) in &members {
            total = total.try_add(c)?;
        }
        if let Some((w, m)) = total.first_repeated() {
            let first = members.iter().find(|(_, c)| c.multiplicity(w) > 0).map(|(i, _)| degrees[*i].clone()).unwrap_or_default();
            let witness = Witness { multidegree: first, weight: w.clone(), mult: m, torus: Some(chi) };
            return Ok(SMFReport { verdict: Verdict::NotSmf, witness: Some(witness), stats });
        }
    }
    Ok(SMFReport { verdict: Verdict::Smf, witness: None, stats })
}

/// Sum of the multidegree components with torus character `chi`.
pub fn torus_group_component(system: &RootSystem, v: &RepSpec, t: &TorusEmbedding, chi: &[i64]) -> Result<VirtualCharacter> {
    let dims = v.dims(system)?;
    let mut total = VirtualCharacter::zero(system);
    for r in all_multidegrees(&dims) {
        if t.character(&r) == chi {
            total = total.try_add(&multidegree_component(system, v, &r)?)?;
        }
    }
    Ok(total)
}
