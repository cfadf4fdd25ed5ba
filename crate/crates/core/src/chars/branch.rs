use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::VirtualCharacter;
use crate::error::{Error, Result};
use crate::partitions::{lr_coefficient, modify_o, modify_sp, Partition, SignedOChar};
use crate::rootdata::{eps_to_omega, Kind, RootSystem, SimpleType, Weight};
use crate::Mult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchGroup {
    /// `O_n`
    O(usize),
    /// `Sp_n`, `n` even
    Sp(usize),
}

/// `[λ]`, `[λ]^♯` for orthogonal groups or `⟨λ⟩` for symplectic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BranchLabel {
    pub lambda: Partition,
    pub sharp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchResult {
    pub group: BranchGroup,
    pub terms: BTreeMap<BranchLabel, i64>,
}

impl BranchResult {
    pub fn multiplicity(&self, lambda: &Partition, sharp: bool) -> i64 {
        self.terms.get(&BranchLabel { lambda: lambda.clone(), sharp }).copied().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m <= 1)
    }

    /// `Σ m · dim` over the labels.
    pub fn dim(&self) -> Result<Mult> {
        let mut total = 0;
        for (label, &m) in &self.terms {
            total += m as Mult * label_dim(self.group, label)?;
        }
        Ok(total)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(label, &m)| {
                let coef = if m == 1 { String::new() } else { m.to_string() };
                format!("{coef}{}", render_label(self.group, label))
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for BranchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn render_label(group: BranchGroup, label: &BranchLabel) -> String {
    let body = label.lambda.bracket();
    match group {
        BranchGroup::O(_) => format!("{body}{}", if label.sharp { "#" } else { "" }),
        BranchGroup::Sp(_) => format!("<{}>", &body[1..body.len() - 1]),
    }
}

/// Partitions of `2k` with all rows even.
fn even_rows(k: u32) -> Vec<Partition> {
    Partition::all(k).into_iter().map(|p| Partition::new(p.parts().iter().map(|x| 2 * x)).expect("doubling keeps order")).collect()
}

/// Partitions of `2k` with all columns even.
fn even_columns(k: u32) -> Vec<Partition> {
    even_rows(k).into_iter().map(|p| p.conjugate()).collect()
}

fn littlewood(lambda: &Partition, n: usize, group: BranchGroup) -> Result<BranchResult> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("partition {lambda} has more than {n} parts")));
    }
    let mut terms: BTreeMap<BranchLabel, i64> = BTreeMap::new();
    let total = lambda.size();
    for removed in (0..=total).filter(|r| r % 2 == 0) {
        let shapes = match group {
            BranchGroup::O(_) => even_rows(removed / 2),
            BranchGroup::Sp(_) => even_columns(removed / 2),
        };
        for mu in lambda.subpartitions(total - removed) {
            let c: u64 = shapes.iter().map(|d| lr_coefficient(lambda, d, &mu)).sum();
            if c == 0 {
                continue;
            }
            let modified = match group {
                BranchGroup::O(n) => modify_o(&mu, n),
                BranchGroup::Sp(n) => modify_sp(&mu, n),
            };
            if let SignedOChar::Term { sign, lambda: tau, sharp } = modified {
                // for O_{2m}, [τ]^♯ = [τ] when ℓ(τ) = m
                let sharp = sharp && !(n % 2 == 0 && tau.len() == n / 2);
                *terms.entry(BranchLabel { lambda: tau, sharp }).or_insert(0) += sign as i64 * c as i64;
            }
        }
    }
    terms.retain(|_, m| *m != 0);
    Ok(BranchResult { group, terms })
}

/// Restriction of the `GL_n` module `S_λ(C^n)` to `O_n`.
pub fn branch_gl_to_o(lambda: &Partition, n: usize) -> Result<BranchResult> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    littlewood(lambda, n, BranchGroup::O(n))
}

/// Restriction of the `GL_n` module `S_λ(C^n)` to `Sp_n` (`n` even).
pub fn branch_gl_to_sp(lambda: &Partition, n: usize) -> Result<BranchResult> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!("Sp_n needs a positive even n, got {n}")));
    }
    littlewood(lambda, n, BranchGroup::Sp(n))
}

/// All `ν` interlacing `λ`: `λ_1 ≥ ν_1 ≥ λ_2 ≥ … ≥ ν_m ≥ λ_{m+1}`.
pub fn branch_gl_interlace(lambda: &Partition, m: usize) -> Result<Vec<Partition>> {
    if lambda.len() > m + 1 {
        return Err(Error::Precondition(format!("partition {lambda} has more than {} parts", m + 1)));
    }
    let mut out = vec![Vec::new()];
    for i in 0..m {
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (lo..=hi).rev().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(Partition::from_sorted).collect())
}

/// Root system of `SO_n` for `n ≥ 3` (`SO_3 = A1`, `SO_4 = A1xA1`).
pub fn so_system(n: usize) -> Result<RootSystem> {
    let ty = |k, r| SimpleType::new(k, r).expect("valid rank");
    Ok(match n {
        0..=2 => return Err(Error::Unsupported(format!("SO_{n} has no semisimple part"))),
        3 => RootSystem::new(vec![ty(Kind::A, 1)]),
        4 => RootSystem::new(vec![ty(Kind::A, 1), ty(Kind::A, 1)]),
        _ if n % 2 == 1 => RootSystem::new(vec![ty(Kind::B, n / 2)]),
        _ => RootSystem::new(vec![ty(Kind::D, n / 2)]),
    })
}

fn so_weight(eps: &[i64], n: usize) -> Result<Weight> {
    match n {
        3 => Ok(vec![2 * eps[0] as i32]),
        4 => Ok(vec![(eps[0] - eps[1]) as i32, (eps[0] + eps[1]) as i32]),
        _ => {
            let ty = if n % 2 == 1 { SimpleType::new(Kind::B, n / 2)? } else { SimpleType::new(Kind::D, n / 2)? };
            let doubled: Vec<i64> = eps.iter().map(|e| 2 * e).collect();
            eps_to_omega(ty, &doubled)
        }
    }
}

/// Highest weights of the `SO_n` constituents of the `O_n` module `[λ]` or
/// `[λ]^♯`: one weight, or two when `n = 2m` and `ℓ(λ) = m`.
pub fn o_to_so(label: &BranchLabel, n: usize) -> Result<Vec<Weight>> {
    let m = n / 2;
    if label.lambda.len() > m {
        return Err(Error::Precondition(format!("label {} is not reduced for O_{n}", label.lambda)));
    }
    so_system(n)?;
    let eps: Vec<i64> = (0..m).map(|i| label.lambda.part(i) as i64).collect();
    let mut out = vec![so_weight(&eps, n)?];
    if n % 2 == 0 && label.lambda.len() == m {
        let mut flipped = eps.clone();
        flipped[m - 1] = -flipped[m - 1];
        out.push(so_weight(&flipped, n)?);
    }
    out.sort();
    Ok(out)
}

/// The `SO_n` character of an `O_n` branching result.
pub fn o_to_so_character(b: &BranchResult) -> Result<VirtualCharacter> {
    let BranchGroup::O(n) = b.group else {
        return Err(Error::Precondition("expected an orthogonal branching result".into()));
    };
    let system = so_system(n)?;
    let mut c = VirtualCharacter::zero(&system);
    for (label, &m) in &b.terms {
        for w in o_to_so(label, n)? {
            c.add_term(w, m as Mult);
        }
    }
    Ok(c)
}

fn sp_weight(lambda: &Partition, n: usize) -> Result<(RootSystem, Weight)> {
    let r = n / 2;
    if n == 2 {
        return Ok((RootSystem::new(vec![SimpleType::new(Kind::A, 1)?]), vec![lambda.part(0) as i32]));
    }
    let ty = SimpleType::new(Kind::C, r)?;
    let doubled: Vec<i64> = (0..r).map(|i| 2 * lambda.part(i) as i64).collect();
    Ok((RootSystem::new(vec![ty]), eps_to_omega(ty, &doubled)?))
}

/// Dimension of the irreducible module labelled by `label`.
pub fn label_dim(group: BranchGroup, label: &BranchLabel) -> Result<Mult> {
    match group {
        BranchGroup::O(1) => Ok(1),
        BranchGroup::O(2) => Ok(if label.lambda.is_empty() { 1 } else { 2 }),
        BranchGroup::O(n) => {
            let sys = so_system(n)?;
            let mut d = 0;
            for w in o_to_so(label, n)? {
                d += sys.weyl_dim(&w)? as Mult;
            }
            Ok(d)
        }
        BranchGroup::Sp(n) => {
            let (sys, w) = sp_weight(&label.lambda, n)?;
            Ok(sys.weyl_dim(&w)? as Mult)
        }
    }
}
