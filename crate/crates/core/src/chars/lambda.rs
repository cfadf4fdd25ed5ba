use std::collections::{BTreeMap, HashMap};

use super::{brauer_product, VirtualCharacter};
use crate::exec::Exec;
use crate::partitions::{class_size, sn_character, Partition};
use crate::rootdata::Weight;
use crate::Mult;

/// `ψ^j(χ)`: weights scaled by `j`, re-expanded by dominant reflection.
pub fn adams(j: u32, chi: &VirtualCharacter) -> VirtualCharacter {
    assert!(j >= 1, "Adams operations are indexed by positive integers");
    let trivial = VirtualCharacter::trivial(chi.system());
    brauer_product(&trivial, &chi.formal_weights(), j as i32, Exec::default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Exterior,
    Symmetric,
}

/// Memoized exterior or symmetric powers of a fixed character, computed by
/// the Newton recursion `k·e_k = Σ_j (∓1)^{j-1} ψ^j(χ)·e_{k-j}`.
pub struct PowerTower {
    kind: PowerKind,
    formal: Vec<(Weight, Mult)>,
    powers: Vec<VirtualCharacter>,
    exec: Exec,
}

impl PowerTower {
    pub fn new(kind: PowerKind, chi: &VirtualCharacter, exec: Exec) -> Self {
        PowerTower { kind, formal: chi.formal_weights(), powers: vec![VirtualCharacter::trivial(chi.system())], exec }
    }

    pub fn get(&mut self, k: usize) -> &VirtualCharacter {
        while self.powers.len() <= k {
            self.step();
        }
        &self.powers[k]
    }

    /// Number of powers computed so far.
    pub fn computed(&self) -> usize {
        self.powers.len()
    }

    fn step(&mut self) {
        let k = self.powers.len();
        let system = self.powers[0].system().clone();
        let js: Vec<usize> = (1..=k).collect();
        let powers = &self.powers;
        let formal = &self.formal;
        let kind = self.kind;
        let inner = self.exec;
        let parts = self.exec.map(&js, |&j| {
            let term = brauer_product(&powers[k - j], formal, j as i32, inner);
            match kind {
                PowerKind::Exterior if j % 2 == 0 => term.scale(-1),
                _ => term,
            }
        });
        let mut acc: BTreeMap<Weight, Mult> = BTreeMap::new();
        for p in parts {
            for (w, m) in p.terms() {
                *acc.entry(w.clone()).or_insert(0) += m;
            }
        }
        acc.retain(|_, m| *m != 0);
        let sum = VirtualCharacter::from_map(&system, acc);
        let next = sum.div_exact(k as Mult).unwrap_or_else(|| panic!("Newton recursion: degree {k} not divisible, input is not an actual character"));
        self.powers.push(next);
    }
}

pub fn exterior_power(k: usize, chi: &VirtualCharacter) -> VirtualCharacter {
    PowerTower::new(PowerKind::Exterior, chi, Exec::default()).get(k).clone()
}

pub fn symmetric_power(k: usize, chi: &VirtualCharacter) -> VirtualCharacter {
    PowerTower::new(PowerKind::Symmetric, chi, Exec::default()).get(k).clone()
}

/// Power sums `p_μ(χ) = Π ψ^{μ_i}(χ)`, memoized by prefix.
struct PowerSums<'a> {
    formal: Vec<(Weight, Mult)>,
    trivial: VirtualCharacter,
    memo: HashMap<Vec<u32>, VirtualCharacter>,
    exec: Exec,
    _chi: &'a VirtualCharacter,
}

impl<'a> PowerSums<'a> {
    fn new(chi: &'a VirtualCharacter, exec: Exec) -> Self {
        PowerSums { formal: chi.formal_weights(), trivial: VirtualCharacter::trivial(chi.system()), memo: HashMap::new(), exec, _chi: chi }
    }

    fn get(&mut self, mu: &[u32]) -> VirtualCharacter {
        if mu.is_empty() {
            return self.trivial.clone();
        }
        if let Some(c) = self.memo.get(mu) {
            return c.clone();
        }
        let prefix = self.get(&mu[..mu.len() - 1]);
        let c = brauer_product(&prefix, &self.formal, mu[mu.len() - 1] as i32, self.exec);
        self.memo.insert(mu.to_vec(), c.clone());
        c
    }
}

fn factorial(n: u32) -> Mult {
    (1..=n as Mult).product()
}

/// Schur functor `S_λ(χ) = (1/n!) Σ_μ |C_μ| χ^λ(μ) p_μ(χ)`.
pub fn plethysm(lambda: &Partition, chi: &VirtualCharacter) -> VirtualCharacter {
    plethysm_with(lambda, chi, Exec::default())
}

pub fn plethysm_with(lambda: &Partition, chi: &VirtualCharacter, exec: Exec) -> VirtualCharacter {
    let mut sums = PowerSums::new(chi, exec);
    schur(lambda, &mut sums, chi)
}

/// `S_λ(χ)` for every `λ ⊢ n`, sharing the power sums.
pub fn plethysm_all(n: u32, chi: &VirtualCharacter) -> Vec<(Partition, VirtualCharacter)> {
    let mut sums = PowerSums::new(chi, Exec::default());
    Partition::all(n).into_iter().map(|l| {
        let s = schur(&l, &mut sums, chi);
        (l, s)
    }).collect()
}

fn schur(lambda: &Partition, sums: &mut PowerSums<'_>, chi: &VirtualCharacter) -> VirtualCharacter {
    let n = lambda.size();
    let mut acc: BTreeMap<Weight, Mult> = BTreeMap::new();
    for mu in Partition::all(n) {
        let x = sn_character(lambda, &mu).expect("sizes agree") as Mult;
        if x == 0 {
            continue;
        }
        let coef = x * class_size(&mu) as Mult;
        for (w, m) in sums.get(mu.parts()).terms() {
            *acc.entry(w.clone()).or_insert(0) += coef * m;
        }
    }
    acc.retain(|_, m| *m != 0);
    VirtualCharacter::from_map(chi.system(), acc)
        .div_exact(factorial(n))
        .unwrap_or_else(|| panic!("plethysm S_{lambda}: non-integral multiplicity"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rootdata::RootSystem;

    fn irr(s: &str, w: &[i32]) -> VirtualCharacter {
        VirtualCharacter::irreducible(&RootSystem::parse(s).unwrap(), w).unwrap()
    }

    #[test]
    fn adams_examples() {
        let v = irr("A1", &[1]);
        assert_eq!(adams(1, &v), v);
        assert_eq!(adams(2, &v).render(), "-[0] + [2]");
        let t = VirtualCharacter::trivial(v.system());
        assert_eq!(adams(3, &t), t);
    }

    #[test]
    fn low_powers() {
        let v = irr("A2", &[1, 0]);
        assert_eq!(exterior_power(0, &v), VirtualCharacter::trivial(v.system()));
        assert_eq!(exterior_power(1, &v), v);
        assert_eq!(exterior_power(2, &v).render(), "[0,1]");
        assert_eq!(exterior_power(3, &v).render(), "[0,0]");
        assert!(exterior_power(4, &v).is_zero());
        assert_eq!(symmetric_power(1, &v), v);
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(symmetric_power(2, &irr("A1", &[2])).render(), "[0] + [4]");
        assert_eq!(symmetric_power(3, &irr("A1", &[1])).render(), "[3]");
        let a = irr("A1", &[1]).outer(&irr("A1", &[1]));
        assert_eq!(exterior_power(2, &a).render(), "[0][2] + [2][0]");
        let b = a.outer(&irr("A1", &[1]));
        assert_eq!(exterior_power(3, &b).render(), "[1][1][1] + [1][1][3] + [1][3][1] + [3][1][1]");
    }

    #[test]
    fn plethysm_matches_powers() {
        let v = irr("A2", &[2, 0]);
        assert_eq!(plethysm(&part![3], &v), symmetric_power(3, &v));
        assert_eq!(plethysm(&part![1, 1, 1], &v), exterior_power(3, &v));
    }

    #[test]
    fn table_plethysms() {
        assert_eq!(plethysm(&part![2, 2], &irr("A1", &[3])).multiplicity(&[4]), 2);
        assert_eq!(plethysm(&part![2, 2, 2], &irr("A2", &[2, 0])).multiplicity(&[2, 2]), 2);
        assert_eq!(plethysm(&part![2, 2], &irr("G2", &[1, 0])).multiplicity(&[2, 0]), 2);
    }
}
