use std::collections::{BTreeSet, HashMap};

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::Partition;
use crate::error::{Error, Result};

static MEMO: Lazy<RwLock<HashMap<(Partition, Partition), i64>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Irreducible character `χ^λ` of the symmetric group evaluated on the class of
/// cycle type `μ` (Murnaghan-Nakayama rule).
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch);
    }
    Ok(mn(lambda, mu.parts()))
}

fn mn(lambda: &Partition, cycles: &[u32]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_sorted(cycles.to_vec()));
    if let Some(&v) = MEMO.read().get(&key) {
        return v;
    }
    let l = lambda.len();
    // beta numbers: λ_i + (ℓ - 1 - i)
    let beta: BTreeSet<u32> = (0..l).map(|i| lambda.part(i) + (l - 1 - i) as u32).collect();
    let mut total = 0;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.range(b - r + 1..b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<u32> = beta.iter().copied().filter(|&x| x != b).collect();
        next.push(b - r);
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next.iter().enumerate().map(|(i, &x)| x - (l - 1 - i) as u32).collect();
        total += sign * mn(&Partition::from_sorted(parts), rest);
    }
    MEMO.write().insert(key, total);
    total
}

/// `z_μ = Π i^{m_i} m_i!`, the order of the centralizer of a permutation of cycle type μ.
pub fn z_value(mu: &Partition) -> u128 {
    mu.multiplicities()
        .into_iter()
        .map(|(i, m)| (i as u128).pow(m) * (1..=m as u128).product::<u128>())
        .product()
}

/// Number of permutations of cycle type μ, `|μ|! / z_μ`.
pub fn class_size(mu: &Partition) -> u128 {
    let fact: u128 = (1..=mu.size() as u128).product();
    fact / z_value(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn hook_dimension(lambda: &Partition) -> i64 {
        let conj = lambda.conjugate();
        let mut hooks: u128 = 1;
        for i in 0..lambda.len() {
            for j in 0..lambda.part(i) as usize {
                hooks *= (lambda.part(i) as usize - j + conj.part(j) as usize - i - 1) as u128;
            }
        }
        let fact: u128 = (1..=lambda.size() as u128).product();
        (fact / hooks) as i64
    }

    #[test]
    fn trivial_and_sign() {
        for mu in Partition::all(4) {
            assert_eq!(sn_character(&Partition::row(4), &mu).unwrap(), 1);
            let odd = mu.parts().iter().filter(|&&p| p % 2 == 0).count();
            let sign = if odd % 2 == 0 { 1 } else { -1 };
            assert_eq!(sn_character(&Partition::column(4), &mu).unwrap(), sign);
        }
    }

    #[test]
    fn identity_class_gives_hook_length_dimension() {
        assert_eq!(sn_character(&part![2, 1], &part![1, 1, 1]).unwrap(), 2);
        for n in 1..=8 {
            for lambda in Partition::all(n) {
                let v = sn_character(&lambda, &Partition::column(n)).unwrap();
                assert_eq!(v, hook_dimension(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(sn_character(&part![2], &part![1]), Err(Error::ShapeMismatch));
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let ps = Partition::all(n);
            for mu in &ps {
                for nu in &ps {
                    let s: i64 = ps
                        .iter()
                        .map(|l| sn_character(l, mu).unwrap() * sn_character(l, nu).unwrap())
                        .sum();
                    let expected = if mu == nu { z_value(mu) as i64 } else { 0 };
                    assert_eq!(s, expected, "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=9u32 {
            let total: u128 = Partition::all(n).iter().map(class_size).sum();
            assert_eq!(total, (1..=n as u128).product());
        }
    }
}
