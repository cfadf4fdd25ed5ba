use std::collections::HashMap;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::Partition;

type Key = (Partition, Partition, Partition);

static MEMO: Lazy<RwLock<HashMap<Key, u64>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Littlewood-Richardson coefficient `c^λ_{μ,ν}`, counted as the number of
/// LR tableaux of skew shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = MEMO.read().get(&key) {
        return c;
    }
    let c = count_tableaux(lambda, mu, nu);
    MEMO.write().insert(key, c);
    c
}

struct Search<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    content: Vec<u32>,
    counts: Vec<u32>,
    // filling[row][col], 0 = not part of the skew shape
    filling: Vec<Vec<u32>>,
}

fn count_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut s = Search {
        lambda,
        mu,
        content: nu.parts().to_vec(),
        counts: vec![0; nu.len() + 1],
        filling: lambda.parts().iter().map(|&p| vec![0; p as usize]).collect(),
    };
    let start = start_col(lambda, 0);
    s.go(0, start)
}

// Each row is filled right to left, so the reverse reading word is produced
// in order and the lattice condition can be checked incrementally.
fn start_col(lambda: &Partition, row: usize) -> i64 {
    lambda.part(row) as i64 - 1
}

impl Search<'_> {
    fn go(&mut self, row: usize, col: i64) -> u64 {
        if row >= self.lambda.len() {
            return 1;
        }
        if col < self.mu.part(row) as i64 {
            return self.go(row + 1, start_col(self.lambda, row + 1));
        }
        let c = col as usize;
        // weakly increasing rows: value <= the entry to the right
        let right_cap = if c + 1 < self.lambda.part(row) as usize {
            self.filling[row][c + 1]
        } else {
            u32::MAX
        };
        // strictly increasing columns: value > the entry above
        let above = if row > 0 && c >= self.mu.part(row - 1) as usize {
            self.filling[row - 1][c]
        } else {
            0
        };
        let hi = (self.content.len() as u32).min(right_cap).min(row as u32 + 1);
        let mut total = 0;
        for v in (above + 1)..=hi {
            let vi = v as usize;
            if self.counts[vi] >= self.content[vi - 1] {
                continue;
            }
            if vi > 1 && self.counts[vi] + 1 > self.counts[vi - 1] {
                continue;
            }
            self.counts[vi] += 1;
            self.filling[row][c] = v;
            total += self.go(row, col - 1);
            self.counts[vi] -= 1;
        }
        self.filling[row][c] = 0;
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    /// Brute force: every assignment of content ν to the cells of λ/μ,
    /// filtered by semistandardness and the lattice-word condition.
    fn brute_force(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
            return 0;
        }
        let cells: Vec<(usize, usize)> = (0..lambda.len())
            .flat_map(|r| (mu.part(r) as usize..lambda.part(r) as usize).map(move |c| (r, c)))
            .collect();
        let mut letters: Vec<u32> = Vec::new();
        for (i, &n) in nu.parts().iter().enumerate() {
            letters.extend(std::iter::repeat(i as u32 + 1).take(n as usize));
        }
        let mut count = 0;
        permute_distinct(&mut letters, 0, &mut |word| {
            let mut grid = vec![vec![0u32; lambda.first() as usize]; lambda.len()];
            for (&(r, c), &v) in cells.iter().zip(word) {
                grid[r][c] = v;
            }
            for &(r, c) in &cells {
                if c + 1 < lambda.part(r) as usize && grid[r][c] > grid[r][c + 1] {
                    return;
                }
                if r > 0 && c >= mu.part(r - 1) as usize && grid[r - 1][c] >= grid[r][c] {
                    return;
                }
            }
            let mut seen = vec![0u32; nu.len() + 2];
            for r in 0..lambda.len() {
                for c in (mu.part(r) as usize..lambda.part(r) as usize).rev() {
                    let v = grid[r][c] as usize;
                    seen[v] += 1;
                    if v > 1 && seen[v] > seen[v - 1] {
                        return;
                    }
                }
            }
            count += 1;
        });
        count
    }

    fn permute_distinct(xs: &mut Vec<u32>, k: usize, f: &mut dyn FnMut(&[u32])) {
        if k == xs.len() {
            f(xs);
            return;
        }
        let mut used = Vec::new();
        for i in k..xs.len() {
            if used.contains(&xs[i]) {
                continue;
            }
            used.push(xs[i]);
            xs.swap(k, i);
            permute_distinct(xs, k + 1, f);
            xs.swap(k, i);
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(lr_coefficient(&part![2], &part![1], &part![1]), 1);
        assert_eq!(lr_coefficient(&part![2, 1], &part![1], &part![1, 1]), 1);
        assert_eq!(lr_coefficient(&part![2, 1], &part![1], &part![2]), 1);
        assert_eq!(lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]), 2);
        assert_eq!(brute_force(&part![3, 2, 1], &part![2, 1], &part![2, 1]), 2);
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 0..=7 {
            for lambda in Partition::all(n) {
                for k in 0..=n {
                    for mu in lambda.subpartitions(k) {
                        for nu in Partition::all(n - k) {
                            assert_eq!(
                                lr_coefficient(&lambda, &mu, &nu),
                                brute_force(&lambda, &mu, &nu),
                                "{lambda} / {mu}, {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_in_mu_nu() {
        for n in 0..=12 {
            for lambda in Partition::all(n) {
                for k in 0..=n {
                    for mu in lambda.subpartitions(k) {
                        for nu in lambda.subpartitions(n - k) {
                            assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&lambda, &nu, &mu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_single_row() {
        // c^λ_{μ,(k)} is 1 exactly when λ/μ is a horizontal strip
        for n in 0..=9 {
            for lambda in Partition::all(n) {
                for k in 0..=n {
                    for mu in lambda.subpartitions(n - k) {
                        let horizontal = (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i));
                        let c = lr_coefficient(&lambda, &mu, &Partition::row(k));
                        assert_eq!(c, horizontal as u64, "{lambda} / {mu}");
                    }
                }
            }
        }
    }
}
