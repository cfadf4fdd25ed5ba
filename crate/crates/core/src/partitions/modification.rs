use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;

/// Outcome of a modification rule: zero, or `sign · [partition]` with an
/// optional twist by the determinant character (`♯`, orthogonal case only).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SignedOChar {
    Zero { zero: bool },
    Term { sign: i8, lambda: Partition, sharp: bool },
}

impl SignedOChar {
    pub fn zero() -> Self {
        SignedOChar::Zero { zero: true }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedOChar::Zero { .. })
    }

    fn term(lambda: Partition) -> Self {
        SignedOChar::Term { sign: 1, lambda, sharp: false }
    }
}

impl fmt::Display for SignedOChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedOChar::Zero { .. } => write!(f, "0"),
            SignedOChar::Term { sign, lambda, sharp } => {
                let s = if *sign < 0 { "-" } else { "" };
                let t = if *sharp { "#" } else { "" };
                write!(f, "{s}{}{t}", lambda.bracket())
            }
        }
    }
}

struct Strip {
    remaining: Partition,
    columns: usize,
}

/// Removes a strip of `h` boxes starting at the lowest box of the first
/// column, stepping right when a box exists there and up otherwise.
/// Returns `None` when the strip cannot be completed or leaves an irregular diagram.
fn remove_strip(lambda: &Partition, h: usize) -> Option<Strip> {
    if h == 0 || lambda.is_empty() {
        return None;
    }
    let mut removed: BTreeSet<(usize, usize)> = BTreeSet::new();
    let (mut r, mut c) = (lambda.len() - 1, 0usize);
    loop {
        removed.insert((r, c));
        if removed.len() == h {
            break;
        }
        if c + 1 < lambda.part(r) as usize {
            c += 1;
        } else if r > 0 {
            r -= 1;
        } else {
            return None;
        }
    }
    let mut rows = Vec::with_capacity(lambda.len());
    for row in 0..lambda.len() {
        let len = lambda.part(row) as usize;
        let kept: Vec<usize> = (0..len).filter(|&col| !removed.contains(&(row, col))).collect();
        // remaining boxes must be left-justified
        if kept.iter().enumerate().any(|(i, &col)| i != col) {
            return None;
        }
        rows.push(kept.len() as u32);
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    let columns = removed.iter().map(|&(_, col)| col).collect::<BTreeSet<_>>().len();
    Some(Strip { remaining: Partition::from_sorted(rows), columns })
}

/// Resolve the universal O_n character `[λ]` to `±[τ]` or `±[τ]^♯` with
/// `ℓ(τ) ≤ ⌊n/2⌋`, or to zero.
pub fn modify_o(lambda: &Partition, n: usize) -> SignedOChar {
    let half = n / 2;
    let mut cur = lambda.clone();
    let mut sign = 1i8;
    let mut sharp = false;
    while cur.len() > half {
        let h = 2 * cur.len() - n;
        let Some(strip) = remove_strip(&cur, h) else {
            return SignedOChar::zero();
        };
        if strip.columns % 2 == 0 {
            sign = -sign;
        }
        sharp = !sharp;
        cur = strip.remaining;
    }
    match SignedOChar::term(cur) {
        SignedOChar::Term { lambda, .. } => SignedOChar::Term { sign, lambda, sharp },
        z => z,
    }
}

/// Resolve the universal Sp_n character `⟨λ⟩` (`n` even, the dimension of the
/// natural representation) to `±⟨τ⟩` with `ℓ(τ) ≤ n/2`, or to zero. The strip
/// has length `2ℓ(λ) - n - 2`; a strip of length zero kills the character and
/// each removal contributes `(-1)^c`.
pub fn modify_sp(lambda: &Partition, n: usize) -> SignedOChar {
    debug_assert!(n % 2 == 0, "symplectic groups need even n");
    let half = n / 2;
    let mut cur = lambda.clone();
    let mut sign = 1i8;
    while cur.len() > half {
        let h = 2 * cur.len() - n - 2;
        let Some(strip) = remove_strip(&cur, h) else {
            return SignedOChar::zero();
        };
        if strip.columns % 2 == 1 {
            sign = -sign;
        }
        cur = strip.remaining;
    }
    SignedOChar::Term { sign, lambda: cur, sharp: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn irregular_strip_vanishes() {
        assert_eq!(modify_o(&part![2, 2, 2, 1], 6), SignedOChar::zero());
    }

    #[test]
    fn double_strip_removal() {
        assert_eq!(
            modify_o(&part![2, 2, 2, 2, 2, 1], 6),
            SignedOChar::Term { sign: -1, lambda: part![2, 1], sharp: false }
        );
        assert_eq!(modify_o(&part![2, 2, 2, 2, 2, 1], 6).to_string(), "-[2,1]");
    }

    #[test]
    fn short_partitions_untouched() {
        assert_eq!(modify_o(&part![3, 1], 7), SignedOChar::Term { sign: 1, lambda: part![3, 1], sharp: false });
        assert_eq!(modify_sp(&part![3, 1], 4), SignedOChar::Term { sign: 1, lambda: part![3, 1], sharp: false });
    }

    #[test]
    fn small_orthogonal_cases() {
        // O_1: C^1 is the determinant, S^2 C^1 is trivial
        assert_eq!(modify_o(&part![1], 1), SignedOChar::Term { sign: 1, lambda: part![], sharp: true });
        assert!(modify_o(&part![2], 1).is_zero());
        // O_3: [3,1] -> [3]#, [4,2] -> 0
        assert_eq!(modify_o(&part![3, 1], 3), SignedOChar::Term { sign: 1, lambda: part![3], sharp: true });
        assert!(modify_o(&part![4, 2], 3).is_zero());
    }

    #[test]
    fn symplectic_strips() {
        // ℓ = n/2 + 1 gives a strip of length zero
        assert!(modify_sp(&part![1, 1], 2).is_zero());
        assert!(modify_sp(&part![1, 1, 1], 4).is_zero());
        assert!(modify_sp(&part![2, 1, 1], 4).is_zero());
        assert_eq!(modify_sp(&part![1, 1, 1], 2), SignedOChar::Term { sign: -1, lambda: part![1], sharp: false });
        assert_eq!(modify_sp(&part![1, 1, 1, 1, 1], 4), SignedOChar::Term { sign: -1, lambda: part![1], sharp: false });
    }

    #[test]
    fn output_length_bounded() {
        for n in 1..=8 {
            for size in 0..=9 {
                for lambda in Partition::all(size) {
                    if let SignedOChar::Term { lambda: tau, .. } = modify_o(&lambda, n) {
                        assert!(tau.len() <= n / 2);
                        if lambda.len() <= n / 2 {
                            assert_eq!(tau, lambda);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&SignedOChar::zero()).unwrap(), r#"{"zero":true}"#);
        let t = modify_o(&part![2, 2, 2, 2, 2, 1], 6);
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"sign":-1,"lambda":[2,1],"sharp":false}"#);
    }
}
