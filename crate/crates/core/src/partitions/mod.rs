//! Partition combinatorics: conjugation, Littlewood-Richardson coefficients,
//! symmetric-group characters and the modification rules that turn
//! universal O/Sp character labels into honest irreducible characters.

mod lr;
mod modification;
mod sn;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lr::lr_coefficient;
pub use modification::{modify_o, modify_sp, SignedOChar};
pub use sn::{class_size, sn_character, z_value};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so the empty partition is the unique partition of 0.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses `[2,2,1]`, `(2,2,1)` or `2,2,1`; `[]` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = match (t.chars().next(), t.chars().last()) {
            (Some('['), Some(']')) | (Some('('), Some(')')) => &t[1..t.len() - 1],
            _ => t,
        };
        let offset = s.find(body).unwrap_or(0);
        let mut parts = Vec::new();
        let mut pos = offset;
        for tok in body.split(',') {
            if !tok.trim().is_empty() || body.contains(',') {
                let v: u32 = tok.trim().parse().map_err(|_| Error::Parse {
                    pos,
                    token: tok.trim().to_string(),
                    msg: "expected a nonnegative integer part".to_string(),
                })?;
                parts.push(v);
            }
            pos += tok.len() + 1;
        }
        Partition::new(parts)
    }

    /// The one-row partition `(k)`.
    pub fn row(k: u32) -> Self {
        Partition::from_sorted(vec![k])
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let parts = (1..=cols as u32)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out, usize::MAX);
        out
    }

    /// Partitions of `n` with at most `rows` parts, each at most `cols`.
    pub fn in_box(n: u32, rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n.min(cols), &mut cur, &mut out, rows);
        out
    }

    /// All partitions contained in the `rows x cols` box, any size.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        (0..=rows as u32 * cols).flat_map(|n| Partition::in_box(n, rows, cols)).collect()
    }

    /// Subpartitions `μ ⊆ self` of the given size.
    pub fn subpartitions(&self, size: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_fill(self, 0, size, u32::MAX, &mut cur, &mut out);
        out
    }

    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Bracket notation, e.g. `[2,1]`; the empty partition is `[0]`.
    pub fn bracket(&self) -> String {
        if self.is_empty() {
            return "[0]".into();
        }
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

fn fill(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>, rows: usize) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() >= rows {
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        fill(n - p, p, cur, out, rows);
        cur.pop();
    }
}

fn sub_fill(outer: &Partition, row: usize, left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if row >= outer.len() {
        return;
    }
    let hi = outer.part(row).min(max).min(left);
    for p in (1..=hi).rev() {
        cur.push(p);
        sub_fill(outer, row + 1, left - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v.iter().any(|&p| p < 0 || p > u32::MAX as i64) {
            return Err(Error::InvalidPartition(v));
        }
        Partition::new(v.into_iter().map(|p| p as u32))
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shorthand used throughout the tests and the catalog.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::partitions::Partition::new([$($p),+]).unwrap() };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part![2, 2, 2, 1].conjugate(), part![4, 3]);
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
    }

    #[test]
    fn trailing_zeros_dropped() {
        assert_eq!(part![3, 1, 0, 0], part![3, 1]);
        assert!(Partition::new([1, 2]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::in_box(4, 2, 3), vec![part![3, 1], part![2, 2]]);
    }

    #[test]
    fn subpartitions_of_shape() {
        let subs = part![2, 1].subpartitions(2);
        assert_eq!(subs, vec![part![2], part![1, 1]]);
    }

    #[test]
    fn json_form() {
        let p: Partition = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(p, part![2, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
