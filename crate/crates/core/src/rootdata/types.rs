use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple factor `X_r` in Bourbaki numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub kind: Kind,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let ok = match kind {
            Kind::A => rank >= 1,
            Kind::B | Kind::C => rank >= 2,
            Kind::D => rank >= 3,
            Kind::E => (6..=8).contains(&rank),
            Kind::F => rank == 4,
            Kind::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { kind, rank })
        } else {
            Err(Error::UnknownSystem(format!("{}{}", kind.letter(), rank)))
        }
    }

    pub fn parse(token: &str) -> Result<Self> {
        let token = token.trim();
        let mut chars = token.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Kind::A,
            Some('B') => Kind::B,
            Some('C') => Kind::C,
            Some('D') => Kind::D,
            Some('E') => Kind::E,
            Some('F') => Kind::F,
            Some('G') => Kind::G,
            _ => return Err(Error::UnknownSystem(token.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownSystem(token.to_string()))?;
        SimpleType::new(kind, rank).map_err(|_| Error::UnknownSystem(token.to_string()))
    }

    /// Integer Gram matrix of the simple roots, scaled so short roots have
    /// squared length 2.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.kind {
            Kind::A | Kind::D | Kind::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                match self.kind {
                    Kind::A => (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -1)),
                    Kind::D => {
                        (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                        link(&mut g, n - 3, n - 1, -1);
                    }
                    _ => {
                        link(&mut g, 0, 2, -1);
                        link(&mut g, 1, 3, -1);
                        (2..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
                    }
                }
            }
            Kind::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 4 } else { 2 };
                }
                (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -2));
            }
            Kind::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 2 } else { 4 };
                }
                (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                link(&mut g, n - 2, n - 1, -2);
            }
            Kind::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Kind::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }

    /// `C[i][j] = 2 (α_i, α_j) / (α_j, α_j)`; row `i` is `α_i` in the
    /// fundamental-weight basis.
    pub fn cartan(&self) -> Vec<Vec<i32>> {
        let g = self.gram();
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| (2 * g[i][j] / g[j][j]) as i32).collect())
            .collect()
    }

    /// Permutation of coordinates realizing `λ ↦ -w_0(λ)`.
    pub fn dual_permutation(&self) -> Vec<usize> {
        let n = self.rank;
        let mut p: Vec<usize> = (0..n).collect();
        match self.kind {
            Kind::A => p.reverse(),
            Kind::D if n % 2 == 1 => p.swap(n - 2, n - 1),
            Kind::E if n == 6 => {
                p.swap(0, 5);
                p.swap(2, 4);
            }
            _ => {}
        }
        p
    }

    /// All permutations of the nodes induced by Dynkin diagram automorphisms,
    /// identity first.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let id: Vec<usize> = (0..n).collect();
        match self.kind {
            Kind::A if n > 1 => vec![id, self.dual_permutation()],
            Kind::E if n == 6 => vec![id, self.dual_permutation()],
            Kind::D if n == 4 => {
                // all permutations of the three outer nodes 1, 3, 4
                let outer = [0usize, 2, 3];
                let mut out = Vec::new();
                for a in 0..3 {
                    for b in 0..3 {
                        for c in 0..3 {
                            if a != b && b != c && a != c {
                                let mut p = id.clone();
                                p[outer[0]] = outer[a];
                                p[outer[1]] = outer[b];
                                p[outer[2]] = outer[c];
                                out.push(p);
                            }
                        }
                    }
                }
                out.sort_by_key(|p| p != &id);
                out
            }
            Kind::D => {
                let mut p = id.clone();
                p.swap(n - 2, n - 1);
                vec![id, p]
            }
            _ => vec![id],
        }
    }

    /// Inverse Cartan matrix over the rationals.
    pub fn cartan_inverse(&self) -> Vec<Vec<Rational64>> {
        let n = self.rank;
        let c = self.cartan();
        let mut a: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> = c[i].iter().map(|&x| Rational64::from_integer(x as i64)).collect();
                row.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for k in 0..2 * n {
                        let v = a[col][k];
                        a[r][k] -= f * v;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n..].to_vec()).collect()
    }
}

impl Kind {
    pub fn letter(&self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
            Kind::E => 'E',
            Kind::F => 'F',
            Kind::G => 'G',
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<SimpleType> {
        let mut v = Vec::new();
        for r in 1..=6 {
            v.push(SimpleType::new(Kind::A, r).unwrap());
        }
        for r in 2..=6 {
            v.push(SimpleType::new(Kind::B, r).unwrap());
            v.push(SimpleType::new(Kind::C, r).unwrap());
        }
        for r in 3..=6 {
            v.push(SimpleType::new(Kind::D, r).unwrap());
        }
        for r in 6..=8 {
            v.push(SimpleType::new(Kind::E, r).unwrap());
        }
        v.push(SimpleType::new(Kind::F, 4).unwrap());
        v.push(SimpleType::new(Kind::G, 2).unwrap());
        v
    }

    #[test]
    fn cartan_matrices() {
        let b2 = SimpleType::parse("B2").unwrap().cartan();
        assert_eq!(b2, vec![vec![2, -2], vec![-1, 2]]);
        let c3 = SimpleType::parse("C3").unwrap().cartan();
        assert_eq!(c3, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let g2 = SimpleType::parse("G2").unwrap().cartan();
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
        let d4 = SimpleType::parse("D4").unwrap().cartan();
        assert_eq!(d4[1], vec![-1, 2, -1, -1]);
    }

    #[test]
    fn determinants() {
        // det C: A_n n+1, B_n/C_n 2, D_n 4, E6 3, E7 2, E8 1, F4 1, G2 1
        for t in all_types() {
            let inv = t.cartan_inverse();
            let c = t.cartan();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    let s: Rational64 = (0..t.rank).map(|k| Rational64::from_integer(c[i][k] as i64) * inv[k][j]).sum();
                    assert_eq!(s, if i == j { Rational64::one() } else { Rational64::zero() }, "{t}");
                }
            }
        }
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleType::parse("A0").is_err());
        assert!(SimpleType::parse("B1").is_err());
        assert!(SimpleType::parse("D2").is_err());
        assert!(SimpleType::parse("E9").is_err());
        assert!(SimpleType::parse("F3").is_err());
        assert!(SimpleType::parse("X3").is_err());
        assert!(SimpleType::parse("D3").is_ok());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(SimpleType::parse("D4").unwrap().diagram_automorphisms().len(), 6);
        assert_eq!(SimpleType::parse("D5").unwrap().diagram_automorphisms().len(), 2);
        assert_eq!(SimpleType::parse("A1").unwrap().diagram_automorphisms().len(), 1);
        assert_eq!(SimpleType::parse("E7").unwrap().diagram_automorphisms().len(), 1);
    }
}
