use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use parking_lot::RwLock;

use super::types::SimpleType;

/// Weights of one irreducible module of a simple factor.
#[derive(Debug)]
pub struct FactorWeights {
    /// Dominant weights with multiplicities, highest first.
    pub dominant: Vec<(Vec<i32>, u64)>,
    /// Every weight with its multiplicity.
    pub all: Vec<(Vec<i32>, u64)>,
}

/// Precomputed root data of a simple factor.
#[derive(Debug)]
pub struct FactorData {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i32>>,
    pub gram: Vec<Vec<i64>>,
    pub cartan_inv: Vec<Vec<Rational64>>,
    /// `(ω_i, ω_k)` times `form_scale`.
    pub form: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub roots_simple: Vec<Vec<i32>>,
    /// Positive roots in fundamental-weight coordinates.
    pub roots_omega: Vec<Vec<i32>>,
    /// For each positive root `β = Σ c_j α_j`, the vector `c_j (α_j, α_j)`;
    /// pairing with `λ + ρ` is proportional to `⟨λ + ρ, β∨⟩`.
    coroot_weights: Vec<Vec<i64>>,
    cache: RwLock<HashMap<Vec<i32>, Arc<FactorWeights>>>,
}

impl FactorData {
    pub fn new(ty: SimpleType) -> Self {
        let n = ty.rank;
        let cartan = ty.cartan();
        let gram = ty.gram();
        let cartan_inv = ty.cartan_inverse();
        let raw: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|k| cartan_inv[k][i] * Rational64::from_integer(gram[i][i]) / Rational64::from_integer(2)).collect())
            .collect();
        let scale = raw.iter().flatten().fold(1i64, |acc, r| acc.lcm(r.denom()));
        let form = raw
            .iter()
            .map(|row| row.iter().map(|r| (r * Rational64::from_integer(scale)).to_integer()).collect())
            .collect();
        let roots_simple = positive_roots(&cartan);
        let roots_omega = roots_simple
            .iter()
            .map(|c| (0..n).map(|k| (0..n).map(|j| c[j] * cartan[j][k]).sum()).collect())
            .collect();
        let coroot_weights = roots_simple
            .iter()
            .map(|c| (0..n).map(|j| c[j] as i64 * gram[j][j]).collect())
            .collect();
        FactorData { ty, cartan, gram, cartan_inv, form, roots_simple, roots_omega, coroot_weights, cache: RwLock::new(HashMap::new()) }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Reflects `w` into the dominant chamber, returning the parity of the
    /// Weyl element used (`±1`), or `0` if `w` lies on a wall.
    pub fn reflect_signed(&self, w: &mut [i32]) -> i8 {
        let mut sign = 1i8;
        loop {
            let mut moved = false;
            for i in 0..w.len() {
                let a = w[i];
                if a == 0 {
                    return 0;
                }
                if a < 0 {
                    for (x, c) in w.iter_mut().zip(&self.cartan[i]) {
                        *x -= a * c;
                    }
                    sign = -sign;
                    moved = true;
                }
            }
            if !moved {
                return sign;
            }
        }
    }

    /// Moves `w` to its dominant Weyl conjugate.
    pub fn reflect_plain(&self, w: &mut [i32]) {
        loop {
            let mut moved = false;
            for i in 0..w.len() {
                let a = w[i];
                if a < 0 {
                    for (x, c) in w.iter_mut().zip(&self.cartan[i]) {
                        *x -= a * c;
                    }
                    moved = true;
                }
            }
            if !moved {
                return;
            }
        }
    }

    pub fn weyl_dim(&self, lambda: &[i32]) -> BigUint {
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for cw in &self.coroot_weights {
            let top: i64 = cw.iter().zip(lambda).map(|(c, &l)| c * (l as i64 + 1)).sum();
            let bottom: i64 = cw.iter().sum();
            num *= BigUint::from(top as u64);
            den *= BigUint::from(bottom as u64);
        }
        debug_assert!((&num % &den).is_zero());
        num / den
    }

    fn pair(&self, x: &[i32], y: &[i32]) -> i64 {
        let mut s = 0i64;
        for (i, &a) in x.iter().enumerate() {
            if a != 0 {
                for (k, &b) in y.iter().enumerate() {
                    s += a as i64 * self.form[i][k] * b as i64;
                }
            }
        }
        s
    }

    /// Height of `λ - μ` in the root lattice.
    fn depth(&self, lambda: &[i32], mu: &[i32]) -> i64 {
        let n = self.rank();
        let mut h = Rational64::zero();
        for i in 0..n {
            let d = (lambda[i] - mu[i]) as i64;
            if d != 0 {
                for j in 0..n {
                    h += self.cartan_inv[i][j] * Rational64::from_integer(d);
                }
            }
        }
        debug_assert!(h.is_integer());
        h.to_integer()
    }

    /// Freudenthal multiplicities of the dominant weights of `V(λ)`.
    fn dominant_multiplicities(&self, lambda: &[i32]) -> Vec<(Vec<i32>, u64)> {
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue = VecDeque::from([lambda.to_vec()]);
        seen.insert(lambda.to_vec());
        while let Some(mu) = queue.pop_front() {
            for alpha in &self.roots_omega {
                let nu: Vec<i32> = mu.iter().zip(alpha).map(|(a, b)| a - b).collect();
                if nu.iter().all(|&x| x >= 0) && !seen.contains(&nu) {
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(i64, Vec<i32>)> = seen.into_iter().map(|mu| (self.depth(lambda, &mu), mu)).collect();
        order.sort();

        let rho = vec![1i32; self.rank()];
        let shift = |w: &[i32]| -> Vec<i32> { w.iter().zip(&rho).map(|(a, b)| a + b).collect() };
        let lr = shift(lambda);
        let norm_top = self.pair(&lr, &lr);
        let mut mult: HashMap<Vec<i32>, u64> = HashMap::new();
        let mut out = Vec::with_capacity(order.len());
        for (depth, mu) in order {
            if depth == 0 {
                mult.insert(mu.clone(), 1);
                out.push((mu, 1));
                continue;
            }
            let mut num: i64 = 0;
            for alpha in &self.roots_omega {
                let mut nu = mu.clone();
                loop {
                    for (x, a) in nu.iter_mut().zip(alpha) {
                        *x += a;
                    }
                    let mut rep = nu.clone();
                    self.reflect_plain(&mut rep);
                    let m = mult.get(&rep).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    num += m as i64 * self.pair(&nu, alpha);
                }
            }
            let mr = shift(&mu);
            let den = norm_top - self.pair(&mr, &mr);
            debug_assert!(den > 0 && (2 * num) % den == 0, "Freudenthal division must be exact");
            let m = (2 * num / den) as u64;
            if m > 0 {
                mult.insert(mu.clone(), m);
                out.push((mu, m));
            }
        }
        out
    }

    fn orbit(&self, mu: &[i32]) -> Vec<Vec<i32>> {
        let mut seen: HashSet<Vec<i32>> = HashSet::from([mu.to_vec()]);
        let mut queue = VecDeque::from([mu.to_vec()]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len() {
                if w[i] != 0 {
                    let a = w[i];
                    let nu: Vec<i32> = w.iter().zip(&self.cartan[i]).map(|(x, c)| x - a * c).collect();
                    if seen.insert(nu.clone()) {
                        queue.push_back(nu);
                    }
                }
            }
            out.push(w);
        }
        out
    }

    /// Full weight system of `V(λ)`, cached.
    pub fn weights(&self, lambda: &[i32]) -> Arc<FactorWeights> {
        if let Some(w) = self.cache.read().get(lambda) {
            return w.clone();
        }
        let dominant = self.dominant_multiplicities(lambda);
        let all = dominant
            .iter()
            .flat_map(|(mu, m)| self.orbit(mu).into_iter().map(move |w| (w, *m)))
            .collect();
        let fw = Arc::new(FactorWeights { dominant, all });
        self.cache.write().insert(lambda.to_vec(), fw.clone());
        fw
    }

    /// Orbit size of a dominant weight under the Weyl group.
    pub fn orbit_size(&self, mu: &[i32]) -> usize {
        self.orbit(mu).len()
    }

    pub fn weyl_dim_u128(&self, lambda: &[i32]) -> u128 {
        self.weyl_dim(lambda).to_u128().expect("dimension fits in 128 bits")
    }
}

/// Positive roots in simple-root coordinates, generated by root strings.
fn positive_roots(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i32).collect()).collect();
    let mut known: HashSet<Vec<i32>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // ⟨β, α_i∨⟩ = Σ_j c_j C[j][i]
                let pairing: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(s: &str) -> FactorData {
        FactorData::new(SimpleType::parse(s).unwrap())
    }

    #[test]
    fn root_counts() {
        for (s, n) in [("A1", 1), ("A4", 10), ("B3", 9), ("C4", 16), ("D4", 12), ("D5", 20), ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)] {
            assert_eq!(data(s).roots_simple.len(), n, "{s}");
        }
    }

    #[test]
    fn adjoint_dimensions() {
        for (s, hw, d) in [
            ("A2", vec![1, 1], 8u32),
            ("G2", vec![0, 1], 14),
            ("F4", vec![1, 0, 0, 0], 52),
            ("E6", vec![0, 1, 0, 0, 0, 0], 78),
            ("E7", vec![1, 0, 0, 0, 0, 0, 0], 133),
            ("E8", vec![0, 0, 0, 0, 0, 0, 0, 1], 248),
        ] {
            assert_eq!(data(s).weyl_dim(&hw), BigUint::from(d), "{s}");
        }
    }

    #[test]
    fn reflection_against_orbit() {
        let a2 = data("A2");
        let mut w = vec![-1, 3];
        let sign = a2.reflect_signed(&mut w);
        assert_eq!((sign, w.clone()), (-1, vec![1, 2]));
        // the dominant image is the unique dominant element of the orbit
        let orbit = a2.orbit(&[1, 2]);
        assert!(orbit.contains(&vec![-1, 3]));
        assert_eq!(orbit.iter().filter(|w| w.iter().all(|&x| x >= 0)).count(), 1);
        let mut wall = vec![0];
        assert_eq!(data("A1").reflect_signed(&mut wall), 0);
    }
}
