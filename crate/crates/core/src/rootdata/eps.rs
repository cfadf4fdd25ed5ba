use super::types::{Kind, SimpleType};
use super::Weight;
use crate::error::{Error, Result};

/// Number of ε-coordinates used for a classical factor.
pub fn eps_len(ty: SimpleType) -> usize {
    match ty.kind {
        Kind::A => ty.rank + 1,
        _ => ty.rank,
    }
}

/// Converts doubled ε-coordinates (`2ε_i`) of a classical factor into
/// fundamental-weight coordinates.
pub fn eps_to_omega(ty: SimpleType, eps2: &[i64]) -> Result<Weight> {
    let n = ty.rank;
    let bad = || Error::InvalidEpsilon(eps2.to_vec(), ty.to_string());
    if eps2.len() != eps_len(ty) {
        return Err(bad());
    }
    let all_even = eps2.iter().all(|e| e % 2 == 0);
    let all_odd = eps2.iter().all(|e| e.rem_euclid(2) == 1);
    if !all_even && !all_odd {
        return Err(Error::MixedIntegrality(eps2.to_vec()));
    }
    let diff = |i: usize| (eps2[i] - eps2[i + 1]) / 2;
    let w: Vec<i64> = match ty.kind {
        Kind::A => (0..n).map(diff).collect(),
        Kind::B => {
            let mut w: Vec<i64> = (0..n - 1).map(diff).collect();
            w.push(eps2[n - 1]);
            w
        }
        Kind::C => {
            if !all_even {
                return Err(bad());
            }
            let mut w: Vec<i64> = (0..n - 1).map(diff).collect();
            w.push(eps2[n - 1] / 2);
            w
        }
        Kind::D => {
            let mut w: Vec<i64> = (0..n - 1).map(diff).collect();
            w.push((eps2[n - 2] + eps2[n - 1]) / 2);
            w
        }
        _ => return Err(Error::Unsupported(format!("epsilon coordinates for {ty}"))),
    };
    Ok(w.into_iter().map(|x| x as i32).collect())
}

/// Inverse of [`eps_to_omega`]; for type A the last coordinate is zero.
pub fn omega_to_eps(ty: SimpleType, w: &[i32]) -> Result<Vec<i64>> {
    let n = ty.rank;
    if w.len() != n {
        return Err(Error::WeightArity { weight: w.to_vec(), got: w.len(), expected: n, system: ty.to_string() });
    }
    let w: Vec<i64> = w.iter().map(|&x| x as i64).collect();
    let tail = |from: usize, to: usize| -> i64 { w[from..to].iter().sum::<i64>() };
    let out = match ty.kind {
        Kind::A => (0..=n).map(|i| 2 * tail(i, n)).collect(),
        Kind::B => (0..n).map(|i| 2 * tail(i, n - 1) + w[n - 1]).collect(),
        Kind::C => (0..n).map(|i| 2 * tail(i, n)).collect(),
        Kind::D => {
            let last = w[n - 1] - w[n - 2];
            let mut e: Vec<i64> = (0..n - 1).map(|i| 2 * tail(i, n - 2) + w[n - 2] + w[n - 1]).collect();
            e.push(last);
            e
        }
        _ => return Err(Error::Unsupported(format!("epsilon coordinates for {ty}"))),
    };
    Ok(out)
}
