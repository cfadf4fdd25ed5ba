//! Howe dualities on the exterior algebra `Λ(C^n ⊗ C^m)`: the skew
//! `(GL_n, GL_m)` duality, the `(O_n, so_{2m})` duality with its explicit
//! operators and harmonic highest weight vectors, and the `(O_n, SL_2 × SO_4)`
//! layer decomposition.

mod exterior;

use serde::Serialize;

use crate::chars::{label_dim, BranchGroup, BranchLabel};
use crate::error::{Error, Result};
use crate::partitions::{modify_o, Partition, SignedOChar};
use crate::rootdata::{eps_to_omega, Kind, RootSystem, SimpleType, Weight};
use crate::Mult;

pub use exterior::{
    apply_elementary, build_operators, commutator_apply, derivation, hwv_omega, is_harmonic, matrix_of, so_n_basis,
    Elementary, ExteriorOperator, ExteriorVector, MatrixEntry, OperatorKind,
};

/// Pairs `(λ, λ^t)` with `λ ⊢ k` in the `n × m` box: `Λ^k(C^n ⊗ C^m)` is
/// `⊕ V_λ(GL_n) ⊗ V_{λ^t}(GL_m)`.
pub fn skew_duality_glgl(n: usize, m: usize, k: u32) -> Vec<(Partition, Partition)> {
    Partition::in_box(k, n, m as u32)
        .into_iter()
        .map(|l| {
            let t = l.conjugate();
            (l, t)
        })
        .collect()
}

/// `λ` satisfies `λ^t_i + λ^t_j ≤ n` for all `i ≠ j` and fits `n × m`.
pub fn is_harmonic_partition(lambda: &Partition, n: usize, m: usize) -> bool {
    if !lambda.fits_box(n, m as u32) {
        return false;
    }
    let t = lambda.conjugate();
    t.part(0) as usize + t.part(1) as usize <= n
}

/// One summand `V_[λ] ⊗ L(λ̃)` of the `(O_n, so_{2m})` decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityTerm {
    pub lambda: Partition,
    /// The `O_n` label of `V_[λ]` after modification.
    pub o_label: SignedOChar,
    /// `λ̃` in doubled `ε`-coordinates: `n - 2 λ^t_{m+1-k}`.
    pub eps2: Vec<i64>,
    /// `λ̃` as a dominant weight of [`so2m_system`]; empty for `m = 1`.
    pub so_weight: Weight,
}

/// Root system of `so_{2m}`: trivial for `m = 1`, `A1xA1` for `m = 2`, `D_m` above.
pub fn so2m_system(m: usize) -> Result<RootSystem> {
    Ok(match m {
        0 => return Err(Error::Precondition("m must be positive".into())),
        1 => RootSystem::trivial(),
        2 => RootSystem::new(vec![SimpleType::new(Kind::A, 1)?, SimpleType::new(Kind::A, 1)?]),
        _ => RootSystem::new(vec![SimpleType::new(Kind::D, m)?]),
    })
}

fn so2m_weight(eps2: &[i64]) -> Result<Weight> {
    match eps2.len() {
        1 => Ok(vec![]),
        2 => Ok(vec![((eps2[0] - eps2[1]) / 2) as i32, ((eps2[0] + eps2[1]) / 2) as i32]),
        m => eps_to_omega(SimpleType::new(Kind::D, m)?, eps2),
    }
}

/// `λ̃` in doubled `ε`-coordinates.
pub fn lambda_tilde_eps2(lambda: &Partition, n: usize, m: usize) -> Vec<i64> {
    let t = lambda.conjugate();
    (1..=m).map(|k| n as i64 - 2 * t.part(m - k) as i64).collect()
}

/// The harmonic summands of `Λ(C^n ⊗ C^m)` under `O_n × so_{2m}`.
pub fn o_so_duality(n: usize, m: usize) -> Result<Vec<DualityTerm>> {
    if n == 0 || m == 0 {
        return Err(Error::Precondition("n and m must be positive".into()));
    }
    let mut out = Vec::new();
    for lambda in Partition::all_in_box(n, m as u32) {
        if !is_harmonic_partition(&lambda, n, m) {
            continue;
        }
        let eps2 = lambda_tilde_eps2(&lambda, n, m);
        let so_weight = so2m_weight(&eps2)?;
        let o_label = modify_o(&lambda, n);
        out.push(DualityTerm { lambda, o_label, eps2, so_weight });
    }
    Ok(out)
}

/// `dim V_[λ] · dim L(λ̃)` for a duality term.
pub fn duality_term_dim(term: &DualityTerm, n: usize, m: usize) -> Result<Mult> {
    let SignedOChar::Term { sign, lambda, sharp } = &term.o_label else {
        return Err(Error::Precondition(format!("{} modifies to zero for O_{n}", term.lambda)));
    };
    let label = BranchLabel { lambda: lambda.clone(), sharp: *sharp };
    let o_dim = *sign as Mult * label_dim(BranchGroup::O(n), &label)?;
    let so_dim = so2m_system(m)?.weyl_dim(&term.so_weight)? as Mult;
    Ok(o_dim * so_dim)
}

/// One summand `V_[λ] ⊗ V_{λ^t_1 - λ^t_2}(SL_2)` of `Λ^k(C^n ⊗ C^2)` under
/// `O_n × SL_2`, sitting at `ν` in the `so_4`-string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct So4Layer {
    pub lambda: Partition,
    pub o_label: SignedOChar,
    pub sl2_label: u32,
    pub nu: u32,
}

/// Layers of `Λ^k(C^n ⊗ C^2)`: harmonic `λ` with `λ_1 ≤ 2`,
/// `|λ| + 2ν = k` and `0 ≤ ν ≤ n - λ^t_1 - λ^t_2`.
pub fn so4_layers(n: usize, k: u32) -> Result<Vec<So4Layer>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let mut out = Vec::new();
    for lambda in Partition::all_in_box(n, 2) {
        if !is_harmonic_partition(&lambda, n, 2) || lambda.size() > k || (k - lambda.size()) % 2 == 1 {
            continue;
        }
        let t = lambda.conjugate();
        let nu = (k - lambda.size()) / 2;
        if nu as usize > n - t.part(0) as usize - t.part(1) as usize {
            continue;
        }
        out.push(So4Layer { o_label: modify_o(&lambda, n), sl2_label: t.part(0) - t.part(1), nu, lambda });
    }
    Ok(out)
}
