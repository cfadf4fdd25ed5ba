//! Clifford-algebra oracle: matrix models of classical-group modules and the
//! invariant subalgebra `Cl(V ⊕ V*)^G ≅ End_G(ΛV)`, which is commutative
//! exactly when `ΛV` is multiplicity-free.

mod algebra;
mod matrix;

use serde::Serialize;

use crate::error::Result;
use crate::rootdata::RootSystem;
use crate::smf::{RepSpec, TorusEmbedding};

pub use algebra::{
    clifford_invariants, derivation, is_commutative, is_invariant, CliffordElement, Commutativity, Monomial, MAX_CLIFFORD_DIM,
};
pub use matrix::{realize, realize_sum, GenKind, Generator, MatrixRep, SparseMatrix, MAX_REALIZED_DIM, Q};

/// Result of the invariant-algebra test on one module.
#[derive(Clone, Debug, Serialize)]
pub struct CliffordReport {
    pub dim: usize,
    pub invariant_dim: usize,
    pub commutative: bool,
    pub witness: Option<(String, String)>,
}

/// Identity embedding: one torus factor scaling each summand.
pub fn saturated_torus(summands: usize) -> TorusEmbedding {
    TorusEmbedding { matrix: (0..summands).map(|i| (0..summands).map(|j| i64::from(i == j)).collect()).collect() }
}

/// Realizes `rep`, computes the invariants and tests commutativity.
pub fn clifford_check(system: &RootSystem, rep: &RepSpec, torus: Option<&TorusEmbedding>) -> Result<CliffordReport> {
    let m = realize_sum(system, rep)?;
    let basis = clifford_invariants(&m, torus)?;
    let c = is_commutative(&basis);
    Ok(CliffordReport {
        dim: m.dim,
        invariant_dim: basis.len(),
        commutative: c.commutative,
        witness: c.witness.map(|(i, j)| (format!("{:?}", basis[i]), format!("{:?}", basis[j]))),
    })
}
