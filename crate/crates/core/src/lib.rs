//! Exact decomposition of exterior algebras of reductive group
//! representations, skew multiplicity-free (SMF) checks, and the supporting
//! combinatorics: partitions, root data, characters, dual pairs and a
//! Clifford-algebra oracle.

pub mod error;
pub mod exec;
pub mod partitions;
pub mod chars;
pub mod rootdata;
pub mod dualpairs;
pub mod smf;
pub mod clifford;

pub use error::{Error, Result};
pub use exec::Exec;
pub use partitions::Partition;
pub use chars::VirtualCharacter;
pub use rootdata::{RootSystem, Weight};

/// Multiplicities and virtual coefficients.
pub type Mult = i128;
