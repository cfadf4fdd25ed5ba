//! Skew multiplicity-freeness of saturated and torus-restricted
//! representations, representation diagrams, geometric normalization and the
//! verification catalog.

mod catalog;
mod check;
mod spec;

pub use check::{
    multidegree_component, smf_check_irreducible, smf_check_saturated, smf_check_saturated_with, smf_check_torus,
    smf_check_torus_with, torus_group_component, Caps, SMFReport, SmfStats, TorusEmbedding, Verdict, Witness,
};
pub use spec::{diagram, edge_removals, is_indecomposable, normalize_geometric, support, EdgeRemoval, GroupSpec, RepDiagram, RepSpec};
pub use catalog::{catalog, verify_catalog, CatalogEntry, CatalogReport, EntryResult, Expected, PlethysmClaim, Section, Status};
