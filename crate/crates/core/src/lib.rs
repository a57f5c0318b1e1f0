//! Topological invariants of connected components of the space of real
//! meromorphic functions and of their compactifications.
//!
//! A component is named by its topological type ([`TopType`]). For every
//! existing type the crate computes the dimension, the Euler characteristic
//! of the component and the Euler characteristic of its compactification.
//! The latter is, in general, a count of decorated bipartite graphs
//! ([`DecoratedGraph`]) up to isomorphism, produced by [`enumerator`].
//!
//! The [`strata`] module models the stratification of the space of real
//! unordered tuples and the cell decompositions whose alternating counts
//! reduce the Euler characteristic to a count over a single stratum.

pub mod census;
pub mod decograph;
pub mod enumerator;
mod error;
pub mod euler;
pub mod strata;
pub mod topotype;

pub use census::{sweep, CensusRecord, SweepBounds, VariantFilter};
pub use decograph::{
    canonical_key, check_nonsep, check_nonsep_with, check_sep, check_sep_negated, find_gammas,
    Color, DecoratedGraph, Edge, GammaOrder, Vertex, Violation, ViolationList,
};
pub use enumerator::{
    enum_nonsep, enum_sep, EnumOptions, EnumerationBounds, GammaCount, DEFAULT_WORK_LIMIT,
};
pub use error::Error;
pub use euler::{chi_compactification, chi_component, ChiResult, Route};
pub use strata::{
    cells_lambda, cells_real, chi_cover, chi_w_lambda, chi_w_real, enumerate_strata, stratum_dim,
    CellDescriptor, CellKind, Relation, StratumSignature,
};
pub use topotype::{Condition, ExistenceReport, TopType, Variant};

pub type Result<T, E = Error> = std::result::Result<T, E>;
