//! Hibi rings of finite distributive lattices.
//!
//! Start from a [`Poset`] and its lattice of order ideals
//! ([`DistributiveLattice::ideal_lattice`]), then ask [`hibi`] for the
//! join-meet ideal and its Groebner basis, [`invariants`] for h-vectors and
//! the canonical module, [`betti`] for graded Betti numbers and [`planar`]
//! for sublattices of the plane. [`cli`] bundles these into the reports
//! printed by the `hibi` binary.

pub mod algebra;
pub mod betti;
pub mod cli;
pub mod error;
pub mod hibi;
pub mod invariants;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod planar;
pub mod poset;

pub use error::{Error, Result};
pub use lattice::{DistributiveLattice, Lattice};
pub use poset::{HatStats, Poset};
