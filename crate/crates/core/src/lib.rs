//! Exact models of the two half-spin representations of `so(2n)`.
//!
//! Basis states are pairs `(sign, Y)` with `Y` a strict partition whose rows
//! are shorter than `n`. The crate provides the Chevalley and Clifford
//! operators on these states, the matching fermionic Fock space, the map
//! between them, and an oracle that checks the defining identities exactly.

pub mod clifford;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod quiver;
pub mod sparse;
pub mod spinrep;

/// Largest supported rank; Fock indices are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

pub use clifford::{parse_clifford, CliffordElement, FockVector};
pub use diagram::{FockIndex, Sign, StrictPartition};
pub use error::{Error, Result};
pub use quiver::{DimVector, RankContext};
pub use sparse::Rational;
pub use spinrep::{BasisState, EpsWeight, Operator, SpinVector};
