//! Exact combinatorics for modular representations of symmetric and
//! alternating groups: partitions, the Mullineux map, the level-1 Fock
//! space, and unitriangular basic sets.

pub mod error;
pub mod partition;
pub mod mullineux;
pub mod poly;
pub mod fock;
pub mod matrix;
pub mod basicsets;
pub mod clifford;
pub mod scenarios;

pub use error::{Error, Result};
pub use partition::Partition;
