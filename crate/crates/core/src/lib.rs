//! Enumeration and classification of transfer systems on finite lattices,
//! in particular subgroup lattices of finite groups.

pub mod bitset;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod lattice;
pub mod model;
pub mod report;
pub mod rubin;

pub use bitset::{EdgeSet, NodeMatrix};
pub use enumerate::{enumerate, EnumerateConfig, EnumerationStore, KindRegistry};
pub use error::{Error, Result};
pub use lattice::{GroupDataFile, QuotientPoset, SubgroupLattice};
pub use rubin::ClosureMode;
