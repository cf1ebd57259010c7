//! Native construction of subgroup lattices for built-in group families.

mod builtin;
mod naming;
mod perm;
mod subgroups;

pub use builtin::{builtin, cyclic_lattice, GroupSpec};
pub use perm::{ElementTable, Permutation, PermutationGroup, DEFAULT_ELEMENT_CAP};
pub use subgroups::subgroup_lattice;
