//! Plain-text listings.

use std::fmt::Write;

use crate::enumerate::EnumerationStore;
use crate::lattice::SubgroupLattice;

/// `{i:name}` per subgroup, followed by the conjugacy classes when some
/// class has more than one member.
pub fn subgroup_dictionary(lattice: &SubgroupLattice) -> String {
    let mut s = String::new();
    for (i, name) in lattice.node_names().iter().enumerate() {
        let _ = writeln!(s, "{{{i}:{name}}}");
    }
    if !lattice.has_trivial_action() {
        s.push_str("\nConjugacy Classes:\n");
        for class in lattice.node_classes() {
            let members: Vec<String> = class.iter().map(usize::to_string).collect();
            let _ = writeln!(s, "[{}]", members.join(","));
        }
    }
    s
}

/// One line per system in store order; the empty system prints as `{}`.
pub fn all_transfers_text(store: &EnumerationStore, lattice: &SubgroupLattice) -> String {
    let mut s = String::new();
    for t in store.systems() {
        s.push_str(&lattice.format_set(t));
        s.push('\n');
    }
    s
}
