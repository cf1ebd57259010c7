//! Predicates and constructions on individual transfer systems.

use crate::bitset::{EdgeSet, NodeMatrix};
use crate::lattice::SubgroupLattice;
use crate::rubin::{self, ClosureMode};

/// Two-out-of-three on every chain `a < b < c`: if two of `(a,b)`, `(b,c)`,
/// `(a,c)` are present, so is the third. Chains with a repeated node always
/// pass because identities are members.
pub fn is_saturated(system: &EdgeSet, lattice: &SubgroupLattice) -> bool {
    for (ac, &(a, c)) in lattice.edges().iter().enumerate() {
        let has_ac = system.contains(ac);
        for &b in lattice.strictly_below(c) {
            if !lattice.lt(a, b) {
                continue;
            }
            let has_ab = system.contains(lattice.edge_index(a, b).unwrap());
            let has_bc = system.contains(lattice.edge_index(b, c).unwrap());
            if has_ab as u8 + has_bc as u8 + has_ac as u8 == 2 {
                return false;
            }
        }
    }
    true
}

fn into_top(system: &EdgeSet, lattice: &SubgroupLattice) -> EdgeSet {
    let top = lattice.top();
    EdgeSet::from_indices(
        lattice.edge_count(),
        system.iter().filter(|&e| lattice.edge(e).1 == top),
    )
}

/// Largest cosaturated system inside `system`: the closure of its pairs
/// into the top.
pub fn cosaturated_core(system: &EdgeSet, lattice: &SubgroupLattice) -> EdgeSet {
    rubin::closure(&into_top(system, lattice), lattice, ClosureMode::Full)
}

pub fn is_cosaturated(system: &EdgeSet, lattice: &SubgroupLattice) -> bool {
    cosaturated_core(system, lattice) == *system
}

/// Meet of every `A` with `(A, top)` in the system; the top if there is none.
pub fn minimal_fibrant_subgroup(system: &EdgeSet, lattice: &SubgroupLattice) -> usize {
    let top = lattice.top();
    system
        .iter()
        .map(|e| lattice.edge(e))
        .filter(|&(_, b)| b == top)
        .fold(top, |f, (a, _)| lattice.meet(f, a))
}

/// Flat: no non-identity pair of the system lies below the minimal fibrant
/// subgroup.
pub fn is_flat(system: &EdgeSet, lattice: &SubgroupLattice) -> bool {
    let f = minimal_fibrant_subgroup(system, lattice);
    !system.iter().any(|e| lattice.le(lattice.edge(e).1, f))
}

/// Row `c` holds every `d` with `(c, d)` in the system (identities excluded).
pub(crate) fn out_rows(system: &EdgeSet, lattice: &SubgroupLattice) -> NodeMatrix {
    let mut m = NodeMatrix::new(lattice.node_count());
    for e in system.iter() {
        let (c, d) = lattice.edge(e);
        m.set(c, d);
    }
    m
}

/// Left lifting class of `system` as a node relation, identities included.
///
/// `(a, b)` lifts against `(c, d)` in a poset iff `a <= c` and `b <= d`
/// force `b <= c`.
pub(crate) fn left_relation(system: &EdgeSet, lattice: &SubgroupLattice) -> NodeMatrix {
    let n = lattice.node_count();
    let out = out_rows(system, lattice);
    let le = lattice.le_matrix();
    let mut left = NodeMatrix::identity(n);
    for &(a, b) in lattice.edges() {
        let up_b = le.row(b);
        // a <= c but not b <= c, and some d >= b with (c, d) present
        let blocked = le
            .row_iter(a)
            .any(|c| !le.get(b, c) && out.row(c).iter().zip(up_b).any(|(x, y)| x & y != 0));
        if !blocked {
            left.set(a, b);
        }
    }
    left
}

/// Non-identity pairs with the left lifting property against `system`.
pub fn left_set(system: &EdgeSet, lattice: &SubgroupLattice) -> EdgeSet {
    let rel = left_relation(system, lattice);
    EdgeSet::from_indices(
        lattice.edge_count(),
        lattice
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| rel.get(a, b))
            .map(|(e, _)| e),
    )
}

/// Least saturated transfer system containing `system`, by alternating
/// two-out-of-three completion with Rubin closure.
pub fn saturated_hull(system: &EdgeSet, lattice: &SubgroupLattice) -> EdgeSet {
    let mut current = rubin::closure(system, lattice, ClosureMode::Full);
    loop {
        let mut grown = current.clone();
        for (ac, &(a, c)) in lattice.edges().iter().enumerate() {
            for &b in lattice.strictly_below(c) {
                if !lattice.lt(a, b) {
                    continue;
                }
                let ab = lattice.edge_index(a, b).unwrap();
                let bc = lattice.edge_index(b, c).unwrap();
                let present = [ab, bc, ac].map(|e| grown.contains(e));
                if present.iter().filter(|&&p| p).count() == 2 {
                    for e in [ab, bc, ac] {
                        grown.insert(e);
                    }
                }
            }
        }
        if grown == current {
            return current;
        }
        current = rubin::closure(&grown, lattice, ClosureMode::Full);
    }
}

/// The cyclic-group self-duality: `(φ(b), φ(a))` for each `(a, b)` in the
/// left set, where `φ` reverses the divisor lattice. Non-cyclic inputs are
/// returned unchanged.
pub fn dual(system: &EdgeSet, lattice: &SubgroupLattice) -> EdgeSet {
    match lattice.divisor_duality() {
        None => system.clone(),
        Some(phi) => {
            let left = left_set(system, lattice);
            let pairs = left.iter().map(|e| {
                let (a, b) = lattice.edge(e);
                (phi[b], phi[a])
            });
            lattice
                .edge_set_from_pairs(pairs)
                .expect("φ reverses the order")
        }
    }
}
