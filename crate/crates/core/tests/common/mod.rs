#![allow(dead_code)]

use ninfty_core::groups::{builtin, DEFAULT_ELEMENT_CAP};
use ninfty_core::{EdgeSet, SubgroupLattice};

pub fn chain(len: usize) -> SubgroupLattice {
    let names = (0..len).map(|i| format!("x{i}")).collect();
    let orders = (0..len).map(|i| 1u64 << i).collect();
    let leq = (0..len)
        .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
        .collect();
    SubgroupLattice::from_order(format!("chain{len}"), names, orders, leq).unwrap()
}

pub fn diamond() -> SubgroupLattice {
    let names = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
    let leq = vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
    SubgroupLattice::from_order("Diamond", names, vec![0, 1, 1, 2], leq).unwrap()
}

pub fn pentagon() -> SubgroupLattice {
    let names = ["0", "1", "2", "3", "4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let leq = vec![
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
    ];
    SubgroupLattice::from_order("Pentagon", names, vec![0, 1, 1, 2, 3], leq).unwrap()
}

pub fn group(spec: &str) -> SubgroupLattice {
    builtin(spec, DEFAULT_ELEMENT_CAP).unwrap()
}

/// Every lattice in the suite with at most ten comparable pairs.
pub fn small_lattices() -> Vec<SubgroupLattice> {
    vec![
        chain(1),
        chain(2),
        chain(3),
        chain(4),
        chain(5),
        diamond(),
        pentagon(),
        group("elemab:2:2"),
        group("symmetric:3"),
        group("cyclic:6"),
    ]
}

/// All subsets of the edge universe.
pub fn all_subsets(l: &SubgroupLattice) -> impl Iterator<Item = EdgeSet> + '_ {
    let m = l.edge_count();
    assert!(m <= 20);
    (0u32..1 << m).map(move |mask| EdgeSet::from_indices(m, (0..m).filter(|&e| mask >> e & 1 == 1)))
}
