//! Enumeration checked against brute force and direct definitions.

mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use ninfty_core::classify::{self, dual, left_set};
use ninfty_core::enumerate::{self, enumerate};
use ninfty_core::model::{self, ModelClass};
use ninfty_core::rubin::{self, find_basis, is_transfer_system};
use ninfty_core::{ClosureMode, EdgeSet, EnumerateConfig, QuotientPoset, SubgroupLattice};

fn brute_force(l: &SubgroupLattice, mode: ClosureMode) -> HashSet<EdgeSet> {
    all_subsets(l)
        .filter(|s| is_transfer_system(s, l, mode))
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for l in small_lattices() {
        assert!(l.edge_count() <= 10, "{}", l.name());
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        let found: HashSet<EdgeSet> = store.systems().cloned().collect();
        assert_eq!(found.len(), store.len(), "duplicates on {}", l.name());
        assert_eq!(found, brute_force(&l, ClosureMode::Full), "{}", l.name());

        let under = enumerate(&l, "underlying", &EnumerateConfig::default()).unwrap();
        let found: HashSet<EdgeSet> = under.systems().cloned().collect();
        assert_eq!(
            found,
            brute_force(&l, ClosureMode::Underlying),
            "{}",
            l.name()
        );
    }
}

#[test]
fn closure_is_least_transfer_system_above_seed() {
    for l in small_lattices() {
        let systems: Vec<EdgeSet> = brute_force(&l, ClosureMode::Full).into_iter().collect();
        for seed in all_subsets(&l).step_by(7) {
            let c = rubin::closure(&seed, &l, ClosureMode::Full);
            let least =
                systems
                    .iter()
                    .filter(|t| seed.is_subset(t))
                    .fold(l.complete_set(), |acc, t| {
                        EdgeSet::from_indices(l.edge_count(), acc.iter().filter(|&e| t.contains(e)))
                    });
            assert_eq!(c, least, "{} seed {}", l.name(), l.format_set(&seed));
        }
    }
}

#[test]
fn conjugacy_matches_brute_force_on_quotient() {
    for l in [group("symmetric:3"), pentagon(), group("elemab:2:2")] {
        let q = QuotientPoset::of(&l).unwrap();
        let m = q.edge_count();
        let brute: HashSet<EdgeSet> = (0u32..1 << m)
            .map(|mask| EdgeSet::from_indices(m, (0..m).filter(|&e| mask >> e & 1 == 1)))
            .filter(|s| rubin::is_poset_transfer_system(s, &q))
            .collect();
        let store = enumerate(&l, "conjugacy", &EnumerateConfig::default()).unwrap();
        let found: HashSet<EdgeSet> = store.systems().cloned().collect();
        assert_eq!(found, brute, "{}", l.name());
    }
}

/// Size of a smallest generating subset, by exhaustive search.
fn minimal_basis_size(t: &EdgeSet, l: &SubgroupLattice) -> usize {
    let edges: Vec<usize> = t.iter().collect();
    (0..=edges.len())
        .find(|&k| {
            subsets_of_size(edges.len(), k).any(|pick| {
                let seed = EdgeSet::from_indices(l.edge_count(), pick.iter().map(|&i| edges[i]));
                rubin::closure(&seed, l, ClosureMode::Full) == *t
            })
        })
        .unwrap()
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

#[test]
fn layer_equals_minimal_basis_size() {
    for l in [
        group("cyclic:4"),
        group("cyclic:8"),
        group("symmetric:3"),
        group("quaternion:8"),
    ] {
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        for (i, t) in store.systems().enumerate() {
            let layer = store.layer_of_index(i);
            let basis = find_basis(t, &l, ClosureMode::Full);
            assert_eq!(rubin::closure(&basis, &l, ClosureMode::Full), *t);
            assert_eq!(basis.len(), layer, "{} {}", l.name(), l.format_set(t));
            if t.len() <= 12 {
                assert_eq!(
                    minimal_basis_size(t, &l),
                    layer,
                    "{} {}",
                    l.name(),
                    l.format_set(t)
                );
            }
        }
    }
}

#[test]
fn saturated_kind_counts_saturated_systems() {
    for spec in [
        "cyclic:4",
        "cyclic:12",
        "symmetric:3",
        "quaternion:8",
        "elemab:2:2",
        "dihedral:4",
    ] {
        let l = group(spec);
        let config = EnumerateConfig::default();
        let all = enumerate(&l, "all", &config).unwrap();
        let filtered = enumerate::saturated_filter(&all, &l).len();
        assert_eq!(
            enumerate(&l, "saturated", &config).unwrap().len(),
            filtered,
            "{spec}"
        );
        let cosat = all
            .systems()
            .filter(|t| classify::is_cosaturated(t, &l))
            .count();
        assert_eq!(
            enumerate(&l, "cosaturated", &config).unwrap().len(),
            cosat,
            "{spec}"
        );
    }
}

#[test]
fn abelian_saturated_equals_cosaturated() {
    for spec in [
        "cyclic:12",
        "cyclic:30",
        "elemab:2:2",
        "elemab:3:2",
        "cyclic:2 x cyclic:4",
    ] {
        let l = group(spec);
        let config = EnumerateConfig::default();
        let sat = enumerate(&l, "saturated", &config).unwrap().len();
        let cosat = enumerate(&l, "cosaturated", &config).unwrap().len();
        assert_eq!(sat, cosat, "{spec}");
    }
}

#[test]
fn dual_is_an_order_reversing_involution() {
    for spec in ["cyclic:4", "cyclic:8", "cyclic:30"] {
        let l = group(spec);
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        let systems: Vec<&EdgeSet> = store.systems().collect();
        let duals: Vec<EdgeSet> = systems.iter().map(|t| dual(t, &l)).collect();
        for (t, d) in systems.iter().zip(&duals) {
            assert!(
                store.contains(d),
                "{spec}: dual of {} is not a transfer system",
                l.format_set(t)
            );
            assert_eq!(dual(d, &l), **t);
        }
        for i in 0..systems.len() {
            for j in 0..systems.len() {
                if systems[i].is_subset(systems[j]) {
                    assert!(duals[j].is_subset(&duals[i]));
                }
            }
        }
    }
}

/// `(c,d)` has the right lifting property against every pair of `left`.
fn right_class(left: &EdgeSet, l: &SubgroupLattice) -> BTreeSet<(usize, usize)> {
    let mut lifts: Vec<(usize, usize)> = l.pairs_of(left);
    lifts.extend((0..l.node_count()).map(|i| (i, i)));
    let n = l.node_count();
    (0..n)
        .flat_map(|c| (0..n).map(move |d| (c, d)))
        .filter(|&(c, d)| l.le(c, d))
        .filter(|&(c, d)| {
            lifts
                .iter()
                .all(|&(a, b)| !(l.le(a, c) && l.le(b, d)) || l.le(b, c))
        })
        .collect()
}

#[test]
fn left_set_recovers_the_system() {
    for spec in ["cyclic:4", "cyclic:8", "elemab:2:2", "quaternion:8"] {
        let l = group(spec);
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        for t in store.systems() {
            let mut expected: BTreeSet<(usize, usize)> = l.pairs_of(t).into_iter().collect();
            expected.extend((0..l.node_count()).map(|i| (i, i)));
            assert_eq!(
                right_class(&left_set(t, &l), &l),
                expected,
                "{spec} {}",
                l.format_set(t)
            );
        }
    }
}

#[test]
fn weak_equivalences_contain_both_classes() {
    let l = group("cyclic:12");
    let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
    for p in model::intervals(&store) {
        let (af, f) = (store.get(p.af_index), store.get(p.f_index));
        let w = model::weak_equivalences(af, f, &l).unwrap();
        for (a, b) in l
            .pairs_of(af)
            .into_iter()
            .chain(l.pairs_of(&left_set(f, &l)))
        {
            assert!(w.get(a, b));
        }
        for i in 0..l.node_count() {
            assert!(w.get(i, i));
        }
        if model::model_check(af, f, &l).unwrap() == ModelClass::Quillen {
            for x in 0..l.node_count() {
                for y in w.row_iter(x) {
                    for z in w.row_iter(y) {
                        assert!(w.get(x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn flat_systems_have_normal_fibrant_subgroup() {
    for spec in ["symmetric:3", "dihedral:4", "alternating:4"] {
        let l = group(spec);
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        for t in store.systems() {
            let f = classify::minimal_fibrant_subgroup(t, &l);
            assert_eq!(l.node_classes()[l.class_of(f)].len(), 1, "{spec}");
        }
    }
}

#[test]
fn hull_and_core_laws() {
    for spec in ["cyclic:12", "symmetric:3", "quaternion:8"] {
        let l = group(spec);
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        let systems: Vec<&EdgeSet> = store.systems().collect();
        for t in &systems {
            let hull = classify::saturated_hull(t, &l);
            assert!(t.is_subset(&hull) && classify::is_saturated(&hull, &l));
            assert!(is_transfer_system(&hull, &l, ClosureMode::Full));
            assert_eq!(classify::saturated_hull(&hull, &l), hull);
            let saturated_above = systems
                .iter()
                .filter(|s| t.is_subset(s) && classify::is_saturated(s, &l));
            for s in saturated_above {
                assert!(hull.is_subset(s), "hull is not least");
            }

            let core = classify::cosaturated_core(t, &l);
            assert!(core.is_subset(t) && classify::is_cosaturated(&core, &l));
            assert_eq!(classify::cosaturated_core(&core, &l), core);
        }
        for a in &systems {
            for b in systems.iter().filter(|b| a.is_subset(b)) {
                assert!(
                    classify::cosaturated_core(a, &l).is_subset(&classify::cosaturated_core(b, &l))
                );
                assert!(classify::saturated_hull(a, &l).is_subset(&classify::saturated_hull(b, &l)));
            }
        }
    }
}

#[test]
fn non_cyclic_dual_is_identity() {
    let l = group("symmetric:3");
    let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
    for t in store.systems() {
        assert_eq!(dual(t, &l), *t);
    }
}

#[test]
fn self_incompatible_system_exists_on_c30() {
    let l = group("cyclic:30");
    let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
    let witness = store
        .systems()
        .find(|t| !model::is_compatible(t, t, &l).unwrap())
        .expect("some transfer system on C30 is not compatible with itself");
    assert!(!witness.is_empty());
}

#[test]
fn width_is_basis_of_complete_system() {
    for l in small_lattices() {
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        let w = enumerate::width(&l);
        assert_eq!(Some(w), store.layer_of(&l.complete_set()), "{}", l.name());
    }
}
