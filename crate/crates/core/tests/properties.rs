//! Closure-operator laws on random seeds.

mod common;

use common::*;
use ninfty_core::rubin::{self, closure, is_transfer_system};
use ninfty_core::{ClosureMode, EdgeSet, SubgroupLattice};
use proptest::prelude::*;

/// Seeds draw from the first 64 edges, which covers every lattice used here.
fn seed(l: &SubgroupLattice, mask: u64) -> EdgeSet {
    assert!(l.edge_count() <= 64);
    EdgeSet::from_indices(
        l.edge_count(),
        (0..l.edge_count()).filter(|&e| mask >> e & 1 == 1),
    )
}

fn check_laws(l: &SubgroupLattice, a: u64, b: u64, mode: ClosureMode) -> Result<(), TestCaseError> {
    let (sa, sb) = (seed(l, a), seed(l, a | b));
    let ca = closure(&sa, l, mode);
    prop_assert!(sa.is_subset(&ca), "extensive");
    prop_assert_eq!(&closure(&ca, l, mode), &ca, "idempotent");
    prop_assert!(is_transfer_system(&ca, l, mode));
    let cb = closure(&sb, l, mode);
    prop_assert!(ca.is_subset(&cb), "monotone");

    let added: Vec<usize> = sb.iter().filter(|&e| !ca.contains(e)).collect();
    let mut grown = ca.clone();
    rubin::extend_closed(l, &mut grown, &added, mode);
    prop_assert_eq!(grown, cb, "incremental extension agrees with closure");
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laws_on_chain(a: u64, b: u64) {
        check_laws(&chain(5), a, b, ClosureMode::Full)?;
    }

    #[test]
    fn laws_on_diamond(a: u64, b: u64) {
        check_laws(&diamond(), a, b, ClosureMode::Full)?;
    }

    #[test]
    fn laws_on_pentagon(a: u64, b: u64) {
        check_laws(&pentagon(), a, b, ClosureMode::Full)?;
    }

    #[test]
    fn laws_on_klein_four(a: u64, b: u64) {
        check_laws(&group("elemab:2:2"), a, b, ClosureMode::Full)?;
    }

    #[test]
    fn laws_on_s3_both_modes(a: u64, b: u64) {
        let l = group("symmetric:3");
        check_laws(&l, a, b, ClosureMode::Full)?;
        check_laws(&l, a, b, ClosureMode::Underlying)?;
    }

    #[test]
    fn laws_on_d4(a: u64, b: u64) {
        check_laws(&group("dihedral:4"), a, b, ClosureMode::Full)?;
    }
}
