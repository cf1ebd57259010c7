//! Rubin's closure operator: the least transfer system containing a set of
//! pairs, plus the reverse direction (minimal bases) and the axiom checker.
//!
//! Pairs are always oriented `(lower, upper)`. Restriction of `(A, B)` along
//! `L <= B` produces `(A ∧ L, L)`; identity results are dropped since
//! identities are implicit members of every system.

use crate::bitset::EdgeSet;
use crate::lattice::{QuotientPoset, SubgroupLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureMode {
    /// Composition, restriction and conjugation.
    Full,
    /// Composition and restriction only: weak factorization systems on the
    /// underlying lattice.
    Underlying,
}

/// The ambient order a closure runs over.
trait Space {
    fn edge(&self, e: usize) -> (usize, usize);
    fn edge_index(&self, a: usize, b: usize) -> Option<usize>;
    fn below(&self, node: usize) -> &[usize];
    fn above(&self, node: usize) -> &[usize];
    /// Lower endpoints of the restriction of a pair with lower end `a` to `l`.
    fn restrict(&self, a: usize, l: usize, out: &mut Vec<usize>);
    fn orbit(&self, e: usize) -> Option<&[usize]>;
}

struct LatticeSpace<'a> {
    lattice: &'a SubgroupLattice,
    conjugation: bool,
}

impl Space for LatticeSpace<'_> {
    #[inline]
    fn edge(&self, e: usize) -> (usize, usize) {
        self.lattice.edge(e)
    }
    #[inline]
    fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.lattice.edge_index(a, b)
    }
    #[inline]
    fn below(&self, node: usize) -> &[usize] {
        self.lattice.strictly_below(node)
    }
    #[inline]
    fn above(&self, node: usize) -> &[usize] {
        self.lattice.strictly_above(node)
    }
    #[inline]
    fn restrict(&self, a: usize, l: usize, out: &mut Vec<usize>) {
        out.push(self.lattice.meet(a, l));
    }
    #[inline]
    fn orbit(&self, e: usize) -> Option<&[usize]> {
        if !self.conjugation {
            return None;
        }
        let orbit = &self.lattice.edge_orbits()[self.lattice.orbit_of(e)];
        (orbit.len() > 1).then_some(orbit.as_slice())
    }
}

/// Poset closure with precomputed up-sets; owns its poset so it can be
/// stored in long-lived operators.
pub struct PosetCloser {
    poset: QuotientPoset,
    above: Vec<Vec<usize>>,
}

impl PosetCloser {
    pub fn new(poset: QuotientPoset) -> Self {
        let m = poset.class_count();
        let above = (0..m)
            .map(|a| (0..m).filter(|&u| u != a && poset.le(a, u)).collect())
            .collect();
        PosetCloser { poset, above }
    }

    pub fn poset(&self) -> &QuotientPoset {
        &self.poset
    }

    pub fn close(&self, set: &mut EdgeSet) {
        close_with(self, set, None);
    }

    pub fn extend_closed(&self, set: &mut EdgeSet, added: &[usize]) {
        close_with(self, set, Some(added));
    }
}

impl Space for PosetCloser {
    fn edge(&self, e: usize) -> (usize, usize) {
        self.poset.edge(e)
    }
    fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.poset.edge_index(a, b)
    }
    fn below(&self, node: usize) -> &[usize] {
        self.poset.strictly_below(node)
    }
    fn above(&self, node: usize) -> &[usize] {
        &self.above[node]
    }
    fn restrict(&self, a: usize, l: usize, out: &mut Vec<usize>) {
        out.extend_from_slice(self.poset.meet_candidates(a, l));
    }
    fn orbit(&self, _e: usize) -> Option<&[usize]> {
        None
    }
}

/// Worklist fixpoint. Every edge is processed once when first inserted;
/// restriction depends only on the edge itself and composition is checked
/// against the current set from both sides.
///
/// With `added = None` every member of `set` is treated as new. Otherwise
/// `set` must already be closed and only the `added` edges are new.
fn close_with<S: Space>(space: &S, set: &mut EdgeSet, added: Option<&[usize]>) {
    let mut work: Vec<usize> = match added {
        None => set.iter().collect(),
        Some(edges) => edges.iter().copied().filter(|&e| set.insert(e)).collect(),
    };
    let initial = work.len();
    for k in 0..initial {
        if let Some(orbit) = space.orbit(work[k]) {
            for &f in orbit {
                if set.insert(f) {
                    work.push(f);
                }
            }
        }
    }

    let mut lowers = Vec::new();
    let mut pending = Vec::new();
    while let Some(e) = work.pop() {
        let (a, b) = space.edge(e);
        for &l in space.below(b) {
            lowers.clear();
            space.restrict(a, l, &mut lowers);
            for &x in &lowers {
                if x != l {
                    pending.push(space.edge_index(x, l).expect("restriction is comparable"));
                }
            }
        }
        for &c in space.above(b) {
            if let Some(f) = space.edge_index(b, c) {
                if set.contains(f) {
                    pending.push(space.edge_index(a, c).expect("composite is comparable"));
                }
            }
        }
        for &x in space.below(a) {
            if let Some(f) = space.edge_index(x, a) {
                if set.contains(f) {
                    pending.push(space.edge_index(x, b).expect("composite is comparable"));
                }
            }
        }
        for f in pending.drain(..) {
            if set.insert(f) {
                work.push(f);
                if let Some(orbit) = space.orbit(f) {
                    for &g in orbit {
                        if set.insert(g) {
                            work.push(g);
                        }
                    }
                }
            }
        }
    }
}

/// Closes `set` in place.
pub fn close_in_place(lattice: &SubgroupLattice, set: &mut EdgeSet, mode: ClosureMode) {
    let space = LatticeSpace {
        lattice,
        conjugation: mode == ClosureMode::Full,
    };
    close_with(&space, set, None);
}

/// Adds `added` to the already-closed `set` and closes again, only
/// propagating from the new edges.
pub fn extend_closed(
    lattice: &SubgroupLattice,
    set: &mut EdgeSet,
    added: &[usize],
    mode: ClosureMode,
) {
    let space = LatticeSpace {
        lattice,
        conjugation: mode == ClosureMode::Full,
    };
    close_with(&space, set, Some(added));
}

/// The least transfer system containing `seed`.
pub fn closure(seed: &EdgeSet, lattice: &SubgroupLattice, mode: ClosureMode) -> EdgeSet {
    let mut set = seed.clone();
    close_in_place(lattice, &mut set, mode);
    set
}

/// Closure on a (possibly non-lattice) poset. Restriction of `(A, B)` to
/// `L <= B` adds `(M, L)` for every maximal common lower bound `M` of `A`
/// and `L`.
pub fn poset_closure(seed: &EdgeSet, poset: &QuotientPoset) -> EdgeSet {
    let mut set = seed.clone();
    poset_close_in_place(poset, &mut set);
    set
}

pub fn poset_close_in_place(poset: &QuotientPoset, set: &mut EdgeSet) {
    PosetCloser::new(poset.clone()).close(set);
}

/// Deterministic minimal generating set of a closed set: starting from all
/// of its edges, drop edges in descending index order whenever the rest
/// still generates.
pub fn find_basis(system: &EdgeSet, lattice: &SubgroupLattice, mode: ClosureMode) -> EdgeSet {
    let mut basis = system.clone();
    let members: Vec<usize> = system.iter().collect();
    for &e in members.iter().rev() {
        basis.remove(e);
        if closure(&basis, lattice, mode) != *system {
            basis.insert(e);
        }
    }
    basis
}

/// Checks the transfer-system axioms directly, without running the closure.
pub fn is_transfer_system(set: &EdgeSet, lattice: &SubgroupLattice, mode: ClosureMode) -> bool {
    for e in set.iter() {
        if e >= lattice.edge_count() {
            return false;
        }
        let (a, b) = lattice.edge(e);
        if mode == ClosureMode::Full {
            let orbit = &lattice.edge_orbits()[lattice.orbit_of(e)];
            if !orbit.iter().all(|&f| set.contains(f)) {
                return false;
            }
        }
        for &l in lattice.strictly_below(b) {
            let x = lattice.meet(a, l);
            if x != l && !set.contains(lattice.edge_index(x, l).unwrap()) {
                return false;
            }
        }
        for &c in lattice.strictly_above(b) {
            let f = lattice.edge_index(b, c).unwrap();
            if set.contains(f) && !set.contains(lattice.edge_index(a, c).unwrap()) {
                return false;
            }
        }
    }
    true
}

/// Axiom check for transfer systems on a poset, using the
/// maximal-lower-bound form of restriction.
pub fn is_poset_transfer_system(set: &EdgeSet, poset: &QuotientPoset) -> bool {
    for e in set.iter() {
        let (a, b) = poset.edge(e);
        for &l in poset.strictly_below(b) {
            for &x in poset.meet_candidates(a, l) {
                if x != l && !set.contains(poset.edge_index(x, l).unwrap()) {
                    return false;
                }
            }
        }
        for (f, &(b2, c)) in poset.edges().iter().enumerate() {
            if b2 == b && set.contains(f) && !set.contains(poset.edge_index(a, c).unwrap()) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures;

    fn set(l: &SubgroupLattice, pairs: &[(usize, usize)]) -> EdgeSet {
        l.edge_set_from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn empty_seed_is_closed() {
        let l = fixtures::pentagon();
        assert!(closure(&l.empty_set(), &l, ClosureMode::Full).is_empty());
    }

    #[test]
    fn chain_restriction_and_composition() {
        let l = fixtures::chain(3);
        let c = closure(&set(&l, &[(0, 2)]), &l, ClosureMode::Full);
        assert_eq!(l.pairs_of(&c), vec![(0, 1), (0, 2)]);
        let c = closure(&set(&l, &[(1, 2)]), &l, ClosureMode::Full);
        assert_eq!(l.pairs_of(&c), vec![(1, 2)]);
        let c = closure(&set(&l, &[(0, 1), (1, 2)]), &l, ClosureMode::Full);
        assert_eq!(c, l.complete_set());
    }

    #[test]
    fn complete_set_is_a_transfer_system() {
        let l = fixtures::pentagon();
        assert!(is_transfer_system(&l.complete_set(), &l, ClosureMode::Full));
        assert!(is_transfer_system(&l.empty_set(), &l, ClosureMode::Full));
        assert!(!is_transfer_system(
            &set(&l, &[(0, 4)]),
            &l,
            ClosureMode::Full
        ));
    }

    #[test]
    fn basis_of_chain_complete() {
        let l = fixtures::chain(3);
        let b = find_basis(&l.complete_set(), &l, ClosureMode::Full);
        assert_eq!(l.pairs_of(&b), vec![(0, 1), (1, 2)]);
        assert!(find_basis(&l.empty_set(), &l, ClosureMode::Full).is_empty());
    }

    #[test]
    fn poset_closure_on_diamond() {
        let d = fixtures::diamond();
        let q = QuotientPoset::of(&d).unwrap();
        let seed = EdgeSet::from_indices(q.edge_count(), [q.edge_index(0, 3).unwrap()]);
        let c = poset_closure(&seed, &q);
        // restriction forces both bottom pairs; nothing forces (a,1) or (b,1)
        let expected = [(0, 1), (0, 2), (0, 3)].map(|(a, b)| q.edge_index(a, b).unwrap());
        assert_eq!(c, EdgeSet::from_indices(q.edge_count(), expected));
        assert!(poset_closure(&EdgeSet::empty(q.edge_count()), &q).is_empty());
    }
}
