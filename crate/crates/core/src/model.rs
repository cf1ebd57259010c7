//! Pairs of transfer systems: premodel structures, their weak
//! equivalences, and compatible pairs.
//!
//! A premodel structure is a pair `AF ⊆ F` of transfer systems, read as
//! acyclic fibrations inside fibrations. Its weak equivalences are the maps
//! `x -> y` factoring as a map in the left lifting class of `F` followed by
//! a map in `AF`.

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::bitset::{is_subset_words, EdgeSet, NodeMatrix};
use crate::classify::{left_relation, out_rows};
use crate::enumerate::{EnumerateConfig, EnumerationStore};
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;

/// Result of [`model_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelClass {
    /// Weak equivalences not closed under composition.
    NotComposable = 0,
    /// Closed under composition but not two-out-of-three.
    CompositionClosed = 1,
    /// Two-out-of-three: a Quillen model structure.
    Quillen = 2,
}

impl ModelClass {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// An interval `AF ⊆ F` given by indices into an ALL store.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PremodelPair {
    pub af_index: usize,
    pub f_index: usize,
}

/// Per-system relations reused across every interval the system occurs in.
struct SystemRelations {
    /// `T ∪ id`, rows are up-sets.
    with_id: NodeMatrix,
    /// `T ∪ id`, rows are down-sets.
    with_id_in: NodeMatrix,
    /// Left lifting class with identities.
    left: NodeMatrix,
    /// Non-identity pairs `(lower, upper)`.
    pairs: Vec<(usize, usize)>,
}

impl SystemRelations {
    fn new(system: &EdgeSet, lattice: &SubgroupLattice) -> Self {
        let mut with_id = out_rows(system, lattice);
        for i in 0..lattice.node_count() {
            with_id.set(i, i);
        }
        SystemRelations {
            with_id_in: with_id.transpose(),
            with_id,
            left: left_relation(system, lattice),
            pairs: lattice.pairs_of(system),
        }
    }
}

fn fill_weak_equivalences(af: &SystemRelations, f: &SystemRelations, w: &mut NodeMatrix) {
    for x in 0..w.size() {
        let row = w.row_mut(x);
        row.fill(0);
        for z in f.left.row_iter(x) {
            for (r, a) in row.iter_mut().zip(af.with_id.row(z)) {
                *r |= a;
            }
        }
    }
}

fn classify_relation(w: &NodeMatrix, lattice: &SubgroupLattice) -> ModelClass {
    let n = w.size();
    let le = lattice.le_matrix();
    for x in 0..n {
        for y in w.row_iter(x) {
            if !is_subset_words(w.row(y), w.row(x)) {
                return ModelClass::NotComposable;
            }
        }
    }
    let wt = w.transpose();
    let mut scratch = vec![0u64; w.stride()];
    for x in 0..n {
        for y in w.row_iter(x) {
            // (x,y), (x,z) with y <= z force (y,z)
            for (s, (a, b)) in scratch.iter_mut().zip(w.row(x).iter().zip(le.row(y))) {
                *s = a & b;
            }
            if !is_subset_words(&scratch, w.row(y)) {
                return ModelClass::CompositionClosed;
            }
            // (x,z), (y,z) with x <= y force (x,y); here y plays z
            for (s, (a, b)) in scratch.iter_mut().zip(wt.row(y).iter().zip(le.row(x))) {
                *s = a & b;
            }
            if !is_subset_words(&scratch, w.row(x)) {
                return ModelClass::CompositionClosed;
            }
        }
    }
    ModelClass::Quillen
}

fn compatible(m: &SystemRelations, a: &SystemRelations, lattice: &SubgroupLattice) -> bool {
    let le = lattice.le_matrix();
    // (B,A) in Tm and (B∧C, B) in Ta force (C,A) in Ta, for all C <= A.
    // B = A reduces to the conclusion itself.
    for &(b, top) in &m.pairs {
        let into_b = a.with_id_in.row(b);
        let into_top = a.with_id_in.row(top);
        for c in 0..lattice.node_count() {
            if !le.get(c, top) || into_top[c / 64] & (1 << (c % 64)) != 0 {
                continue;
            }
            let bc = lattice.meet(b, c);
            if into_b[bc / 64] & (1 << (bc % 64)) != 0 {
                return false;
            }
        }
    }
    true
}

fn require_subset(af: &EdgeSet, f: &EdgeSet, what: &str) -> Result<()> {
    if af.is_subset(f) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what}: first system is not contained in the second"
        )))
    }
}

/// Weak equivalences of the premodel structure `(af, f)`, as a reflexive
/// node relation.
pub fn weak_equivalences(
    af: &EdgeSet,
    f: &EdgeSet,
    lattice: &SubgroupLattice,
) -> Result<NodeMatrix> {
    require_subset(af, f, "weak equivalences")?;
    let (ra, rf) = (
        SystemRelations::new(af, lattice),
        SystemRelations::new(f, lattice),
    );
    let mut w = NodeMatrix::new(lattice.node_count());
    fill_weak_equivalences(&ra, &rf, &mut w);
    Ok(w)
}

pub fn model_check(af: &EdgeSet, f: &EdgeSet, lattice: &SubgroupLattice) -> Result<ModelClass> {
    let w = weak_equivalences(af, f, lattice)?;
    Ok(classify_relation(&w, lattice))
}

/// Whether `(tm, ta)` with `tm ⊆ ta` is a compatible pair.
pub fn is_compatible(tm: &EdgeSet, ta: &EdgeSet, lattice: &SubgroupLattice) -> Result<bool> {
    require_subset(tm, ta, "compatibility")?;
    Ok(compatible(
        &SystemRelations::new(tm, lattice),
        &SystemRelations::new(ta, lattice),
        lattice,
    ))
}

/// Every `(i, j)` with `systems[i] ⊆ systems[j]`, including `i = j`.
pub fn intervals(store: &EnumerationStore) -> Vec<PremodelPair> {
    let n = store.len();
    (0..n)
        .flat_map(|i| {
            let small = store.get(i);
            (0..n)
                .filter(move |&j| small.is_subset(store.get(j)))
                .map(move |j| PremodelPair {
                    af_index: i,
                    f_index: j,
                })
        })
        .collect()
}

/// One interval with its model classification and compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalRecord {
    pub pair: PremodelPair,
    pub class: ModelClass,
    pub compatible: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModelCounts {
    pub premodel: usize,
    pub composition_closed: usize,
    pub quillen: usize,
    pub weak_equivalence_types: usize,
    pub compatible: usize,
}

#[derive(Debug, Clone)]
pub struct IntervalAnalysis {
    pub records: Vec<IntervalRecord>,
    pub counts: ModelCounts,
}

const RECORD_BYTES: usize = std::mem::size_of::<IntervalRecord>();

/// Classifies every interval of an ALL store. Rows of the interval matrix
/// are split across `config.workers` threads; counts do not depend on the
/// worker count.
pub fn analyze_intervals(
    store: &EnumerationStore,
    lattice: &SubgroupLattice,
    config: &EnumerateConfig,
) -> Result<IntervalAnalysis> {
    if config.workers == 0 {
        return Err(Error::Precondition(
            "worker count must be at least 1".into(),
        ));
    }
    let n = store.len();
    let run = || {
        let relations: Vec<SystemRelations> = (0..n)
            .into_par_iter()
            .map(|i| SystemRelations::new(store.get(i), lattice))
            .collect();
        let rows: Vec<(Vec<IntervalRecord>, FxHashSet<Vec<u64>>)> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut records = Vec::new();
                let mut types = FxHashSet::default();
                let mut w = NodeMatrix::new(lattice.node_count());
                let small = store.get(i);
                for j in 0..n {
                    if !small.is_subset(store.get(j)) {
                        continue;
                    }
                    fill_weak_equivalences(&relations[i], &relations[j], &mut w);
                    let class = classify_relation(&w, lattice);
                    if class == ModelClass::Quillen && !types.contains(w.as_words()) {
                        types.insert(w.as_words().to_vec());
                    }
                    records.push(IntervalRecord {
                        pair: PremodelPair {
                            af_index: i,
                            f_index: j,
                        },
                        class,
                        compatible: compatible(&relations[i], &relations[j], lattice),
                    });
                }
                (records, types)
            })
            .collect();
        rows
    };
    let rows = if config.workers > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?
            .install(run)
    } else {
        // A one-thread pool keeps the same code path without spawning more.
        rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?
            .install(run)
    };

    let total: usize = rows.iter().map(|(r, _)| r.len()).sum();
    if total * RECORD_BYTES > config.memory_cap {
        return Err(Error::MemoryCap {
            cap: config.memory_cap,
            layer: 0,
            systems: total,
        });
    }
    let mut records = Vec::with_capacity(total);
    let mut types: FxHashSet<Vec<u64>> = FxHashSet::default();
    for (r, t) in rows {
        records.extend(r);
        types.extend(t);
    }
    let counts = ModelCounts {
        premodel: records.len(),
        composition_closed: records
            .iter()
            .filter(|r| r.class >= ModelClass::CompositionClosed)
            .count(),
        quillen: records
            .iter()
            .filter(|r| r.class == ModelClass::Quillen)
            .count(),
        weak_equivalence_types: types.len(),
        compatible: records.iter().filter(|r| r.compatible).count(),
    };
    Ok(IntervalAnalysis { records, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate;
    use crate::lattice::fixtures;

    fn set(l: &SubgroupLattice, pairs: &[(usize, usize)]) -> EdgeSet {
        l.edge_set_from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn extreme_weak_equivalences() {
        let l = fixtures::chain(3);
        let all = 6; // 3 identities + 3 strict pairs
        let w = weak_equivalences(&l.empty_set(), &l.empty_set(), &l).unwrap();
        assert_eq!(w.count(), all);
        let w = weak_equivalences(&l.complete_set(), &l.complete_set(), &l).unwrap();
        assert_eq!(w.count(), all);
        assert_eq!(
            model_check(&l.empty_set(), &l.empty_set(), &l).unwrap(),
            ModelClass::Quillen
        );
    }

    #[test]
    fn acyclic_fibration_only() {
        let l = fixtures::chain(3);
        let w = weak_equivalences(&set(&l, &[(0, 1)]), &l.complete_set(), &l).unwrap();
        let strict: Vec<_> = w.pairs().filter(|(a, b)| a != b).collect();
        assert_eq!(strict, vec![(0, 1)]);
    }

    #[test]
    fn precondition_is_reported() {
        let l = fixtures::chain(3);
        let err = weak_equivalences(&l.complete_set(), &l.empty_set(), &l).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        assert!(is_compatible(&l.complete_set(), &l.empty_set(), &l).is_err());
    }

    #[test]
    fn compatibility_extremes() {
        let l = fixtures::pentagon();
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        for t in store.systems() {
            assert!(is_compatible(&l.empty_set(), t, &l).unwrap());
        }
        assert!(is_compatible(&l.complete_set(), &l.complete_set(), &l).unwrap());
    }

    #[test]
    fn chain_counts() {
        let l = fixtures::chain(3);
        let store = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        assert_eq!(intervals(&store).len(), 13);
        let a = analyze_intervals(&store, &l, &EnumerateConfig::default()).unwrap();
        assert_eq!(a.counts.premodel, 13);
        assert_eq!(a.counts.composition_closed, 12);
        assert_eq!(a.counts.quillen, 10);
        assert_eq!(a.counts.weak_equivalence_types, 4);
        assert_eq!(a.counts.compatible, 12);
    }
}
