//! Layered enumeration of all closed sets of a closure operator.
//!
//! Layer 0 is the closure of the empty set. Layer `k + 1` holds every
//! closure of `T ∪ {e}` for `T` in layer `k` and `e` an admissible generator
//! not in `T`, minus everything already found. A system's layer is the size
//! of its minimal basis, so the number of layers gives the complexity.

mod kinds;

use std::hash::BuildHasherDefault;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use indexmap::IndexSet;
use rayon::prelude::*;
use rustc_hash::FxHasher;

pub use kinds::{
    AllTransfers, ClosureOperator, Conjugacy, Cosaturated, GenerationKind, KindRegistry,
    RubinOperator, SaturatedOpposite, Underlying,
};

use crate::bitset::EdgeSet;
use crate::classify;
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::rubin::{self, ClosureMode};

type FxIndexSet<T> = IndexSet<T, BuildHasherDefault<FxHasher>>;

/// 8 GiB.
pub const DEFAULT_MEMORY_CAP: usize = 8 << 30;

/// Per-entry bookkeeping on top of the bitset words (box, hash slot, index).
const ENTRY_OVERHEAD: usize = 48;

/// Parents handed to a worker at once. Fixed so that output order never
/// depends on the worker count.
const CHUNK: usize = 32;

#[derive(Debug, Clone)]
pub struct EnumerateConfig {
    pub workers: usize,
    pub memory_cap: usize,
}

impl Default for EnumerateConfig {
    fn default() -> Self {
        EnumerateConfig {
            workers: 1,
            memory_cap: DEFAULT_MEMORY_CAP,
        }
    }
}

impl EnumerateConfig {
    pub fn with_workers(workers: usize) -> Self {
        EnumerateConfig {
            workers,
            ..Self::default()
        }
    }
}

/// Progress report emitted after each completed layer.
#[derive(Debug, Clone, Copy)]
pub struct LayerReport {
    pub layer: usize,
    pub layer_size: usize,
    pub total: usize,
}

/// All closed sets of one kind, deduplicated, in first-seen order and
/// grouped by layer.
#[derive(Debug, Clone)]
pub struct EnumerationStore {
    kind: String,
    systems: FxIndexSet<EdgeSet>,
    layer_starts: Vec<usize>,
}

impl EnumerationStore {
    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    pub fn get(&self, index: usize) -> &EdgeSet {
        &self.systems[index]
    }

    pub fn systems(&self) -> impl ExactSizeIterator<Item = &EdgeSet> + '_ {
        self.systems.iter()
    }

    pub fn index_of(&self, system: &EdgeSet) -> Option<usize> {
        self.systems.get_index_of(system)
    }

    pub fn contains(&self, system: &EdgeSet) -> bool {
        self.systems.contains(system)
    }

    /// Sizes of each layer; the first is always 1.
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layer_starts
            .windows(2)
            .map(|w| w[1] - w[0])
            .chain(std::iter::once(
                self.len() - self.layer_starts.last().unwrap(),
            ))
            .collect()
    }

    pub fn layer_count(&self) -> usize {
        self.layer_starts.len()
    }

    /// Layer of the system at `index`.
    pub fn layer_of_index(&self, index: usize) -> usize {
        self.layer_starts.partition_point(|&s| s <= index) - 1
    }

    pub fn layer_of(&self, system: &EdgeSet) -> Option<usize> {
        self.index_of(system).map(|i| self.layer_of_index(i))
    }

    pub fn layer(&self, layer: usize) -> impl Iterator<Item = &EdgeSet> + '_ {
        let start = self.layer_starts[layer];
        let end = self
            .layer_starts
            .get(layer + 1)
            .copied()
            .unwrap_or(self.len());
        (start..end).map(move |i| &self.systems[i])
    }

    /// Index of the last non-empty layer.
    pub fn complexity(&self) -> usize {
        self.layer_count() - 1
    }

    pub fn generation_statistics(&self) -> Vec<usize> {
        self.layer_sizes()
    }

    /// Systems whose minimal basis size equals the complexity.
    pub fn maximally_generated(&self) -> Vec<&EdgeSet> {
        self.layer(self.complexity()).collect()
    }
}

/// Enumerates the closed sets of the built-in kind `kind` on `lattice`.
pub fn enumerate(
    lattice: &SubgroupLattice,
    kind: &str,
    config: &EnumerateConfig,
) -> Result<EnumerationStore> {
    enumerate_with_progress(lattice, kind, config, &mut |_| {})
}

pub fn enumerate_with_progress(
    lattice: &SubgroupLattice,
    kind: &str,
    config: &EnumerateConfig,
    progress: &mut dyn FnMut(LayerReport),
) -> Result<EnumerationStore> {
    let registry = KindRegistry::default();
    let kind = registry.get(kind)?;
    let op = kind.operator(lattice)?;
    enumerate_closed_sets(op.as_ref(), kind.name(), config, progress)
}

/// Layered breadth-first search over the closed sets of `op`.
pub fn enumerate_closed_sets(
    op: &dyn ClosureOperator,
    kind: &str,
    config: &EnumerateConfig,
    progress: &mut dyn FnMut(LayerReport),
) -> Result<EnumerationStore> {
    if config.workers == 0 {
        return Err(Error::Precondition(
            "worker count must be at least 1".into(),
        ));
    }
    let pool = if config.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()
                .map_err(|e| Error::ThreadPool(e.to_string()))?,
        )
    } else {
        None
    };

    let universe = op.universe();
    let entry_bytes = EdgeSet::empty(universe).heap_bytes() + ENTRY_OVERHEAD;
    let generators: Vec<usize> = (0..universe).filter(|&e| op.is_generator(e)).collect();

    let mut bottom = EdgeSet::empty(universe);
    op.close(&mut bottom);
    let mut systems = FxIndexSet::default();
    systems.insert(bottom);
    let mut layer_starts = vec![0];
    progress(LayerReport {
        layer: 0,
        layer_size: 1,
        total: 1,
    });

    loop {
        let start = *layer_starts.last().unwrap();
        let end = systems.len();
        let layer = layer_starts.len();
        let parents: Vec<usize> = (start..end).collect();

        // Children staged in chunk buffers count against the cap too.
        let budget = config.memory_cap / entry_bytes;
        let staged = AtomicUsize::new(0);
        let over = AtomicBool::new(false);
        let expand = |chunk: &[usize]| -> FxIndexSet<EdgeSet> {
            let mut found = FxIndexSet::default();
            if over.load(Ordering::Relaxed) {
                return found;
            }
            for &p in chunk {
                let parent = &systems[p];
                for &e in &generators {
                    if parent.contains(e) {
                        continue;
                    }
                    let mut child = parent.clone();
                    op.extend(&mut child, e);
                    if !systems.contains(&child)
                        && found.insert(child)
                        && end + staged.fetch_add(1, Ordering::Relaxed) + 1 > budget
                    {
                        over.store(true, Ordering::Relaxed);
                        return found;
                    }
                }
            }
            found
        };
        let chunks: Vec<FxIndexSet<EdgeSet>> = match &pool {
            Some(pool) => pool.install(|| parents.par_chunks(CHUNK).map(expand).collect()),
            None => parents.chunks(CHUNK).map(expand).collect(),
        };
        if over.load(Ordering::Relaxed) {
            return Err(Error::MemoryCap {
                cap: config.memory_cap,
                layer,
                systems: end + staged.load(Ordering::Relaxed),
            });
        }

        layer_starts.push(end);
        for child in chunks.into_iter().flatten() {
            systems.insert(child);
            if systems.len() * entry_bytes > config.memory_cap {
                return Err(Error::MemoryCap {
                    cap: config.memory_cap,
                    layer,
                    systems: systems.len(),
                });
            }
        }
        if systems.len() == end {
            layer_starts.pop();
            break;
        }
        progress(LayerReport {
            layer,
            layer_size: systems.len() - end,
            total: systems.len(),
        });
    }

    Ok(EnumerationStore {
        kind: kind.to_string(),
        systems,
        layer_starts,
    })
}

/// Size of a minimal basis of the complete transfer system, computed
/// without enumerating.
pub fn width(lattice: &SubgroupLattice) -> usize {
    rubin::find_basis(&lattice.complete_set(), lattice, ClosureMode::Full).len()
}

/// Saturated members of an ALL store, in store order.
pub fn saturated_filter<'a>(
    store: &'a EnumerationStore,
    lattice: &SubgroupLattice,
) -> Vec<&'a EdgeSet> {
    store
        .systems()
        .filter(|t| classify::is_saturated(t, lattice))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures;

    #[test]
    fn chain_three_has_five_systems() {
        let l = fixtures::chain(3);
        let s = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.layer_sizes(), vec![1, 3, 1]);
        assert_eq!(s.complexity(), 2);
        assert_eq!(s.maximally_generated().len(), 1);
        assert_eq!(s.layer_of(&l.complete_set()), Some(2));
    }

    #[test]
    fn single_node_lattice() {
        let l = fixtures::chain(1);
        let s = enumerate(&l, "all", &EnumerateConfig::default()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.layer_sizes(), vec![1]);
        assert_eq!(s.complexity(), 0);
        assert_eq!(width(&l), 0);
    }

    #[test]
    fn memory_cap_names_the_layer() {
        let l = fixtures::chain(4);
        let config = EnumerateConfig {
            workers: 1,
            memory_cap: 3 * (8 + ENTRY_OVERHEAD),
        };
        match enumerate(&l, "all", &config) {
            Err(Error::MemoryCap { layer: 1, .. }) => {}
            other => panic!("expected memory cap error in layer 1, got {other:?}"),
        }
    }

    #[test]
    fn zero_workers_rejected() {
        let l = fixtures::chain(2);
        assert!(enumerate(&l, "all", &EnumerateConfig::with_workers(0)).is_err());
    }

    #[test]
    fn unknown_kind() {
        let l = fixtures::chain(2);
        assert!(matches!(
            enumerate(&l, "nope", &EnumerateConfig::default()),
            Err(Error::UnknownKind(..))
        ));
    }
}
