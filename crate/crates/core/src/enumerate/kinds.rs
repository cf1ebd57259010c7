//! Generation kinds: each pairs a closure operator with a rule for which
//! edges may be added as generators. Kinds are registered by name and
//! chosen at runtime.

use crate::bitset::EdgeSet;
use crate::error::{Error, Result};
use crate::lattice::{QuotientPoset, SubgroupLattice};
use crate::rubin::{self, ClosureMode, PosetCloser};

/// A closure operator over a fixed universe of edges.
pub trait ClosureOperator: Send + Sync {
    /// Number of edges in the universe.
    fn universe(&self) -> usize;

    /// Closes `set` in place.
    fn close(&self, set: &mut EdgeSet);

    /// Adds `edge` to the closed set `set` and closes again.
    fn extend(&self, set: &mut EdgeSet, edge: usize);

    /// Whether `edge` may be used as a generator in the layered search.
    fn is_generator(&self, edge: usize) -> bool;
}

/// A named way of generating closed sets on a lattice.
pub trait GenerationKind: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn operator(&self, lattice: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>>;
}

/// Rubin closure on a lattice, optionally restricting the generators.
pub struct RubinOperator {
    lattice: SubgroupLattice,
    mode: ClosureMode,
    generators: Option<Vec<bool>>,
}

impl RubinOperator {
    pub fn new(lattice: SubgroupLattice, mode: ClosureMode) -> Self {
        RubinOperator {
            lattice,
            mode,
            generators: None,
        }
    }

    /// Only edges whose upper node is the top may generate.
    pub fn into_top(lattice: SubgroupLattice, mode: ClosureMode) -> Self {
        let top = lattice.top();
        let generators = lattice.edges().iter().map(|&(_, b)| b == top).collect();
        RubinOperator {
            lattice,
            mode,
            generators: Some(generators),
        }
    }
}

impl ClosureOperator for RubinOperator {
    fn universe(&self) -> usize {
        self.lattice.edge_count()
    }

    fn close(&self, set: &mut EdgeSet) {
        rubin::close_in_place(&self.lattice, set, self.mode);
    }

    fn extend(&self, set: &mut EdgeSet, edge: usize) {
        rubin::extend_closed(&self.lattice, set, &[edge], self.mode);
    }

    fn is_generator(&self, edge: usize) -> bool {
        self.generators.as_ref().is_none_or(|g| g[edge])
    }
}

impl ClosureOperator for PosetCloser {
    fn universe(&self) -> usize {
        self.poset().edge_count()
    }

    fn close(&self, set: &mut EdgeSet) {
        PosetCloser::close(self, set);
    }

    fn extend(&self, set: &mut EdgeSet, edge: usize) {
        self.extend_closed(set, &[edge]);
    }

    fn is_generator(&self, _edge: usize) -> bool {
        true
    }
}

pub struct AllTransfers;

impl GenerationKind for AllTransfers {
    fn name(&self) -> &'static str {
        "all"
    }
    fn description(&self) -> &'static str {
        "all transfer systems"
    }
    fn operator(&self, lattice: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>> {
        Ok(Box::new(RubinOperator::new(
            lattice.clone(),
            ClosureMode::Full,
        )))
    }
}

pub struct Cosaturated;

impl GenerationKind for Cosaturated {
    fn name(&self) -> &'static str {
        "cosaturated"
    }
    fn description(&self) -> &'static str {
        "transfer systems generated by pairs into the whole group"
    }
    fn operator(&self, lattice: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>> {
        Ok(Box::new(RubinOperator::into_top(
            lattice.clone(),
            ClosureMode::Full,
        )))
    }
}

/// Cosaturated systems on the opposite lattice, which are in bijection with
/// the saturated systems on the lattice itself.
pub struct SaturatedOpposite;

impl GenerationKind for SaturatedOpposite {
    fn name(&self) -> &'static str {
        "saturated"
    }
    fn description(&self) -> &'static str {
        "cosaturated transfer systems on the opposite lattice (counts saturated systems)"
    }
    fn operator(&self, lattice: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>> {
        let op = lattice.opposite().lattice;
        Ok(Box::new(RubinOperator::into_top(op, ClosureMode::Full)))
    }
}

pub struct Underlying;

impl GenerationKind for Underlying {
    fn name(&self) -> &'static str {
        "underlying"
    }
    fn description(&self) -> &'static str {
        "weak factorization systems on the underlying lattice (no conjugation)"
    }
    fn operator(&self, lattice: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>> {
        Ok(Box::new(RubinOperator::new(
            lattice.clone(),
            ClosureMode::Underlying,
        )))
    }
}

pub struct Conjugacy;

impl GenerationKind for Conjugacy {
    fn name(&self) -> &'static str {
        "conjugacy"
    }
    fn description(&self) -> &'static str {
        "transfer systems on the poset of conjugacy classes of subgroups"
    }
    fn operator(&self, lattice: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>> {
        Ok(Box::new(PosetCloser::new(QuotientPoset::of(lattice)?)))
    }
}

/// Name-indexed collection of generation kinds.
pub struct KindRegistry {
    kinds: Vec<Box<dyn GenerationKind>>,
}

impl Default for KindRegistry {
    fn default() -> Self {
        let mut r = KindRegistry { kinds: Vec::new() };
        r.register(Box::new(AllTransfers));
        r.register(Box::new(Cosaturated));
        r.register(Box::new(SaturatedOpposite));
        r.register(Box::new(Underlying));
        r.register(Box::new(Conjugacy));
        r
    }
}

impl KindRegistry {
    pub fn empty() -> Self {
        KindRegistry { kinds: Vec::new() }
    }

    /// Adds a kind, replacing any kind already registered under its name.
    pub fn register(&mut self, kind: Box<dyn GenerationKind>) {
        self.kinds.retain(|k| k.name() != kind.name());
        self.kinds.push(kind);
    }

    pub fn get(&self, name: &str) -> Result<&dyn GenerationKind> {
        self.kinds
            .iter()
            .find(|k| k.name() == name)
            .map(|k| k.as_ref())
            .ok_or_else(|| Error::UnknownKind(name.to_string(), self.names().join(", ")))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.kinds.iter().map(|k| k.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn GenerationKind> {
        self.kinds.iter().map(|k| k.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        let r = KindRegistry::default();
        assert_eq!(
            r.names(),
            vec!["all", "cosaturated", "saturated", "underlying", "conjugacy"]
        );
        assert!(r.get("all").is_ok());
        let err = r.get("bogus").err().unwrap();
        assert!(err.to_string().contains("known: all, cosaturated"));
    }

    #[test]
    fn register_replaces_by_name() {
        struct Custom;
        impl GenerationKind for Custom {
            fn name(&self) -> &'static str {
                "all"
            }
            fn description(&self) -> &'static str {
                "custom"
            }
            fn operator(&self, l: &SubgroupLattice) -> Result<Box<dyn ClosureOperator>> {
                AllTransfers.operator(l)
            }
        }
        let mut r = KindRegistry::default();
        r.register(Box::new(Custom));
        assert_eq!(r.get("all").unwrap().description(), "custom");
        assert_eq!(r.names().len(), 5);
    }
}
