//! Sage `Poset` constructors for orders on an ALL store.

use std::fmt::Write;

use crate::bitset::{EdgeSet, NodeMatrix};
use crate::enumerate::{EnumerateConfig, EnumerationStore};
use crate::error::Result;
use crate::lattice::SubgroupLattice;
use crate::model::{analyze_intervals, ModelClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetKind {
    /// Inclusion of transfer systems.
    Transfer,
    /// `T <= T'` iff the pair is a composition-closed model structure.
    CompositionClosed,
    /// `T <= T'` iff the pair is a Quillen model structure.
    Quillen,
}

impl std::str::FromStr for PosetKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "transfer" => Ok(PosetKind::Transfer),
            "cclosed" => Ok(PosetKind::CompositionClosed),
            "quillen" => Ok(PosetKind::Quillen),
            other => Err(format!(
                "unknown poset `{other}` (known: transfer, cclosed, quillen)"
            )),
        }
    }
}

/// The relation `i <= j` over store indices selected by `kind`.
pub fn poset_relation(
    store: &EnumerationStore,
    lattice: &SubgroupLattice,
    kind: PosetKind,
    config: &EnumerateConfig,
) -> Result<NodeMatrix> {
    let n = store.len();
    let mut rel = NodeMatrix::new(n);
    match kind {
        PosetKind::Transfer => {
            let systems: Vec<&EdgeSet> = store.systems().collect();
            for i in 0..n {
                for j in 0..n {
                    if systems[i].is_subset(systems[j]) {
                        rel.set(i, j);
                    }
                }
            }
        }
        PosetKind::CompositionClosed | PosetKind::Quillen => {
            let least = match kind {
                PosetKind::Quillen => ModelClass::Quillen,
                _ => ModelClass::CompositionClosed,
            };
            for r in analyze_intervals(store, lattice, config)?.records {
                if r.class >= least {
                    rel.set(r.pair.af_index, r.pair.f_index);
                }
            }
        }
    }
    Ok(rel)
}

/// Reflexive and transitive; antisymmetry is inherited from inclusion.
fn is_preorder(rel: &NodeMatrix) -> bool {
    (0..rel.size()).all(|i| {
        rel.get(i, i)
            && rel
                .row_iter(i)
                .all(|k| rel.row(k).iter().zip(rel.row(i)).all(|(a, b)| a & !b == 0))
    })
}

/// Covering pairs of a partial order given as a reflexive relation.
pub fn covers(rel: &NodeMatrix) -> Vec<Vec<usize>> {
    let n = rel.size();
    (0..n)
        .map(|i| {
            let mut reach = vec![0u64; rel.stride()];
            // everything strictly above some strict upper bound of i
            for k in rel.row_iter(i).filter(|&k| k != i) {
                for (w, (r, a)) in reach.iter_mut().zip(rel.row(k)).enumerate() {
                    let own = if w == k / 64 { 1 << (k % 64) } else { 0 };
                    *r |= a & !own;
                }
            }
            rel.row_iter(i)
                .filter(|&j| j != i && reach[j / 64] & (1 << (j % 64)) == 0)
                .collect()
        })
        .collect()
}

/// `Poset({0:[1,],1:[],})` listing covers. A relation that is not a partial
/// order is emitted as its full pair list behind a warning comment.
pub fn format_poset(rel: &NodeMatrix) -> String {
    let mut s = String::new();
    if !is_preorder(rel) {
        s.push_str("# warning: relation is not a partial order; listing every related pair\n[");
        let pairs: Vec<String> = rel.pairs().map(|(i, j)| format!("({i},{j})")).collect();
        s.push_str(&pairs.join(","));
        s.push_str("]\n");
        return s;
    }
    s.push_str("Poset({");
    for (i, up) in covers(rel).iter().enumerate() {
        let _ = write!(s, "{i}:[");
        for j in up {
            let _ = write!(s, "{j},");
        }
        s.push_str("],");
    }
    s.push_str("})\n");
    s
}

pub fn sage_poset(
    store: &EnumerationStore,
    lattice: &SubgroupLattice,
    kind: PosetKind,
    config: &EnumerateConfig,
) -> Result<String> {
    Ok(format_poset(&poset_relation(store, lattice, kind, config)?))
}
