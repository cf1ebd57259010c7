//! The subgroup-lattice data model.
//!
//! A [`SubgroupLattice`] is immutable once built. Every constructor goes
//! through [`SubgroupLattice::from_parts`], which checks the order, the
//! meet/join tables and the conjugation data before handing out a value.

mod file;
mod quotient;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use file::{load_lattice, GroupDataFile, NodeEntry};
pub use quotient::QuotientPoset;

use crate::bitset::{words_for, EdgeSet, NodeMatrix};
use crate::error::{Error, Result};

/// Whether a lattice came from a group (with a conjugation action) or is an
/// abstract finite lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Group,
    Lattice,
}

/// Optional presentation data carried by data files and used by the TikZ
/// emitter.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decorations {
    /// One TikZ label per conjugacy class.
    pub pretty_names: Option<Vec<String>>,
    /// One TikZ coordinate per conjugacy class.
    pub vertex_layout: Option<Vec<String>>,
    /// Path options keyed by a pair of class indices.
    pub edge_options: BTreeMap<(usize, usize), String>,
}

/// Raw ingredients of a lattice, before validation.
#[derive(Debug, Clone)]
pub struct LatticeParts {
    pub name: String,
    pub kind: LatticeKind,
    pub node_names: Vec<String>,
    pub node_orders: Vec<u64>,
    /// Strict order pairs `(i, j)` with `i < j` in the lattice.
    pub leq: Vec<(usize, usize)>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub node_classes: Vec<Vec<usize>>,
    /// Orbits of strict pairs under conjugation.
    pub edge_orbits: Vec<Vec<(usize, usize)>>,
    pub decorations: Decorations,
}

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    name: String,
    kind: LatticeKind,
    node_names: Vec<String>,
    node_orders: Vec<u64>,
    /// Non-strict order: `le.get(i, j)` iff node i is below or equal to j.
    le: NodeMatrix,
    meet: Vec<u32>,
    join: Vec<u32>,
    edges: Vec<(usize, usize)>,
    edge_index: Vec<u32>,
    node_classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    edge_orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    strictly_below: Vec<Vec<usize>>,
    strictly_above: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    decorations: Decorations,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}

impl SubgroupLattice {
    pub fn from_parts(parts: LatticeParts) -> Result<Self> {
        let n = parts.node_names.len();
        if n == 0 {
            return invalid("lattice has no nodes");
        }
        if parts.node_orders.len() != n {
            return invalid(format!(
                "node_orders has length {}, expected {n}",
                parts.node_orders.len()
            ));
        }

        let mut le = NodeMatrix::identity(n);
        for &(i, j) in &parts.leq {
            if i >= n || j >= n {
                return invalid(format!("leq pair ({i},{j}) out of range"));
            }
            if i == j {
                return invalid(format!("leq is not irreflexive at ({i},{i})"));
            }
            le.set(i, j);
        }
        for i in 0..n {
            for j in le.row_iter(i) {
                if i != j && le.get(j, i) {
                    return invalid(format!("leq is not antisymmetric at ({i},{j})"));
                }
            }
        }
        for i in 0..n {
            for j in le.row_iter(i) {
                for k in le.row_iter(j) {
                    if !le.get(i, k) {
                        return invalid(format!(
                            "leq is not transitive: ({i},{j}) and ({j},{k}) but not ({i},{k})"
                        ));
                    }
                }
            }
        }

        let bottoms: Vec<usize> = (0..n).filter(|&b| (0..n).all(|j| le.get(b, j))).collect();
        let tops: Vec<usize> = (0..n).filter(|&t| (0..n).all(|i| le.get(i, t))).collect();
        let (bottom, top) = match (bottoms.as_slice(), tops.as_slice()) {
            ([b], [t]) => (*b, *t),
            ([], _) => return invalid("no unique bottom element"),
            (_, _) => return invalid("no unique top element"),
        };

        let meet = flatten_table(&parts.meet, n, "meet")?;
        let join = flatten_table(&parts.join, n, "join")?;
        for i in 0..n {
            for j in 0..n {
                let m = meet[i * n + j] as usize;
                let lower_ok = le.get(m, i) && le.get(m, j);
                let greatest = (0..n).all(|x| !(le.get(x, i) && le.get(x, j)) || le.get(x, m));
                if !lower_ok || !greatest {
                    return invalid(format!("meet({i},{j}) inconsistent with leq"));
                }
                let u = join[i * n + j] as usize;
                let upper_ok = le.get(i, u) && le.get(j, u);
                let least = (0..n).all(|x| !(le.get(i, x) && le.get(j, x)) || le.get(u, x));
                if !upper_ok || !least {
                    return invalid(format!("join({i},{j}) inconsistent with leq"));
                }
            }
        }

        let mut edges: Vec<(usize, usize)> = le.pairs().filter(|(i, j)| i != j).collect();
        edges.sort_unstable();
        let mut edge_index = vec![NO_EDGE; n * n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            edge_index[i * n + j] = k as u32;
        }

        let mut class_of = vec![usize::MAX; n];
        for (c, class) in parts.node_classes.iter().enumerate() {
            if class.is_empty() {
                return invalid(format!("node class {c} is empty"));
            }
            for &v in class {
                if v >= n {
                    return invalid(format!("node class {c} contains out-of-range node {v}"));
                }
                if class_of[v] != usize::MAX {
                    return invalid(format!("node {v} appears in more than one class"));
                }
                class_of[v] = c;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return invalid(format!("node {v} is in no class"));
        }

        let mut orbit_of = vec![usize::MAX; edges.len()];
        let mut edge_orbits = Vec::with_capacity(parts.edge_orbits.len());
        for (o, orbit) in parts.edge_orbits.iter().enumerate() {
            if orbit.is_empty() {
                return invalid(format!("edge orbit {o} is empty"));
            }
            let mut members = Vec::with_capacity(orbit.len());
            for &(a, b) in orbit {
                let e = if a < n && b < n {
                    edge_index[a * n + b]
                } else {
                    NO_EDGE
                };
                if e == NO_EDGE {
                    return invalid(format!(
                        "edge orbit {o} contains ({a},{b}), not a strict pair"
                    ));
                }
                let e = e as usize;
                if orbit_of[e] != usize::MAX {
                    return invalid(format!("edge ({a},{b}) appears in more than one orbit"));
                }
                orbit_of[e] = o;
                members.push(e);
            }
            let (a0, b0) = edges[members[0]];
            for &e in &members[1..] {
                let (a, b) = edges[e];
                if class_of[a] != class_of[a0] || class_of[b] != class_of[b0] {
                    return invalid(format!(
                        "edge orbit {o} mixes class pairs: ({a0},{b0}) and ({a},{b})"
                    ));
                }
                if parts.node_orders[a] != parts.node_orders[a0]
                    || parts.node_orders[b] != parts.node_orders[b0]
                {
                    return invalid(format!(
                        "edge orbit {o} mixes subgroup orders: ({a0},{b0}) and ({a},{b})"
                    ));
                }
            }
            members.sort_unstable();
            edge_orbits.push(members);
        }
        if let Some(e) = orbit_of.iter().position(|&o| o == usize::MAX) {
            let (a, b) = edges[e];
            return invalid(format!("edge ({a},{b}) is in no orbit"));
        }

        let singleton_classes = parts.node_classes.iter().all(|c| c.len() == 1);
        let singleton_orbits = edge_orbits.iter().all(|o| o.len() == 1);
        if singleton_classes != singleton_orbits {
            return invalid(
                "node classes and edge orbits disagree on whether the action is trivial",
            );
        }
        if parts.kind == LatticeKind::Lattice && !singleton_classes {
            return invalid("abstract lattice declares a non-trivial conjugation action");
        }

        let class_count = parts.node_classes.len();
        let deco = &parts.decorations;
        if let Some(p) = &deco.pretty_names {
            if p.len() != class_count {
                return invalid(format!(
                    "pretty_names has length {}, expected {class_count} (one per class)",
                    p.len()
                ));
            }
        }
        if let Some(v) = &deco.vertex_layout {
            if v.len() != class_count {
                return invalid(format!(
                    "vertex_layout has length {}, expected {class_count} (one per class)",
                    v.len()
                ));
            }
        }
        for &(i, j) in deco.edge_options.keys() {
            if i >= class_count || j >= class_count {
                return invalid(format!("edge_options key {i},{j} out of range"));
            }
        }

        let strictly_below = (0..n)
            .map(|b| (0..n).filter(|&l| l != b && le.get(l, b)).collect())
            .collect();
        let strictly_above = (0..n)
            .map(|a| (0..n).filter(|&u| u != a && le.get(a, u)).collect())
            .collect();

        Ok(SubgroupLattice {
            name: parts.name,
            kind: parts.kind,
            node_names: parts.node_names,
            node_orders: parts.node_orders,
            le,
            meet,
            join,
            edges,
            edge_index,
            node_classes: parts.node_classes,
            class_of,
            edge_orbits,
            orbit_of,
            strictly_below,
            strictly_above,
            bottom,
            top,
            decorations: parts.decorations,
        })
    }

    /// Builds a lattice with a trivial action from a strict order, computing
    /// meets and joins. Fails if the order is not a lattice.
    pub fn from_order(
        name: impl Into<String>,
        node_names: Vec<String>,
        node_orders: Vec<u64>,
        leq: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = node_names.len();
        let mut le = NodeMatrix::identity(n);
        for &(i, j) in &leq {
            if i >= n || j >= n {
                return invalid(format!("leq pair ({i},{j}) out of range"));
            }
            le.set(i, j);
        }
        let meet = bound_table(&le, n, true)?;
        let join = bound_table(&le, n, false)?;
        let edge_orbits = leq.iter().map(|&p| vec![p]).collect();
        Self::from_parts(LatticeParts {
            name: name.into(),
            kind: LatticeKind::Lattice,
            node_names,
            node_orders,
            leq,
            meet,
            join,
            node_classes: (0..n).map(|i| vec![i]).collect(),
            edge_orbits,
            decorations: Decorations::default(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.node_names.len()
    }

    pub fn node_names(&self) -> &[String] {
        &self.node_names
    }

    pub fn node_orders(&self) -> &[u64] {
        &self.node_orders
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Non-strict order test.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le.get(i, j)
    }

    /// Row `i` is the up-set of `i` (non-strict).
    pub fn le_matrix(&self) -> &NodeMatrix {
        &self.le
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.node_count() + j] as usize
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.node_count() + j] as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All strict comparable pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    #[inline]
    pub fn edge_index(&self, lower: usize, upper: usize) -> Option<usize> {
        let n = self.node_count();
        if lower >= n || upper >= n {
            return None;
        }
        match self.edge_index[lower * n + upper] {
            NO_EDGE => None,
            e => Some(e as usize),
        }
    }

    pub fn node_classes(&self) -> &[Vec<usize>] {
        &self.node_classes
    }

    pub fn class_of(&self, node: usize) -> usize {
        self.class_of[node]
    }

    pub fn edge_orbits(&self) -> &[Vec<usize>] {
        &self.edge_orbits
    }

    pub fn orbit_of(&self, edge: usize) -> usize {
        self.orbit_of[edge]
    }

    pub fn strictly_below(&self, node: usize) -> &[usize] {
        &self.strictly_below[node]
    }

    pub fn strictly_above(&self, node: usize) -> &[usize] {
        &self.strictly_above[node]
    }

    pub fn has_trivial_action(&self) -> bool {
        self.node_classes.iter().all(|c| c.len() == 1)
    }

    pub fn decorations(&self) -> &Decorations {
        &self.decorations
    }

    pub fn set_decorations(&mut self, decorations: Decorations) -> Result<()> {
        let mut parts = self.to_parts();
        parts.decorations = decorations;
        *self = Self::from_parts(parts)?;
        Ok(())
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::empty(self.edge_count())
    }

    pub fn complete_set(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub fn edge_words(&self) -> usize {
        words_for(self.edge_count())
    }

    /// Builds an edge set from `(lower, upper)` node pairs, rejecting pairs
    /// that are not strict comparabilities. Identity pairs are skipped.
    pub fn edge_set_from_pairs<I>(&self, pairs: I) -> Result<EdgeSet>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = self.empty_set();
        for (a, b) in pairs {
            if a == b && a < self.node_count() {
                continue;
            }
            let e = self.edge_index(a, b).ok_or(Error::InvalidEdge(a, b))?;
            s.insert(e);
        }
        Ok(s)
    }

    pub fn pairs_of(&self, set: &EdgeSet) -> Vec<(usize, usize)> {
        set.iter().map(|e| self.edges[e]).collect()
    }

    /// Cover relations of the order, in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                !self.strictly_below[b]
                    .iter()
                    .any(|&m| m != a && self.lt(a, m))
            })
            .collect()
    }

    /// Renders `(a,b)` pairs as `{(a,b),…}`.
    pub fn format_set(&self, set: &EdgeSet) -> String {
        format_pairs(&self.pairs_of(set))
    }

    /// The order-reversed lattice, with the map from edges of `self` to
    /// edges of the result.
    pub fn opposite(&self) -> OppositeLattice {
        let n = self.node_count();
        let leq = self.edges.iter().map(|&(a, b)| (b, a)).collect();
        let table = |t: &[u32]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|i| (0..n).map(|j| t[i * n + j] as usize).collect())
                .collect()
        };
        let edge_orbits = self
            .edge_orbits
            .iter()
            .map(|o| {
                o.iter()
                    .map(|&e| (self.edges[e].1, self.edges[e].0))
                    .collect()
            })
            .collect();
        let lattice = Self::from_parts(LatticeParts {
            name: format!("{}^op", self.name),
            kind: self.kind,
            node_names: self.node_names.clone(),
            node_orders: self.node_orders.clone(),
            leq,
            meet: table(&self.join),
            join: table(&self.meet),
            node_classes: self.node_classes.clone(),
            edge_orbits,
            decorations: Decorations::default(),
        })
        .expect("opposite of a valid lattice is valid");
        let edge_map = self
            .edges
            .iter()
            .map(|&(a, b)| lattice.edge_index(b, a).expect("reversed edge exists"))
            .collect();
        OppositeLattice { lattice, edge_map }
    }

    /// If the lattice is a divisor lattice with trivial action (the subgroup
    /// lattice of a cyclic group), returns the anti-automorphism sending the
    /// node of order `d` to the node of order `|G| / d`.
    pub fn divisor_duality(&self) -> Option<Vec<usize>> {
        if !self.has_trivial_action() {
            return None;
        }
        let total = self.node_orders[self.top];
        let n = self.node_count();
        let mut by_order = BTreeMap::new();
        for (i, &o) in self.node_orders.iter().enumerate() {
            if o == 0 || !total.is_multiple_of(o) || by_order.insert(o, i).is_some() {
                return None;
            }
        }
        let divisors = (1..=total).filter(|d| total.is_multiple_of(*d)).count();
        if divisors != n {
            return None;
        }
        for i in 0..n {
            for j in 0..n {
                let divides = self.node_orders[j].is_multiple_of(self.node_orders[i]);
                if divides != self.le(i, j) {
                    return None;
                }
            }
        }
        Some(
            self.node_orders
                .iter()
                .map(|&o| by_order[&(total / o)])
                .collect(),
        )
    }

    pub fn to_parts(&self) -> LatticeParts {
        let n = self.node_count();
        let table = |t: &[u32]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|i| (0..n).map(|j| t[i * n + j] as usize).collect())
                .collect()
        };
        LatticeParts {
            name: self.name.clone(),
            kind: self.kind,
            node_names: self.node_names.clone(),
            node_orders: self.node_orders.clone(),
            leq: self.edges.clone(),
            meet: table(&self.meet),
            join: table(&self.join),
            node_classes: self.node_classes.clone(),
            edge_orbits: self
                .edge_orbits
                .iter()
                .map(|o| o.iter().map(|&e| self.edges[e]).collect())
                .collect(),
            decorations: self.decorations.clone(),
        }
    }
}

/// Structural equality: same names, orders, order relation and conjugation
/// data. Decorations are ignored.
impl PartialEq for SubgroupLattice {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.kind == other.kind
            && self.node_names == other.node_names
            && self.node_orders == other.node_orders
            && self.edges == other.edges
            && self.meet == other.meet
            && self.join == other.join
            && self.node_classes == other.node_classes
            && self.edge_orbits == other.edge_orbits
    }
}

#[derive(Debug, Clone)]
pub struct OppositeLattice {
    pub lattice: SubgroupLattice,
    /// `edge_map[e]` is the index in `lattice` of the reversal of edge `e`.
    pub edge_map: Vec<usize>,
}

pub fn format_pairs(pairs: &[(usize, usize)]) -> String {
    let mut s = String::from("{");
    for (k, (a, b)) in pairs.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "({a},{b})");
    }
    s.push('}');
    s
}

fn flatten_table(t: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<u32>> {
    if t.len() != n || t.iter().any(|r| r.len() != n) {
        return invalid(format!("{what} table is not {n}x{n}"));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in t.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return invalid(format!("{what}({i},{j}) = {v} out of range"));
            }
            out.push(v as u32);
        }
    }
    Ok(out)
}

fn bound_table(le: &NodeMatrix, n: usize, lower: bool) -> Result<Vec<Vec<usize>>> {
    let rel = |a: usize, b: usize| if lower { le.get(a, b) } else { le.get(b, a) };
    let mut t = vec![vec![0; n]; n];
    for (i, row) in t.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let common: Vec<usize> = (0..n).filter(|&x| rel(x, i) && rel(x, j)).collect();
            let best: Vec<usize> = common
                .iter()
                .copied()
                .filter(|&m| common.iter().all(|&x| rel(x, m)))
                .collect();
            match best.as_slice() {
                [m] => *cell = *m,
                _ => {
                    let what = if lower { "meet" } else { "join" };
                    return invalid(format!("order is not a lattice: no {what} of {i} and {j}"));
                }
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn chain(len: usize) -> SubgroupLattice {
        let names = (0..len).map(|i| format!("x{i}")).collect();
        let orders = (0..len).map(|i| 1u64 << i).collect();
        let leq = (0..len)
            .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
            .collect();
        SubgroupLattice::from_order(format!("chain{len}"), names, orders, leq).unwrap()
    }

    /// The pentagon N5: 0 < 1 < 3 < 4 and 0 < 2 < 4.
    pub fn pentagon() -> SubgroupLattice {
        let names = ["0", "a", "b", "c", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let leq = vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
            (2, 4),
            (3, 4),
        ];
        SubgroupLattice::from_order("Pentagon", names, vec![0, 1, 1, 2, 3], leq).unwrap()
    }

    pub fn diamond() -> SubgroupLattice {
        let names = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
        let leq = vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
        SubgroupLattice::from_order("Diamond", names, vec![0, 1, 1, 2], leq).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn single_node_has_no_edges() {
        let l = SubgroupLattice::from_order("1", vec!["1".into()], vec![1], vec![]).unwrap();
        assert_eq!(l.edge_count(), 0);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 0);
    }

    #[test]
    fn pentagon_counts() {
        let p = pentagon();
        assert_eq!(p.node_count(), 5);
        assert_eq!(p.edge_count(), 8);
        assert!(p.edge_orbits().iter().all(|o| o.len() == 1));
        assert_eq!(p.meet(2, 3), 0);
        assert_eq!(p.join(1, 2), 4);
        assert_eq!(p.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn opposite_is_an_involution() {
        for l in [chain(3), pentagon(), diamond()] {
            let op = l.opposite();
            let back = op.lattice.opposite().lattice;
            assert_eq!(back.edges(), l.edges());
            assert_eq!(op.lattice.bottom(), l.top());
            for (e, &f) in op.edge_map.iter().enumerate() {
                let (a, b) = l.edge(e);
                assert_eq!(op.lattice.edge(f), (b, a));
            }
        }
    }

    #[test]
    fn opposite_pentagon_swaps_sides() {
        let op = pentagon().opposite().lattice;
        // The long side 4 > 3 > 1 > 0 stays a 3-step chain read downwards,
        // and the short side 4 > 2 > 0 stays a 2-step chain.
        assert_eq!(op.bottom(), 4);
        assert_eq!(op.top(), 0);
        assert!(op.lt(3, 1) && op.lt(4, 3) && op.lt(4, 2));
        assert_eq!(op.covers().len(), 5);
        assert_eq!(op.meet(1, 2), 4);
    }

    #[test]
    fn rejects_non_lattice_order() {
        // Two incomparable middle elements with two incomparable tops above both.
        let names = (0..5).map(|i| i.to_string()).collect();
        let leq = vec![
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (0, 3),
            (0, 4),
        ];
        let err = SubgroupLattice::from_order("bad", names, vec![1; 5], leq).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn rejects_bad_meet_table() {
        let mut parts = diamond().to_parts();
        parts.meet[1][2] = 3;
        let err = SubgroupLattice::from_parts(parts).unwrap_err();
        assert_eq!(
            err.to_string(),
            "invalid lattice: meet(1,2) inconsistent with leq"
        );
    }

    #[test]
    fn rejects_non_transitive_order() {
        let mut parts = chain(3).to_parts();
        parts.leq.retain(|&p| p != (0, 2));
        parts.edge_orbits.retain(|o| o[0] != (0, 2));
        let err = SubgroupLattice::from_parts(parts).unwrap_err();
        assert!(err.to_string().contains("not transitive"));
    }

    #[test]
    fn rejects_orbit_mismatch() {
        let mut parts = diamond().to_parts();
        parts.kind = LatticeKind::Group;
        parts.node_classes = vec![vec![0], vec![1, 2], vec![3]];
        // orbit joining (0,1) with (1,3) mixes class pairs
        parts.edge_orbits = vec![vec![(0, 1), (1, 3)], vec![(0, 2), (2, 3)], vec![(0, 3)]];
        assert!(SubgroupLattice::from_parts(parts).is_err());
    }

    #[test]
    fn divisor_duality_on_chains() {
        let l = chain(3);
        // orders 1, 2, 4
        assert_eq!(l.divisor_duality(), Some(vec![2, 1, 0]));
        assert_eq!(pentagon().divisor_duality(), None);
    }
}
