//! The poset of conjugacy classes of subgroups.

use super::SubgroupLattice;
use crate::bitset::NodeMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct QuotientPoset {
    class_names: Vec<String>,
    le: NodeMatrix,
    edges: Vec<(usize, usize)>,
    edge_index: Vec<Option<usize>>,
    /// Maximal common lower bounds of each pair of classes, row-major.
    meet_candidates: Vec<Vec<usize>>,
    strictly_below: Vec<Vec<usize>>,
    is_lattice: bool,
    bottom: usize,
    top: usize,
}

impl QuotientPoset {
    /// Classes are ordered by "some member is below some member".
    pub fn of(lattice: &SubgroupLattice) -> Result<Self> {
        let classes = lattice.node_classes();
        let m = classes.len();
        let mut le = NodeMatrix::identity(m);
        for &(a, b) in lattice.edges() {
            le.set(lattice.class_of(a), lattice.class_of(b));
        }
        for i in 0..m {
            for j in le.row_iter(i) {
                if i != j && le.get(j, i) {
                    return Err(Error::Validation(format!(
                        "conjugacy classes {i} and {j} are mutually below each other"
                    )));
                }
            }
        }
        let names = classes
            .iter()
            .map(|c| lattice.node_names()[c[0]].clone())
            .collect();
        Ok(Self::from_order(
            names,
            le,
            lattice.class_of(lattice.bottom()),
            lattice.class_of(lattice.top()),
        ))
    }

    fn from_order(class_names: Vec<String>, le: NodeMatrix, bottom: usize, top: usize) -> Self {
        let m = class_names.len();
        let mut edges: Vec<(usize, usize)> = le.pairs().filter(|(i, j)| i != j).collect();
        edges.sort_unstable();
        let mut edge_index = vec![None; m * m];
        for (k, &(i, j)) in edges.iter().enumerate() {
            edge_index[i * m + j] = Some(k);
        }
        let mut meet_candidates = Vec::with_capacity(m * m);
        let mut is_lattice = true;
        for i in 0..m {
            for j in 0..m {
                let common: Vec<usize> = (0..m).filter(|&x| le.get(x, i) && le.get(x, j)).collect();
                let maximal: Vec<usize> = common
                    .iter()
                    .copied()
                    .filter(|&x| !common.iter().any(|&y| y != x && le.get(x, y)))
                    .collect();
                if maximal.len() != 1 {
                    is_lattice = false;
                }
                meet_candidates.push(maximal);
            }
        }
        let strictly_below = (0..m)
            .map(|b| (0..m).filter(|&l| l != b && le.get(l, b)).collect())
            .collect();
        QuotientPoset {
            class_names,
            le,
            edges,
            edge_index,
            meet_candidates,
            strictly_below,
            is_lattice,
            bottom,
            top,
        }
    }

    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le.get(i, j)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_index(&self, lower: usize, upper: usize) -> Option<usize> {
        let m = self.class_count();
        if lower >= m || upper >= m {
            return None;
        }
        self.edge_index[lower * m + upper]
    }

    /// Maximal common lower bounds of `i` and `j`.
    pub fn meet_candidates(&self, i: usize, j: usize) -> &[usize] {
        &self.meet_candidates[i * self.class_count() + j]
    }

    pub fn strictly_below(&self, class: usize) -> &[usize] {
        &self.strictly_below[class]
    }

    pub fn is_lattice(&self) -> bool {
        self.is_lattice
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }
}
