//! JSON interchange format for lattices.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Decorations, LatticeKind, LatticeParts, SubgroupLattice};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub name: String,
    pub order: u64,
}

/// On-disk form of a [`SubgroupLattice`]. Edge indices are never stored;
/// they are re-derived from the sorted `leq` pairs on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDataFile {
    pub name: String,
    pub kind: LatticeKind,
    pub nodes: Vec<NodeEntry>,
    pub leq: Vec<[usize; 2]>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub node_classes: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pretty_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_layout: Option<Vec<String>>,
    /// Keys are `"i,j"` with `i`, `j` class indices.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edge_options: BTreeMap<String, String>,
}

impl GroupDataFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("data file serializes")
    }

    pub fn into_lattice(self) -> Result<SubgroupLattice> {
        let mut edge_options = BTreeMap::new();
        for (key, value) in self.edge_options {
            let pair = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            match pair {
                Some(p) => {
                    edge_options.insert(p, value);
                }
                None => {
                    return Err(Error::Validation(format!(
                        "edge_options key `{key}` is not of the form \"i,j\""
                    )))
                }
            }
        }
        let (node_names, node_orders) = self.nodes.into_iter().map(|n| (n.name, n.order)).unzip();
        SubgroupLattice::from_parts(LatticeParts {
            name: self.name,
            kind: self.kind,
            node_names,
            node_orders,
            leq: self.leq.into_iter().map(|[a, b]| (a, b)).collect(),
            meet: self.meet,
            join: self.join,
            node_classes: self.node_classes,
            edge_orbits: self
                .edge_orbits
                .into_iter()
                .map(|o| o.into_iter().map(|[a, b]| (a, b)).collect())
                .collect(),
            decorations: Decorations {
                pretty_names: self.pretty_names,
                vertex_layout: self.vertex_layout,
                edge_options,
            },
        })
    }
}

impl From<&SubgroupLattice> for GroupDataFile {
    fn from(l: &SubgroupLattice) -> Self {
        let parts = l.to_parts();
        GroupDataFile {
            name: parts.name,
            kind: parts.kind,
            nodes: parts
                .node_names
                .into_iter()
                .zip(parts.node_orders)
                .map(|(name, order)| NodeEntry { name, order })
                .collect(),
            leq: parts.leq.into_iter().map(|(a, b)| [a, b]).collect(),
            meet: parts.meet,
            join: parts.join,
            node_classes: parts.node_classes,
            edge_orbits: parts
                .edge_orbits
                .into_iter()
                .map(|o| o.into_iter().map(|(a, b)| [a, b]).collect())
                .collect(),
            pretty_names: parts.decorations.pretty_names,
            vertex_layout: parts.decorations.vertex_layout,
            edge_options: parts
                .decorations
                .edge_options
                .into_iter()
                .map(|((a, b), v)| (format!("{a},{b}"), v))
                .collect(),
        }
    }
}

/// Reads and validates a lattice data file.
pub fn load_lattice(path: impl AsRef<Path>) -> Result<SubgroupLattice> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    GroupDataFile::from_json(&text)?.into_lattice()
}
