//! TikZ pictures of edge sets on the poset of conjugacy classes.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::bitset::EdgeSet;
use crate::error::{Error, Result};
use crate::lattice::{Decorations, QuotientPoset, SubgroupLattice};

const PREAMBLE: &str = "% styles: \\tikzset{faint/.style={black!10}, accent/.style={codepurple}}\n";

const RADIUS: f64 = 3.0;

/// First six characters of the decimal expansion, truncated rather than
/// rounded: `2.598076` prints as `2.5980` and `-1.4999999` as `-1.499`.
fn coordinate(v: f64) -> String {
    format!("{v:.20}").chars().take(6).collect()
}

/// Position of class `k` of `m` on the default circle, clockwise from the
/// top.
fn circle_position(k: usize, m: usize) -> String {
    let turn = k as f64 * (2.0 * std::f64::consts::PI / m as f64);
    format!(
        "({},{})",
        coordinate(RADIUS * turn.sin()),
        coordinate(RADIUS * turn.cos())
    )
}

/// Draws every strict comparable pair of conjugacy classes, with the image
/// of `set` in the accent style and everything else faint. `layout`
/// overrides the lattice's own decorations.
pub fn edges_to_tikz(
    set: &EdgeSet,
    lattice: &SubgroupLattice,
    layout: Option<&Decorations>,
) -> Result<String> {
    let poset = QuotientPoset::of(lattice)?;
    let deco = layout.unwrap_or(lattice.decorations());
    let m = poset.class_count();
    for (what, len) in [
        ("pretty_names", deco.pretty_names.as_ref().map(Vec::len)),
        ("vertex_layout", deco.vertex_layout.as_ref().map(Vec::len)),
    ] {
        if let Some(len) = len.filter(|&len| len != m) {
            return Err(Error::Layout(format!(
                "{what} has {len} entries for {m} classes"
            )));
        }
    }
    if let Some(&(i, j)) = deco.edge_options.keys().find(|&&(i, j)| i >= m || j >= m) {
        return Err(Error::Layout(format!(
            "edge option ({i},{j}) is out of range"
        )));
    }

    let labels: Vec<&str> = match &deco.pretty_names {
        Some(p) => p.iter().map(String::as_str).collect(),
        None => poset.class_names().iter().map(String::as_str).collect(),
    };
    let mut accent = vec![false; poset.edge_count()];
    for e in set.iter() {
        let (a, b) = lattice.edge(e);
        if let Some(q) = poset.edge_index(lattice.class_of(a), lattice.class_of(b)) {
            accent[q] = true;
        }
    }

    let mut s = String::from(PREAMBLE);
    match &deco.vertex_layout {
        None => {
            s.push_str("\\begin{tikzpicture}[scale=0.5]\n");
            for (k, label) in labels.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "\\node[inner sep=0cm] ({k}) at {} {{${label}$}};",
                    circle_position(k, m)
                );
            }
        }
        Some(positions) => {
            s.push_str("\\begin{tikzpicture}\n");
            for (k, (label, at)) in labels.iter().zip(positions).enumerate() {
                let _ = writeln!(s, "\\node[inner sep=0cm] ({k}) at {at}{{${label}$}};");
            }
        }
    }
    let options: &BTreeMap<(usize, usize), String> = &deco.edge_options;
    for style in ["faint", "accent"] {
        for (q, &(a, b)) in poset.edges().iter().enumerate() {
            if accent[q] != (style == "accent") {
                continue;
            }
            let opt = options.get(&(a, b)).map(String::as_str).unwrap_or("");
            let _ = writeln!(s, "\\draw[{style},->] ({a}) edge{opt} ({b});");
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures;

    #[test]
    fn coordinates_truncate() {
        assert_eq!(circle_position(0, 6), "(0.0000,3.0000)");
        assert_eq!(circle_position(1, 6), "(2.5980,1.5000)");
        assert_eq!(circle_position(2, 6), "(2.5980,-1.499)");
        assert_eq!(circle_position(3, 6), "(0.0000,-3.000)");
        assert_eq!(circle_position(4, 6), "(-2.598,-1.500)");
        assert_eq!(circle_position(5, 6), "(-2.598,1.4999)");
    }

    #[test]
    fn chain_picture() {
        let l = fixtures::chain(3);
        let t = l.edge_set_from_pairs([(0, 1)]).unwrap();
        let s = edges_to_tikz(&t, &l, None).unwrap();
        assert_eq!(s.matches("\\node").count(), 3);
        assert_eq!(s.matches("[faint,->]").count(), 2);
        assert!(s.contains("\\draw[accent,->] (0) edge (1);"));
    }

    #[test]
    fn layout_length_is_checked() {
        let l = fixtures::chain(3);
        let deco = Decorations {
            vertex_layout: Some(vec!["(0,0)".into()]),
            ..Decorations::default()
        };
        assert!(matches!(
            edges_to_tikz(&l.empty_set(), &l, Some(&deco)),
            Err(Error::Layout(_))
        ));
    }
}
