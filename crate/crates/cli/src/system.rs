//! Parsing edge sets from the command line.

use anyhow::{bail, Context, Result};
use ninfty_core::{EdgeSet, SubgroupLattice};

/// Accepts `a<b,c<d` or the listing form `{(a,b),(c,d)}`. An empty string
/// or `{}` is the empty set.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let t = text.trim();
    if t.is_empty() || t == "{}" {
        return Ok(Vec::new());
    }
    if t.contains('<') {
        return t
            .split(',')
            .map(|p| {
                let (a, b) = p
                    .split_once('<')
                    .with_context(|| format!("`{p}` is not of the form a<b"))?;
                Ok((parse_node(a)?, parse_node(b)?))
            })
            .collect();
    }
    let numbers: Vec<usize> = t
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(parse_node)
        .collect::<Result<_>>()?;
    if !numbers.len().is_multiple_of(2)
        || t.chars()
            .any(|c| !"{}(), ".contains(c) && !c.is_ascii_digit())
    {
        bail!("cannot read `{text}` as a list of pairs");
    }
    Ok(numbers.chunks(2).map(|p| (p[0], p[1])).collect())
}

fn parse_node(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .with_context(|| format!("`{}` is not a node index", s.trim()))
}

pub fn parse_set(text: &str, lattice: &SubgroupLattice) -> Result<EdgeSet> {
    let pairs = parse_pairs(text)?;
    if let Some(&(a, b)) = pairs
        .iter()
        .find(|&&(a, b)| a >= lattice.node_count() || b >= lattice.node_count())
    {
        bail!(
            "pair ({a},{b}) names a node outside 0..{}",
            lattice.node_count()
        );
    }
    Ok(lattice.edge_set_from_pairs(pairs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_forms() {
        assert_eq!(parse_pairs("0<1, 1<2").unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_pairs("{(0,1),(1,2)}").unwrap(), vec![(0, 1), (1, 2)]);
        assert!(parse_pairs("{}").unwrap().is_empty());
        assert!(parse_pairs("0<").is_err());
        assert!(parse_pairs("{(0,1),(2)}").is_err());
        assert!(parse_pairs("x").is_err());
    }
}
