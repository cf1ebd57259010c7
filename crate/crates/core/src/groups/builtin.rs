//! Built-in group families, addressed by short spec strings.

use std::str::FromStr;

use super::perm::{Permutation, PermutationGroup};
use super::subgroups::subgroup_lattice;
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    ElementaryAbelian { p: usize, rank: usize },
    CyclicProduct(Vec<usize>),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let unknown = || Error::UnknownSpec(spec.to_string());
        let spec_t = spec.trim();
        if spec_t.contains('x') {
            let factors = spec_t
                .split('x')
                .map(|f| match f.trim().split_once(':') {
                    Some(("cyclic", n)) => n.trim().parse::<usize>().ok().filter(|&n| n >= 1),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(unknown)?;
            return Ok(GroupSpec::CyclicProduct(factors));
        }
        let parts: Vec<&str> = spec_t.split(':').collect();
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| unknown());
        let spec = match parts.as_slice() {
            ["cyclic", n] => GroupSpec::Cyclic(num(n)? as u64),
            ["dihedral", n] => GroupSpec::Dihedral(num(n)?),
            ["symmetric", n] => GroupSpec::Symmetric(num(n)?),
            ["alternating", n] => GroupSpec::Alternating(num(n)?),
            ["quaternion", "8"] => GroupSpec::Quaternion8,
            ["elemab", p, k] => GroupSpec::ElementaryAbelian {
                p: num(p)?,
                rank: num(k)?,
            },
            _ => return Err(unknown()),
        };
        match spec {
            GroupSpec::Cyclic(0) | GroupSpec::Symmetric(0) | GroupSpec::Alternating(0) => {
                Err(unknown())
            }
            GroupSpec::Dihedral(n) if n < 3 => Err(unknown()),
            GroupSpec::ElementaryAbelian { p, rank } if !is_prime(p) || rank == 0 => Err(unknown()),
            s => Ok(s),
        }
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl GroupSpec {
    pub fn display_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Dihedral(n) => format!("D{n}"),
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Quaternion8 => "Q8".into(),
            GroupSpec::ElementaryAbelian { p, rank } => vec![format!("C{p}"); *rank].join("x"),
            GroupSpec::CyclicProduct(f) => f
                .iter()
                .map(|n| format!("C{n}"))
                .collect::<Vec<_>>()
                .join("x"),
        }
    }

    /// The standard permutation representation of the family.
    pub fn permutation_group(&self) -> Result<PermutationGroup> {
        match self {
            GroupSpec::Cyclic(n) => cyclic_product(&[*n as usize]),
            GroupSpec::Dihedral(n) => {
                let n = *n;
                let rotation = Permutation::from_images((0..n).map(|x| (x + 1) % n).collect())?;
                let reflection = Permutation::from_images((0..n).map(|x| (n - x) % n).collect())?;
                PermutationGroup::new(n, vec![rotation, reflection])
            }
            GroupSpec::Symmetric(n) => {
                let n = *n;
                if n == 1 {
                    return PermutationGroup::new(1, vec![]);
                }
                let swap = Permutation::from_cycles(n, &[&[0, 1]])?;
                let cycle = Permutation::from_images((0..n).map(|x| (x + 1) % n).collect())?;
                PermutationGroup::new(n, vec![swap, cycle])
            }
            GroupSpec::Alternating(n) => {
                let n = *n;
                let gens = (2..n)
                    .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
                    .collect::<Result<Vec<_>>>()?;
                PermutationGroup::new(n, gens)
            }
            GroupSpec::Quaternion8 => quaternion_regular(),
            GroupSpec::ElementaryAbelian { p, rank } => cyclic_product(&vec![*p; *rank]),
            GroupSpec::CyclicProduct(f) => cyclic_product(f),
        }
    }

    pub fn lattice(&self, cap: usize) -> Result<SubgroupLattice> {
        match self {
            GroupSpec::Cyclic(n) => Ok(cyclic_lattice(*n)),
            other => subgroup_lattice(&other.permutation_group()?, &other.display_name(), cap),
        }
    }
}

/// Parses `spec` and builds its subgroup lattice.
pub fn builtin(spec: &str, cap: usize) -> Result<SubgroupLattice> {
    spec.parse::<GroupSpec>()?.lattice(cap)
}

fn cyclic_product(factors: &[usize]) -> Result<PermutationGroup> {
    let degree: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &n in factors {
        let cycle: Vec<usize> = (offset..offset + n).collect();
        if n > 1 {
            gens.push(Permutation::from_cycles(degree, &[&cycle])?);
        }
        offset += n;
    }
    PermutationGroup::new(degree, gens)
}

/// Q8 acting on itself by left multiplication. Element `2u + s` is the unit
/// `u` in {1, i, j, k} with sign `(-1)^s`.
fn quaternion_regular() -> Result<PermutationGroup> {
    // unit products: (sign, unit) for u*v
    const PRODUCT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |a: usize, b: usize| {
        let (sign, unit) = PRODUCT[a / 2][b / 2];
        2 * unit + ((a % 2 + b % 2 + sign) % 2)
    };
    let left = |g: usize| Permutation::from_images((0..8).map(|x| mul(g, x)).collect());
    PermutationGroup::new(8, vec![left(2)?, left(4)?])
}

/// Divisor lattice of `n`: meets are gcds, joins are lcms.
pub fn cyclic_lattice(n: u64) -> SubgroupLattice {
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let k = divisors.len();
    let index = |d: u64| divisors.binary_search(&d).unwrap();
    let names = divisors
        .iter()
        .map(|&d| {
            if d == 1 {
                "1".to_string()
            } else {
                format!("C{d}")
            }
        })
        .collect();
    let mut leq = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j && divisors[j].is_multiple_of(divisors[i]) {
                leq.push((i, j));
            }
        }
    }
    let meet = divisors
        .iter()
        .map(|&a| divisors.iter().map(|&b| index(gcd(a, b))).collect())
        .collect();
    let join = divisors
        .iter()
        .map(|&a| divisors.iter().map(|&b| index(a / gcd(a, b) * b)).collect())
        .collect();
    SubgroupLattice::from_parts(crate::lattice::LatticeParts {
        name: format!("C{n}"),
        kind: crate::lattice::LatticeKind::Group,
        node_names: names,
        node_orders: divisors.clone(),
        edge_orbits: leq.iter().map(|&p| vec![p]).collect(),
        leq,
        meet,
        join,
        node_classes: (0..k).map(|i| vec![i]).collect(),
        decorations: Default::default(),
    })
    .expect("divisor lattice is valid")
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
