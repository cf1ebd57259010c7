//! Subgroup lattices of permutation groups.
//!
//! All subgroups are found by seeding with the cyclic subgroups and closing
//! under pairwise joins. Subgroups are element-index bitsets while the
//! lattice is being built and are dropped afterwards.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::naming::describe;
use super::perm::{ElementTable, PermutationGroup};
use crate::bitset::{is_subset_words, words_for, Ones};
use crate::error::Result;
use crate::lattice::{Decorations, LatticeKind, LatticeParts, SubgroupLattice};

#[derive(Clone)]
struct Subgroup {
    members: Vec<u64>,
    order: usize,
    generators: Vec<usize>,
}

impl Subgroup {
    fn elements(&self) -> Ones<'_> {
        Ones::new(&self.members)
    }
}

fn generate(table: &ElementTable, generators: &[usize]) -> Subgroup {
    let words = words_for(table.len());
    let mut members = vec![0u64; words];
    members[0] |= 1;
    let mut order = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        for &g in generators {
            let x = table.mul(h, g);
            let (w, bit) = (x / 64, 1u64 << (x % 64));
            if members[w] & bit == 0 {
                members[w] |= bit;
                order += 1;
                queue.push_back(x);
            }
        }
    }
    Subgroup {
        members,
        order,
        generators: generators.to_vec(),
    }
}

/// Builds the full subgroup lattice of `group`, with conjugacy classes and
/// edge orbits. The top node is named `name`.
pub fn subgroup_lattice(
    group: &PermutationGroup,
    name: &str,
    cap: usize,
) -> Result<SubgroupLattice> {
    let table = group.elements(cap)?;
    let mut subgroups = find_subgroups(&table);

    subgroups.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.elements().cmp(b.elements()))
    });
    let n = subgroups.len();
    let lookup: FxHashMap<&[u64], usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.as_slice(), i))
        .collect();

    let mut leq = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j
                && subgroups[i].order < subgroups[j].order
                && is_subset_words(&subgroups[i].members, &subgroups[j].members)
            {
                leq.push((i, j));
            }
        }
    }

    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    let mut scratch = vec![0u64; subgroups[0].members.len()];
    for i in 0..n {
        for j in 0..n {
            for (w, (a, b)) in scratch
                .iter_mut()
                .zip(subgroups[i].members.iter().zip(&subgroups[j].members))
            {
                *w = a & b;
            }
            meet[i][j] = lookup[scratch.as_slice()];
            for (w, (a, b)) in scratch
                .iter_mut()
                .zip(subgroups[i].members.iter().zip(&subgroups[j].members))
            {
                *w = a | b;
            }
            // Subgroups are sorted by order, so the first one containing both
            // is the least upper bound.
            join[i][j] = (0..n)
                .find(|&k| is_subset_words(&scratch, &subgroups[k].members))
                .expect("the whole group contains everything");
        }
    }

    // Node permutations induced by conjugating with each group generator.
    let conjugators: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| table.index_of(g).expect("generator is an element"))
        .collect();
    let node_actions: Vec<Vec<usize>> = conjugators
        .iter()
        .map(|&g| {
            let g_inv = table.inverse(g);
            let conj: Vec<usize> = (0..table.len())
                .map(|x| table.mul(table.mul(g_inv, x), g))
                .collect();
            subgroups
                .iter()
                .map(|s| {
                    let mut image = vec![0u64; s.members.len()];
                    for x in s.elements() {
                        let y = conj[x];
                        image[y / 64] |= 1 << (y % 64);
                    }
                    lookup[image.as_slice()]
                })
                .collect()
        })
        .collect();

    let node_classes = orbits(n, |x, out| out.extend(node_actions.iter().map(|a| a[x])));
    let mut class_of = vec![0; n];
    for (c, class) in node_classes.iter().enumerate() {
        for &v in class {
            class_of[v] = c;
        }
    }

    let edge_id: FxHashMap<(usize, usize), usize> =
        leq.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let edge_orbits = orbits(leq.len(), |e, out| {
        let (a, b) = leq[e];
        out.extend(node_actions.iter().map(|act| edge_id[&(act[a], act[b])]));
    })
    .into_iter()
    .map(|o| o.into_iter().map(|e| leq[e]).collect())
    .collect();

    let node_names = name_nodes(&table, &subgroups, &node_classes, &class_of, name);
    let node_orders = subgroups.iter().map(|s| s.order as u64).collect();
    let kind = LatticeKind::Group;

    SubgroupLattice::from_parts(LatticeParts {
        name: name.to_string(),
        kind,
        node_names,
        node_orders,
        leq,
        meet,
        join,
        node_classes,
        edge_orbits,
        decorations: Decorations::default(),
    })
}

fn find_subgroups(table: &ElementTable) -> Vec<Subgroup> {
    let mut subgroups: Vec<Subgroup> = Vec::new();
    let mut seen: FxHashMap<Vec<u64>, usize> = FxHashMap::default();
    let mut push = |s: Subgroup, subgroups: &mut Vec<Subgroup>| {
        if !seen.contains_key(&s.members) {
            seen.insert(s.members.clone(), subgroups.len());
            subgroups.push(s);
        }
    };
    for x in 0..table.len() {
        let gens = if x == 0 { vec![] } else { vec![x] };
        push(generate(table, &gens), &mut subgroups);
    }

    // Each new subgroup is joined with every earlier one exactly once.
    let mut k = 0;
    while k < subgroups.len() {
        for i in 0..k {
            let (a, b) = (&subgroups[i], &subgroups[k]);
            if is_subset_words(&a.members, &b.members) || is_subset_words(&b.members, &a.members) {
                continue;
            }
            let mut gens = a.generators.clone();
            gens.extend(b.generators.iter().copied());
            let joined = generate(table, &gens);
            push(joined, &mut subgroups);
        }
        k += 1;
    }
    subgroups
}

/// Orbits of `0..n` under the maps produced by `step`, each sorted, ordered
/// by least member.
fn orbits(n: usize, mut step: impl FnMut(usize, &mut Vec<usize>)) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; n];
    let mut result = Vec::new();
    let mut next = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            next.clear();
            step(orbit[k], &mut next);
            for &y in &next {
                if !assigned[y] {
                    assigned[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        result.push(orbit);
    }
    result
}

fn name_nodes(
    table: &ElementTable,
    subgroups: &[Subgroup],
    classes: &[Vec<usize>],
    class_of: &[usize],
    top_name: &str,
) -> Vec<String> {
    let n = subgroups.len();
    let mut names = Vec::with_capacity(n);
    for (i, s) in subgroups.iter().enumerate() {
        let base = if i == n - 1 {
            top_name.to_string()
        } else {
            let elements: Vec<usize> = s.elements().collect();
            describe(table, &elements, &s.generators)
        };
        let class = &classes[class_of[i]];
        if class.len() > 1 {
            let pos = class.iter().position(|&v| v == i).unwrap() + 1;
            names.push(format!("{base}({pos})"));
        } else {
            names.push(base);
        }
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::Permutation;

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = PermutationGroup::new(1, vec![]).unwrap();
        let l = subgroup_lattice(&g, "1", 10).unwrap();
        assert_eq!(l.node_count(), 1);
        assert_eq!(l.edge_count(), 0);
    }

    #[test]
    fn cyclic_six_via_permutations() {
        let g = PermutationGroup::new(
            6,
            vec![Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap()],
        )
        .unwrap();
        let l = subgroup_lattice(&g, "C6", 100).unwrap();
        assert_eq!(l.node_orders(), &[1, 2, 3, 6]);
        assert_eq!(l.node_names(), &["1", "C2", "C3", "C6"]);
        assert!(l.has_trivial_action());
    }
}
