//! Best-effort isomorphism-type labels for small subgroups.

use super::perm::ElementTable;

/// A short name for the subgroup with the given elements: `1`, `C4`,
/// `C2xC2`, `S3`, `D5`, `Q8`, `A4`, … falling back to `G<order>`.
pub(crate) fn describe(table: &ElementTable, elements: &[usize], generators: &[usize]) -> String {
    let order = elements.len();
    if order == 1 {
        return "1".into();
    }
    let orders: Vec<usize> = elements.iter().map(|&x| table.element_order(x)).collect();
    let max_order = orders.iter().copied().max().unwrap_or(1);
    if max_order == order {
        return format!("C{order}");
    }
    let abelian = generators.iter().all(|&a| {
        generators
            .iter()
            .all(|&b| table.mul(a, b) == table.mul(b, a))
    });
    if abelian {
        return abelian_name(order, &orders);
    }

    let count = |k: usize| orders.iter().filter(|&&o| o == k).count();
    let involutions = count(2);
    match order {
        6 => return "S3".into(),
        8 => return if involutions == 1 { "Q8" } else { "D4" }.into(),
        12 if involutions == 3 && count(3) == 8 => return "A4".into(),
        12 if involutions == 1 => return "Dic3".into(),
        24 if involutions == 9 && count(4) == 6 => return "S4".into(),
        24 if involutions == 1 && count(4) == 6 => return "SL(2,3)".into(),
        60 if involutions == 15 && count(5) == 24 => return "A5".into(),
        120 if involutions == 25 && count(5) == 24 => return "S5".into(),
        _ => {}
    }
    let half = order / 2;
    if order.is_multiple_of(2) && max_order == half {
        let expected = if half.is_multiple_of(2) {
            half + 1
        } else {
            half
        };
        if involutions == expected {
            return format!("D{half}");
        }
    }
    format!("G{order}")
}

/// Invariant-factor name of an abelian group from its element orders.
fn abelian_name(order: usize, orders: &[usize]) -> String {
    // For each prime p, #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)) determines
    // the exponents e_i of the p-primary part.
    let mut factors: Vec<Vec<usize>> = Vec::new();
    let mut rest = order;
    let mut p = 2;
    while rest > 1 {
        if rest.is_multiple_of(p) {
            let mut total = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                total += 1;
            }
            let mut log_counts = vec![0usize];
            let mut pk = 1;
            for _ in 0..total {
                pk *= p;
                let c = orders.iter().filter(|&&o| pk % o == 0).count();
                let mut e = 0;
                let mut v = c;
                while v % p == 0 && v > 1 {
                    v /= p;
                    e += 1;
                }
                log_counts.push(e);
            }
            // number of cyclic factors with exponent >= k is log_counts[k] - log_counts[k-1]
            let mut exps = Vec::new();
            for k in 1..=total {
                let at_least_k = log_counts[k] - log_counts[k - 1];
                let at_least_next = if k < total {
                    log_counts[k + 1] - log_counts[k]
                } else {
                    0
                };
                for _ in 0..(at_least_k - at_least_next) {
                    exps.push(p.pow(k as u32));
                }
            }
            factors.push(exps);
        }
        p += 1;
    }
    // Combine primary parts into invariant factors, largest last.
    let width = factors.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut invariants = vec![1usize; width];
    for mut f in factors {
        f.sort_unstable_by(|a, b| b.cmp(a));
        for (k, q) in f.into_iter().enumerate() {
            invariants[width - 1 - k] *= q;
        }
    }
    invariants
        .iter()
        .map(|q| format!("C{q}"))
        .collect::<Vec<_>>()
        .join("x")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_invariants() {
        // C2 x C2: orders 1,2,2,2
        assert_eq!(abelian_name(4, &[1, 2, 2, 2]), "C2xC2");
        // C2 x C4: one identity, three involutions, four of order 4
        assert_eq!(abelian_name(8, &[1, 2, 2, 2, 4, 4, 4, 4]), "C2xC4");
        // C3 x C3
        assert_eq!(abelian_name(9, &[1, 3, 3, 3, 3, 3, 3, 3, 3]), "C3xC3");
        // C2 x C6 = C2 x C2 x C3
        let mut orders = vec![1, 2, 2, 2, 3, 3];
        orders.extend([6; 6]);
        assert_eq!(abelian_name(12, &orders), "C2xC6");
    }
}
