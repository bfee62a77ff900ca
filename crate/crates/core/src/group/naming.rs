//! Structural names for subgroups (`C4`, `V4`, `D8`, `A4`, ...).
//!
//! Names come from isomorphism invariants only (order, commutativity,
//! element-order statistics), so two non-isomorphic groups can share a
//! name; labels disambiguate with a `#k` suffix anyway.

use std::collections::BTreeMap;

use super::{prime_factors, FiniteGroup};
use crate::bitset::BitSet;

pub fn structure_name(group: &FiniteGroup, members: &BitSet) -> String {
    let elems = members.to_vec();
    let n = elems.len();
    if n == 1 {
        return "1".into();
    }
    let mut order_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in &elems {
        *order_counts.entry(group.element_order(x)).or_default() += 1;
    }
    if order_counts.contains_key(&n) {
        return format!("C{n}");
    }
    let abelian = elems.iter().all(|&a| elems.iter().all(|&b| group.mul(a, b) == group.mul(b, a)));
    if abelian {
        return abelian_name(n, &order_counts);
    }
    let count = |k: usize| order_counts.get(&k).copied().unwrap_or(0);
    if n.is_multiple_of(2) && count(n / 2) > 0 && count(2) >= n / 2 {
        return format!("D{n}");
    }
    let known = match n {
        8 if count(2) == 1 => Some("Q8"),
        12 if count(2) == 3 && count(6) == 0 => Some("A4"),
        12 if count(2) == 1 => Some("C3:C4"),
        20 if count(4) == 10 => Some("C5:C4"),
        21 => Some("C7:C3"),
        24 if count(2) == 9 && count(4) == 6 => Some("S4"),
        24 if count(2) == 1 && count(4) == 6 && count(3) == 8 => Some("SL(2,3)"),
        56 if count(2) == 7 && count(7) == 48 => Some("C2^3:C7"),
        60 if count(5) == 24 && count(2) == 15 => Some("A5"),
        120 if count(2) == 25 && count(6) == 20 => Some("S5"),
        168 if count(2) == 7 && count(7) == 48 => Some("C2^3:(C7:C3)"),
        168 if count(2) == 21 && count(4) == 42 => Some("GL(3,2)"),
        _ => None,
    };
    known.map(str::to_string).unwrap_or_else(|| format!("G{n}"))
}

/// Invariant-factor name such as `C4xC2`, with `V4` and `Cp^k` for the
/// elementary abelian cases.
fn abelian_name(n: usize, order_counts: &BTreeMap<usize, usize>) -> String {
    // For each prime p, #elements of order dividing p^k equals
    // p^(sum_i min(k, e_i)); the exponents e_i follow by differencing.
    let mut factors_by_prime: Vec<Vec<usize>> = Vec::new();
    for p in prime_factors(n) {
        let mut logs = vec![0usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let c: usize = order_counts.iter().filter(|(o, _)| pk % **o == 0).map(|(_, c)| c).sum();
            let log = ilog(c, p);
            logs.push(log);
            if log == logs[logs.len() - 2] {
                break;
            }
        }
        // logs[k] - logs[k-1] = #{i : e_i >= k}
        let mut exps = Vec::new();
        let ge: Vec<usize> = (1..logs.len()).map(|k| logs[k] - logs[k - 1]).collect();
        for k in 1..=ge.len() {
            let at_least_k = ge[k - 1];
            let at_least_next = ge.get(k).copied().unwrap_or(0);
            for _ in 0..at_least_k - at_least_next {
                exps.push(p.pow(k as u32));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        factors_by_prime.push(exps);
    }
    let width = factors_by_prime.iter().map(Vec::len).max().unwrap_or(0);
    let invariants: Vec<usize> =
        (0..width).map(|i| factors_by_prime.iter().map(|f| f.get(i).copied().unwrap_or(1)).product()).collect();
    if invariants.len() > 1 && invariants.iter().all(|&d| d == invariants[0]) {
        if invariants == [2, 2] {
            return "V4".into();
        }
        return format!("C{}^{}", invariants[0], invariants.len());
    }
    invariants.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x")
}

fn ilog(mut x: usize, p: usize) -> usize {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}
