//! Automorphism groups by generator-image backtracking.
//!
//! A generating set of `P` is fixed; each generator may go to any element of
//! the same order. After every choice the partial map is extended over the
//! subgroup generated so far and rejected as soon as it is inconsistent or
//! non-injective. For elementary abelian `P` this amounts to enumerating
//! `GL(k, 2)` column by column.

use std::collections::HashMap;

use super::FiniteGroup;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest group handled by the generic search.
pub const AUT_ORDER_CAP: usize = 64;
/// Largest automorphism group that is listed explicitly.
pub const AUT_LIST_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    /// `maps[i][x]` is the image of `x` under automorphism `i`; map 0 is the identity.
    maps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    inner: BitSet,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn map(&self, i: usize) -> &[u32] {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[Vec<u32>] {
        &self.maps
    }

    pub fn find(&self, images: &[u32]) -> Option<usize> {
        self.index.get(images).copied()
    }

    /// Index of `a ∘ b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let (fa, fb) = (&self.maps[a], &self.maps[b]);
        let c: Vec<u32> = fb.iter().map(|&y| fa[y as usize]).collect();
        self.index[&c]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let mut inv = vec![0u32; self.maps[a].len()];
        for (x, &y) in self.maps[a].iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        self.index[&inv]
    }

    pub fn is_inner(&self, a: usize) -> bool {
        self.inner.contains(a)
    }

    /// `Inn(P)` as a set of indices.
    pub fn inner(&self) -> &BitSet {
        &self.inner
    }

    pub fn out_order(&self) -> usize {
        self.order() / self.inner.count()
    }

    /// Cosets `a Inn(P)`, each listed from its least index.
    pub fn out_cosets(&self) -> Vec<Vec<usize>> {
        let mut assigned = BitSet::new(self.order());
        let mut cosets = Vec::new();
        for a in 0..self.order() {
            if assigned.contains(a) {
                continue;
            }
            let coset: Vec<usize> = self.inner.iter().map(|i| self.compose(a, i)).collect();
            for &c in &coset {
                assigned.insert(c);
            }
            let mut coset = coset;
            coset.sort_unstable();
            cosets.push(coset);
        }
        cosets
    }

    /// The explicit composition table, as a group.
    pub fn to_group(&self, name: impl Into<String>, cap: usize) -> Result<FiniteGroup> {
        let n = self.order();
        if n > cap {
            return Err(Error::CapExceeded { what: "automorphism group table", size: n, cap });
        }
        let table = (0..n).map(|a| (0..n).map(|b| self.compose(a, b)).collect()).collect();
        FiniteGroup::from_table(name, table, cap)
    }
}

/// A generating set chosen greedily: each new generator enlarges the span.
pub fn greedy_generators(group: &FiniteGroup) -> Vec<usize> {
    let n = group.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut span = group.closure(&[]);
    // Prefer large element orders so that few generators are needed.
    let mut candidates: Vec<usize> = (1..n).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(group.element_order(x)), x));
    for x in candidates {
        if span.count() == n {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = group.closure(&gens);
        }
    }
    gens
}

/// Full `Aut(P)` for `|P| <= AUT_ORDER_CAP`.
pub fn automorphism_group(group: &FiniteGroup) -> Result<AutomorphismGroup> {
    let n = group.order();
    if n > AUT_ORDER_CAP {
        return Err(Error::CapExceeded { what: "automorphism search group order", size: n, cap: AUT_ORDER_CAP });
    }
    if let Some(k) = elementary_abelian_rank(group) {
        let size = gl2_order(k);
        if size > AUT_LIST_CAP as u128 {
            return Err(Error::CapExceeded { what: "automorphism group listing", size: size as usize, cap: AUT_LIST_CAP });
        }
    }
    let gens = greedy_generators(group);
    let mut maps = Vec::new();
    let mut partial = vec![u32::MAX; n];
    partial[0] = 0;
    search(group, &gens, 0, &mut partial, &mut maps);
    maps.sort();
    // The identity sorts first since it is lexicographically least among bijections fixing 0.
    let index: HashMap<Vec<u32>, usize> = maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let inner = BitSet::from_indices(
        maps.len(),
        (0..n).map(|g| {
            let m: Vec<u32> = (0..n).map(|x| group.conj(g, x) as u32).collect();
            index[&m]
        }),
    );
    Ok(AutomorphismGroup { maps, index, inner })
}

fn search(group: &FiniteGroup, gens: &[usize], depth: usize, partial: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let n = group.order();
    if depth == gens.len() {
        out.push(partial.clone());
        return;
    }
    let g = gens[depth];
    for y in 1..n {
        if group.element_order(y) != group.element_order(g) {
            continue;
        }
        let mut trial = partial.clone();
        if extend(group, &gens[..=depth], g, y, &mut trial) {
            search(group, gens, depth + 1, &mut trial, out);
        }
    }
}

/// Extends the homomorphism defined on `<gens minus g>` by `g -> y`, over `<gens>`.
/// Returns false if the extension is inconsistent or non-injective.
fn extend(group: &FiniteGroup, gens: &[usize], g: usize, y: usize, map: &mut [u32]) -> bool {
    let n = group.order();
    if map[g] != u32::MAX {
        return map[g] as usize == y;
    }
    map[g] = y as u32;
    let mut used = BitSet::new(n);
    let mut queue = Vec::new();
    for x in 0..n {
        if map[x] != u32::MAX {
            if !used.insert(map[x] as usize) {
                return false;
            }
            queue.push(x);
        }
    }
    let images: Vec<usize> = gens.iter().map(|&h| map[h] as usize).collect();
    while let Some(x) = queue.pop() {
        let fx = map[x] as usize;
        for (&h, &fh) in gens.iter().zip(&images) {
            let xh = group.mul(x, h);
            let fxh = group.mul(fx, fh);
            if map[xh] == u32::MAX {
                if !used.insert(fxh) {
                    return false;
                }
                map[xh] = fxh as u32;
                queue.push(xh);
            } else if map[xh] as usize != fxh {
                return false;
            }
        }
    }
    true
}

pub(crate) fn elementary_abelian_rank(group: &FiniteGroup) -> Option<usize> {
    let n = group.order();
    if n.is_power_of_two() && group.is_abelian() && (1..n).all(|x| group.element_order(x) == 2) {
        Some(n.trailing_zeros() as usize)
    } else {
        None
    }
}

/// `|GL(k, 2)|`.
pub fn gl2_order(k: usize) -> u128 {
    (0..k).map(|i| (1u128 << k) - (1u128 << i)).product()
}
