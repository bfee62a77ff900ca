//! Subspaces of F2^n in reduced row echelon form.
//!
//! Pivot choice follows a column priority list, so the reduced basis is a
//! canonical function of the subspace and the priority.

use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Space {
    len: usize,
    priority: Vec<usize>,
    /// Reduced rows paired with their pivot column.
    rows: Vec<(usize, BitSet)>,
}

impl F2Space {
    /// Empty subspace; `priority` lists every column, most significant first.
    pub fn new(len: usize, priority: Vec<usize>) -> Self {
        debug_assert_eq!(priority.len(), len);
        F2Space { len, priority, rows: Vec::new() }
    }

    /// Priority from the highest column index down.
    pub fn top_down(len: usize) -> Self {
        Self::new(len, (0..len).rev().collect())
    }

    pub fn spanned_by(len: usize, priority: Vec<usize>, vectors: impl IntoIterator<Item = BitSet>) -> Self {
        let mut space = Self::new(len, priority);
        for v in vectors {
            space.insert(v);
        }
        space
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &BitSet) -> BitSet {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if v.contains(*p) {
                v.xor_with(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitSet) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: BitSet) -> bool {
        let r = self.reduce(&v);
        let Some(&p) = self.priority.iter().find(|&&c| r.contains(c)) else {
            return false;
        };
        for (_, row) in self.rows.iter_mut() {
            if row.contains(p) {
                row.xor_with(&r);
            }
        }
        self.rows.push((p, r));
        let rank_of: Vec<usize> = {
            let mut rank = vec![0; self.len];
            for (i, &c) in self.priority.iter().enumerate() {
                rank[c] = i;
            }
            rank
        };
        self.rows.sort_by_key(|(p, _)| rank_of[*p]);
        true
    }

    /// Reduced basis, ordered by pivot priority.
    pub fn basis(&self) -> impl Iterator<Item = &BitSet> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn is_subspace_of(&self, other: &F2Space) -> bool {
        self.basis().all(|v| other.contains(v))
    }

    pub fn same_space(&self, other: &F2Space) -> bool {
        self.rank() == other.rank() && self.is_subspace_of(other)
    }

    /// Coefficients expressing `v` in the reduced basis.
    pub fn coordinates(&self, v: &BitSet) -> Option<BitSet> {
        let mut coords = BitSet::new(self.rows.len());
        let mut rest = v.clone();
        for (i, (p, row)) in self.rows.iter().enumerate() {
            if rest.contains(*p) {
                rest.xor_with(row);
                coords.insert(i);
            }
        }
        rest.is_empty().then_some(coords)
    }

    /// Every vector of the subspace; only for small ranks.
    pub fn elements(&self) -> Vec<BitSet> {
        assert!(self.rank() < 24, "subspace too large to list");
        let basis: Vec<&BitSet> = self.basis().collect();
        (0u32..1 << basis.len())
            .map(|mask| {
                let mut v = BitSet::new(self.len);
                for (i, b) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v.xor_with(b);
                    }
                }
                v
            })
            .collect()
    }

    /// Intersection, via the Zassenhaus sum-intersection trick.
    pub fn intersect(&self, other: &F2Space) -> F2Space {
        let n = self.len;
        // Rows [u | u] and [w | 0]; rows whose left half reduces to zero carry
        // the intersection in their right half.
        let mut priority: Vec<usize> = self.priority.clone();
        priority.extend(self.priority.iter().map(|c| c + n));
        let doubled = |v: &BitSet, twice: bool| {
            let mut out = BitSet::new(2 * n);
            for i in v.iter() {
                out.insert(i);
                if twice {
                    out.insert(i + n);
                }
            }
            out
        };
        let mut big = F2Space::new(2 * n, priority);
        for v in self.basis() {
            big.insert(doubled(v, true));
        }
        for w in other.basis() {
            big.insert(doubled(w, false));
        }
        let right = big
            .basis()
            .filter(|r| r.iter().all(|i| i >= n))
            .map(|r| BitSet::from_indices(n, r.iter().map(|i| i - n)))
            .collect::<Vec<_>>();
        F2Space::spanned_by(n, self.priority.clone(), right)
    }
}

/// Basis of `{c in F2^ncols : row . c = 0 for every row}`.
pub fn null_space(rows: &[BitSet], ncols: usize) -> Vec<BitSet> {
    let mut space = F2Space::new(ncols, (0..ncols).collect());
    for r in rows {
        space.insert(r.clone());
    }
    let pivots = space.pivots();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = BitSet::from_indices(ncols, [f]);
            for (p, row) in space.rows.iter() {
                if row.contains(f) {
                    v.insert(*p);
                }
            }
            v
        })
        .collect()
}
