//! Explicit finite G-sets, used as an independent model of the Burnside
//! ring: fixed points are counted point by point instead of read from the
//! table of marks.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::group::{FiniteGroup, SubgroupLattice};

/// A left action, `action[g][x] = g.x`.
#[derive(Clone, Debug)]
pub struct GSet {
    action: Vec<Vec<u32>>,
}

impl GSet {
    pub fn empty(group: &FiniteGroup) -> Self {
        GSet { action: vec![Vec::new(); group.order()] }
    }

    /// `G/K` with `g.(xK) = (gx)K`.
    pub fn cosets(group: &FiniteGroup, k: &BitSet) -> Self {
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] == usize::MAX {
                for h in k.iter() {
                    coset_of[group.mul(g, h)] = reps.len();
                }
                reps.push(g);
            }
        }
        let action = (0..n).map(|g| reps.iter().map(|&x| coset_of[group.mul(g, x)] as u32).collect()).collect();
        GSet { action }
    }

    /// Builds a G-set from a point set and an action closure.
    pub fn from_action(group: &FiniteGroup, points: usize, act: impl Fn(usize, usize) -> usize) -> Self {
        GSet { action: (0..group.order()).map(|g| (0..points).map(|x| act(g, x) as u32).collect()).collect() }
    }

    pub fn len(&self) -> usize {
        self.action.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x] as usize
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        let shift = self.len() as u32;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|y| y + shift)).collect())
            .collect();
        GSet { action }
    }

    pub fn product(&self, other: &GSet) -> GSet {
        let m = other.len();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut row = Vec::with_capacity(a.len() * m);
                for &x in a {
                    for &y in b {
                        row.push(x * m as u32 + y);
                    }
                }
                row
            })
            .collect();
        GSet { action }
    }

    /// The action restricted to the subgroup with the given embedding
    /// (local element -> ambient element).
    pub fn restrict(&self, embedding: &[usize]) -> GSet {
        GSet { action: embedding.iter().map(|&g| self.action[g].clone()).collect() }
    }

    /// Pulls back along a surjection `G -> Q` given by `projection[g]`.
    pub fn inflate(&self, projection: &[usize]) -> GSet {
        GSet { action: projection.iter().map(|&q| self.action[q].clone()).collect() }
    }

    /// `|X^H|`.
    pub fn fixed_points(&self, members: &BitSet) -> usize {
        (0..self.len()).filter(|&x| members.iter().all(|h| self.act(h, x) == x)).count()
    }

    /// Points fixed by `N`, with the induced action of `G` (which factors through `G/N`).
    pub fn fixed_subset(&self, normal: &BitSet) -> (GSet, Vec<usize>) {
        let fixed: Vec<usize> = (0..self.len()).filter(|&x| normal.iter().all(|h| self.act(h, x) == x)).collect();
        let index: HashMap<usize, usize> = fixed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let action =
            self.action.iter().map(|row| fixed.iter().map(|&x| index[&(row[x] as usize)] as u32).collect()).collect();
        (GSet { action }, fixed)
    }

    /// Coefficients over the classes of `lattice`: the number of orbits whose
    /// stabilizers lie in each class.
    pub fn decompose(&self, lattice: &SubgroupLattice) -> Vec<usize> {
        let group = lattice.group();
        let n = group.order();
        let mut counts = vec![0; lattice.class_count()];
        let mut seen = BitSet::new(self.len());
        for x in 0..self.len() {
            if seen.contains(x) {
                continue;
            }
            for g in 0..n {
                seen.insert(self.act(g, x));
            }
            let stab = BitSet::from_indices(n, (0..n).filter(|&g| self.act(g, x) == x));
            let id = lattice.id_of(&stab).expect("stabilizers are subgroups");
            counts[lattice.class_of(id)] += 1;
        }
        counts
    }

    /// Fixed-point counts at every class representative.
    pub fn marks(&self, lattice: &SubgroupLattice) -> Vec<usize> {
        lattice.classes().iter().map(|c| self.fixed_points(lattice.members(c.representative))).collect()
    }
}
