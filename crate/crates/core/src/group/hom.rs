//! Injective homomorphisms between subgroups of one ambient group.

use std::collections::BTreeSet;

use super::lattice::SubgroupLattice;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

const UNDEFINED: u32 = u32::MAX;

/// A map from subgroup `source` to subgroup `target` of a common lattice,
/// stored densely over the ambient group's elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMap {
    pub source: usize,
    pub target: usize,
    images: Vec<u32>,
}

impl GroupMap {
    /// `images[x]` for members `x` of `source`; the value elsewhere is ignored.
    pub fn new(lattice: &SubgroupLattice, source: usize, target: usize, images: &[usize]) -> Result<Self> {
        let n = lattice.group().order();
        if images.len() != n {
            return Err(Error::Dimension { expected: n, got: images.len() });
        }
        let src = lattice.members(source);
        let mut dense = vec![UNDEFINED; n];
        for x in src.iter() {
            dense[x] = images[x] as u32;
        }
        let map = GroupMap { source, target, images: dense };
        map.validate(lattice)?;
        Ok(map)
    }

    pub(crate) fn from_dense(source: usize, target: usize, images: Vec<u32>) -> Self {
        GroupMap { source, target, images }
    }

    pub fn identity(lattice: &SubgroupLattice, h: usize) -> Self {
        Self::inclusion(lattice, h, h)
    }

    pub fn inclusion(lattice: &SubgroupLattice, h: usize, k: usize) -> Self {
        let n = lattice.group().order();
        let mut images = vec![UNDEFINED; n];
        for x in lattice.members(h).iter() {
            images[x] = x as u32;
        }
        GroupMap { source: h, target: k, images }
    }

    /// `c_g` restricted to `h`, landing in `k`.
    pub fn conjugation(lattice: &SubgroupLattice, g: usize, h: usize, k: usize) -> Self {
        let group = lattice.group();
        let mut images = vec![UNDEFINED; group.order()];
        for x in lattice.members(h).iter() {
            images[x] = group.conj(g, x) as u32;
        }
        GroupMap { source: h, target: k, images }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        let y = self.images[x];
        debug_assert_ne!(y, UNDEFINED, "map not defined at {x}");
        y as usize
    }

    pub fn dense(&self) -> &[u32] {
        &self.images
    }

    /// Pairs `(x, f(x))` over the source.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images.iter().enumerate().filter(|(_, &y)| y != UNDEFINED).map(|(x, &y)| (x, y as usize))
    }

    pub fn image_set(&self) -> BitSet {
        BitSet::from_indices(self.images.len(), self.pairs().map(|(_, y)| y))
    }

    /// Id of the image subgroup.
    pub fn image(&self, lattice: &SubgroupLattice) -> usize {
        lattice.id_of(&self.image_set()).expect("image of a homomorphism is a subgroup")
    }

    /// Id of `f(Q)` for `Q <= source`.
    pub fn apply_subgroup(&self, lattice: &SubgroupLattice, q: usize) -> usize {
        let set = BitSet::from_indices(self.images.len(), lattice.members(q).iter().map(|x| self.apply(x)));
        lattice.id_of(&set).expect("image of a subgroup is a subgroup")
    }

    pub fn with_target(mut self, target: usize) -> Self {
        self.target = target;
        self
    }

    /// `self ∘ other`; requires `other`'s image inside `self`'s source.
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        let mut images = vec![UNDEFINED; self.images.len()];
        for (x, y) in other.pairs() {
            images[x] = self.images[y];
            debug_assert_ne!(images[x], UNDEFINED);
        }
        GroupMap { source: other.source, target: self.target, images }
    }

    /// Inverse of the isomorphism `source -> image`, with the image as source.
    pub fn inverse(&self, lattice: &SubgroupLattice) -> GroupMap {
        let mut images = vec![UNDEFINED; self.images.len()];
        for (x, y) in self.pairs() {
            images[y] = x as u32;
        }
        GroupMap { source: self.image(lattice), target: self.source, images }
    }

    pub fn restrict(&self, lattice: &SubgroupLattice, q: usize) -> GroupMap {
        let mut images = vec![UNDEFINED; self.images.len()];
        for x in lattice.members(q).iter() {
            images[x] = self.images[x];
        }
        GroupMap { source: q, target: self.target, images }
    }

    pub fn is_identity(&self) -> bool {
        self.pairs().all(|(x, y)| x == y)
    }

    /// Checks the map is an injective homomorphism into `target`.
    pub fn validate(&self, lattice: &SubgroupLattice) -> Result<()> {
        let group = lattice.group();
        let src = lattice.members(self.source);
        let tgt = lattice.members(self.target);
        let mut seen = BitSet::new(group.order());
        for x in src.iter() {
            let y = self.images[x];
            if y == UNDEFINED || !tgt.contains(y as usize) {
                return Err(Error::NotInjectiveHom(format!("element {x} not mapped into the target")));
            }
            if !seen.insert(y as usize) {
                return Err(Error::NotInjectiveHom(format!("image {y} is hit twice")));
            }
        }
        for a in src.iter() {
            for b in src.iter() {
                if self.apply(group.mul(a, b)) != group.mul(self.apply(a), self.apply(b)) {
                    return Err(Error::NotInjectiveHom(format!("f({a}*{b}) != f({a})*f({b})")));
                }
            }
        }
        Ok(())
    }
}

/// `Hom_G(H, K)`: the distinct restrictions `c_g|_H` with `gHg^{-1} <= K`.
pub fn hom_by_conjugation(lattice: &SubgroupLattice, h: usize, k: usize) -> Vec<GroupMap> {
    let n = lattice.group().order();
    let mut maps = BTreeSet::new();
    for g in 0..n {
        if lattice.leq(lattice.conjugate(g, h), k) {
            maps.insert(GroupMap::conjugation(lattice, g, h, k));
        }
    }
    maps.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::catalog_group;

    fn lattice(name: &str) -> SubgroupLattice {
        SubgroupLattice::build(catalog_group(name).unwrap()).unwrap()
    }

    #[test]
    fn a4_involution_into_v4() {
        let l = lattice("A4");
        let v4 = l.sylow(2)[0];
        let c2 = l.subgroups().iter().find(|h| h.order == 2).unwrap().id;
        assert_eq!(hom_by_conjugation(&l, c2, v4).len(), 3);
    }

    #[test]
    fn identity_always_present() {
        let l = lattice("S4");
        for h in 0..l.len() {
            assert!(hom_by_conjugation(&l, h, h).iter().any(GroupMap::is_identity));
        }
    }

    #[test]
    fn v4_distinct_maximals_have_no_maps() {
        let l = lattice("V4");
        assert!(hom_by_conjugation(&l, 1, 2).is_empty());
    }

    #[test]
    fn compose_and_inverse() {
        let l = lattice("S4");
        let d8 = l.sylow(2)[0];
        for f in hom_by_conjugation(&l, d8, d8) {
            f.validate(&l).unwrap();
            assert!(f.compose(&f.inverse(&l)).is_identity());
        }
    }

    #[test]
    fn rejects_non_homomorphism() {
        let l = lattice("C4");
        // Swap the two generators of C4 while fixing the involution: a valid
        // automorphism. Swapping an involution with a generator is not.
        let g = l.group();
        let gen = (0..4).find(|&x| g.element_order(x) == 4).unwrap();
        let inv = g.mul(gen, gen);
        let mut images: Vec<usize> = (0..4).collect();
        images.swap(gen, inv);
        assert!(GroupMap::new(&l, l.top(), l.top(), &images).is_err());
    }
}
