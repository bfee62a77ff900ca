//! The subgroup lattice of a finite group.
//!
//! Subgroups are found by cyclic extension: start from the cyclic subgroups
//! and repeatedly join each known subgroup with each cyclic subgroup, until
//! no new subgroup appears. Every subgroup is a join of cyclic subgroups, so
//! the result is complete, including perfect subgroups such as `A5 < S5`.
//!
//! Subgroup ids follow the canonical order (order, then lexicographic member
//! list); each conjugacy class is represented by its least member.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use super::naming::structure_name;
use super::{prime_factors, p_part, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub id: usize,
    pub order: usize,
    pub members: BitSet,
    /// A generating set; not necessarily minimal.
    pub gens: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub label: String,
}

#[derive(Debug)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    group_gens: Vec<usize>,
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    normalizer: Vec<usize>,
    centralizer: Vec<usize>,
    maximals: Vec<usize>,
    frattini: usize,
    sylow: BTreeMap<usize, Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    cyclic_of: Vec<usize>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl SubgroupLattice {
    pub fn build(group: FiniteGroup) -> Result<Self> {
        Self::build_with_cap(group, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(group: FiniteGroup, cap: usize) -> Result<Self> {
        let n = group.order();
        if n > cap {
            return Err(Error::CapExceeded { what: "group order", size: n, cap });
        }

        // Cyclic subgroups, one generator each.
        let mut cyclic: Vec<(BitSet, usize)> = Vec::new();
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        for x in 0..n {
            let c = group.closure(&[x]);
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), cyclic.len());
                cyclic.push((c, x));
            }
        }

        let mut found: Vec<(BitSet, Vec<usize>)> =
            cyclic.iter().map(|(c, x)| (c.clone(), if *x == 0 { vec![] } else { vec![*x] })).collect();
        let mut known: HashMap<BitSet, usize> = seen;
        let mut queue: VecDeque<usize> = (0..found.len()).collect();
        while let Some(h) = queue.pop_front() {
            for (cmembers, x) in &cyclic {
                let (members, gens) = (&found[h].0, &found[h].1);
                if cmembers.is_subset(members) {
                    continue;
                }
                let joined = if group.normalizes(*x, members) {
                    group.extend_by_normalizing(members, *x)
                } else {
                    let mut g = gens.clone();
                    g.push(*x);
                    group.closure(&g)
                };
                if !known.contains_key(&joined) {
                    let mut g = gens.clone();
                    g.push(*x);
                    known.insert(joined.clone(), found.len());
                    queue.push_back(found.len());
                    found.push((joined, g));
                }
            }
        }

        found.sort_by(|a, b| a.0.count().cmp(&b.0.count()).then_with(|| a.0.cmp(&b.0)));
        let subgroups: Vec<Subgroup> = found
            .into_iter()
            .enumerate()
            .map(|(id, (members, gens))| Subgroup { id, order: members.count(), members, gens })
            .collect();
        let s = subgroups.len();
        let index: HashMap<BitSet, usize> = subgroups.iter().map(|h| (h.members.clone(), h.id)).collect();

        let group_gens = subgroups[s - 1].gens.clone();

        // Conjugacy classes: orbits under conjugation by the generators of G.
        let mut parent: Vec<usize> = (0..s).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for h in &subgroups {
            for &g in &group_gens {
                let k = index[&group.conjugate_set(g, &h.members)];
                let (a, b) = (find(&mut parent, h.id), find(&mut parent, k));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut class_of = vec![usize::MAX; s];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for h in 0..s {
            let root = find(&mut parent, h);
            if root == h {
                class_of[h] = classes.len();
                classes.push(ConjugacyClass { representative: h, members: vec![h], label: String::new() });
            } else {
                let c = class_of[root];
                class_of[h] = c;
                classes[c].members.push(h);
            }
        }
        let mut name_counts: HashMap<String, usize> = HashMap::new();
        for c in classes.iter_mut() {
            let base = structure_name(&group, &subgroups[c.representative].members);
            let k = name_counts.entry(base.clone()).or_default();
            *k += 1;
            c.label = format!("{base}#{k}");
        }

        let normalizer: Vec<usize> = subgroups
            .iter()
            .map(|h| index[&BitSet::from_indices(n, (0..n).filter(|&g| group.normalizes(g, &h.members)))])
            .collect();
        let centralizer: Vec<usize> = subgroups
            .iter()
            .map(|h| {
                let cent = (0..n).filter(|&g| h.gens.iter().all(|&x| group.mul(g, x) == group.mul(x, g)));
                index[&BitSet::from_indices(n, cent)]
            })
            .collect();

        let mut above = vec![BitSet::new(s); s];
        let mut below = vec![BitSet::new(s); s];
        for h in 0..s {
            for k in h..s {
                if subgroups[h].members.is_subset(&subgroups[k].members) {
                    above[h].insert(k);
                    below[k].insert(h);
                }
            }
        }

        let top = s - 1;
        let maximals: Vec<usize> =
            (0..top).filter(|&m| above[m].iter().all(|k| k == m || k == top)).collect();
        let frattini = if maximals.is_empty() {
            top
        } else {
            let mut inter = subgroups[maximals[0]].members.clone();
            for &m in &maximals[1..] {
                inter.intersect_with(&subgroups[m].members);
            }
            index[&inter]
        };

        let mut sylow = BTreeMap::new();
        for p in prime_factors(n) {
            let pp = p_part(n, p);
            sylow.insert(p, subgroups.iter().filter(|h| h.order == pp).map(|h| h.id).collect::<Vec<_>>());
        }

        let cyclic_of = (0..n).map(|x| index[&group.closure(&[x])]).collect();

        Ok(SubgroupLattice {
            group,
            group_gens,
            subgroups,
            index,
            class_of,
            classes,
            normalizer,
            centralizer,
            maximals,
            frattini,
            sylow,
            above,
            below,
            cyclic_of,
            mobius_rows: (0..s).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Generators of the whole group.
    pub fn group_gens(&self) -> &[usize] {
        &self.group_gens
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn order_of(&self, id: usize) -> usize {
        self.subgroups[id].order
    }

    pub fn members(&self, id: usize) -> &BitSet {
        &self.subgroups[id].members
    }

    pub fn id_of(&self, members: &BitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, id: usize) -> usize {
        self.class_of[id]
    }

    pub fn class_rep(&self, class: usize) -> usize {
        self.classes[class].representative
    }

    pub fn class_label(&self, class: usize) -> &str {
        &self.classes[class].label
    }

    pub fn class_labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    pub fn normalizer(&self, id: usize) -> usize {
        self.normalizer[id]
    }

    pub fn centralizer(&self, id: usize) -> usize {
        self.centralizer[id]
    }

    pub fn maximals(&self) -> &[usize] {
        &self.maximals
    }

    pub fn frattini(&self) -> usize {
        self.frattini
    }

    pub fn sylow(&self, p: usize) -> &[usize] {
        self.sylow.get(&p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn primes(&self) -> Vec<usize> {
        self.sylow.keys().copied().collect()
    }

    #[inline]
    pub fn leq(&self, h: usize, k: usize) -> bool {
        self.above[h].contains(k)
    }

    /// Ids of all `K >= H`.
    pub fn above(&self, h: usize) -> &BitSet {
        &self.above[h]
    }

    /// Ids of all `K <= H`.
    pub fn below(&self, h: usize) -> &BitSet {
        &self.below[h]
    }

    pub fn cyclic_of(&self, x: usize) -> usize {
        self.cyclic_of[x]
    }

    pub fn is_normal(&self, id: usize) -> bool {
        self.normalizer[id] == self.top()
    }

    /// Id of `g H g^{-1}`.
    pub fn conjugate(&self, g: usize, id: usize) -> usize {
        self.index[&self.group.conjugate_set(g, &self.subgroups[id].members)]
    }

    /// Whether some conjugate of `h` lies in `k`.
    pub fn subconjugate(&self, h: usize, k: usize) -> bool {
        self.classes[self.class_of[h]].members.iter().any(|&x| self.leq(x, k))
    }

    /// Poset Möbius value `mu(H, I)`; rows are memoized per lattice.
    pub fn moebius(&self, h: usize, i: usize) -> Result<i64> {
        if !self.leq(h, i) {
            return Err(Error::NotContained(h, i));
        }
        Ok(self.mobius_row(h)[i])
    }

    /// `mu(H, J)` for all `J`, zero outside the upper set of `H`.
    pub fn mobius_row(&self, h: usize) -> &[i64] {
        self.mobius_rows[h].get_or_init(|| {
            let s = self.subgroups.len();
            let mut row = vec![0i64; s];
            row[h] = 1;
            // Ids are sorted by order, so every J < I is visited before I.
            for i in self.above[h].iter().filter(|&i| i != h) {
                let mut sum = 0;
                for j in self.above[h].intersect(&self.below[i]).iter().filter(|&j| j != i) {
                    sum += row[j];
                }
                row[i] = -sum;
            }
            row
        })
    }

    /// Builds the subgroup `id` as a group in its own right, with its own
    /// lattice and the correspondence of subgroups.
    pub fn embed(self: &Arc<Self>, id: usize) -> Result<EmbeddedSubgroup> {
        let label = self.class_label(self.class_of(id)).to_string();
        let (group, embedding) = self.group.restrict(&self.subgroups[id].members, label)?;
        let lattice = Arc::new(SubgroupLattice::build_with_cap(group, usize::MAX)?);
        let n = self.group.order();
        let to_parent = lattice
            .subgroups
            .iter()
            .map(|k| self.index[&BitSet::from_indices(n, k.members.iter().map(|x| embedding[x]))])
            .collect();
        let mut from_parent = vec![usize::MAX; n];
        for (i, &g) in embedding.iter().enumerate() {
            from_parent[g] = i;
        }
        Ok(EmbeddedSubgroup { parent: Arc::clone(self), parent_id: id, lattice, embedding, from_parent, to_parent })
    }

    /// The quotient by the normal subgroup `id`.
    pub fn quotient(self: &Arc<Self>, id: usize) -> Result<Quotient> {
        if !self.is_normal(id) {
            return Err(Error::NotNormal(id));
        }
        let name = format!("{}/{}", self.group.name(), self.class_label(self.class_of(id)));
        let (group, projection) = self.group.quotient(&self.subgroups[id].members, name)?;
        let lattice = Arc::new(SubgroupLattice::build_with_cap(group, usize::MAX)?);
        let n = self.group.order();
        let preimage = lattice
            .subgroups
            .iter()
            .map(|k| self.index[&BitSet::from_indices(n, (0..n).filter(|&g| k.members.contains(projection[g])))])
            .collect();
        let m = lattice.group.order();
        let image = self
            .subgroups
            .iter()
            .map(|h| lattice.index[&BitSet::from_indices(m, h.members.iter().map(|g| projection[g]))])
            .collect();
        Ok(Quotient { parent: Arc::clone(self), normal: id, lattice, projection, preimage, image })
    }
}

/// A subgroup of a parent lattice's group, rebuilt as a standalone group.
#[derive(Debug, Clone)]
pub struct EmbeddedSubgroup {
    pub parent: Arc<SubgroupLattice>,
    pub parent_id: usize,
    pub lattice: Arc<SubgroupLattice>,
    /// Local element id -> parent element id.
    pub embedding: Vec<usize>,
    /// Parent element id -> local element id, `usize::MAX` outside.
    pub from_parent: Vec<usize>,
    /// Local subgroup id -> parent subgroup id.
    pub to_parent: Vec<usize>,
}

impl EmbeddedSubgroup {
    /// Local subgroup id of a parent subgroup contained in this one.
    pub fn local_id(&self, parent_subgroup: usize) -> Option<usize> {
        let members = self.parent.members(parent_subgroup);
        if !members.is_subset(self.parent.members(self.parent_id)) {
            return None;
        }
        let m = self.lattice.group().order();
        self.lattice.id_of(&BitSet::from_indices(m, members.iter().map(|g| self.from_parent[g])))
    }
}

/// `G/N` with the subgroup correspondence.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub parent: Arc<SubgroupLattice>,
    pub normal: usize,
    pub lattice: Arc<SubgroupLattice>,
    /// Parent element -> coset id.
    pub projection: Vec<usize>,
    /// Quotient subgroup `X/N` -> parent subgroup id of `X`.
    pub preimage: Vec<usize>,
    /// Parent subgroup `S` -> quotient subgroup id of `SN/N`.
    pub image: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::catalog_group;

    fn lattice(name: &str) -> Arc<SubgroupLattice> {
        Arc::new(SubgroupLattice::build(catalog_group(name).unwrap()).unwrap())
    }

    #[test]
    fn v4_lattice() {
        let l = lattice("V4");
        assert_eq!(l.len(), 5);
        assert_eq!(l.class_count(), 5);
        assert_eq!(l.maximals().len(), 3);
        assert_eq!(l.frattini(), 0);
        assert_eq!(l.class_labels(), vec!["1#1", "C2#1", "C2#2", "C2#3", "V4#1"]);
    }

    #[test]
    fn a4_lattice() {
        let l = lattice("A4");
        assert_eq!(l.len(), 10);
        assert_eq!(l.class_count(), 5);
        let orders: Vec<usize> = l.classes().iter().map(|c| l.order_of(c.representative)).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 12]);
        assert_eq!(l.sylow(2).len(), 1);
        assert_eq!(l.sylow(3).len(), 4);
    }

    #[test]
    fn s5_contains_perfect_subgroups() {
        let l = lattice("S5");
        assert_eq!(l.len(), 156);
        assert_eq!(l.class_count(), 19);
        assert!(l.subgroups().iter().any(|h| h.order == 60));
        let d8 = l.sylow(2)[0];
        assert_eq!(l.order_of(d8), 8);
        assert_eq!(l.sylow(2).len(), 15);
    }

    #[test]
    fn class_sizes_match_normalizer_index() {
        for name in ["S4", "D8", "Q8", "A5", "C2^3:C7"] {
            let l = lattice(name);
            let n = l.group().order();
            for c in l.classes() {
                let norm = l.order_of(l.normalizer(c.representative));
                assert_eq!(c.members.len() * norm, n, "{name}");
            }
        }
    }

    #[test]
    fn moebius_values() {
        let l = lattice("V4");
        assert_eq!(l.moebius(0, 0).unwrap(), 1);
        assert_eq!(l.moebius(0, 1).unwrap(), -1);
        assert_eq!(l.moebius(0, 4).unwrap(), 2);
        assert!(matches!(l.moebius(1, 2), Err(Error::NotContained(1, 2))));
    }

    #[test]
    fn embed_and_quotient() {
        let l = lattice("A4");
        let v4 = l.sylow(2)[0];
        let e = l.embed(v4).unwrap();
        assert_eq!(e.lattice.len(), 5);
        assert_eq!(e.to_parent[e.lattice.top()], v4);
        let q = l.quotient(v4).unwrap();
        assert_eq!(q.lattice.group().order(), 3);
        assert_eq!(q.preimage[0], v4);
        assert_eq!(q.image[l.top()], q.lattice.top());
    }
}
