//! Fusion systems on a p-group `S`, stored as explicit isomorphism sets.
//!
//! Every morphism of a fusion system is an isomorphism onto its image
//! followed by an inclusion, so only `Iso_F(P, Q)` is stored, keyed by the
//! pair of subgroup ids. `Hom_F(P, Q)` is assembled on demand.

pub mod descriptor;
pub mod local;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{p_part, prime_factors, EmbeddedSubgroup, GroupMap, SubgroupLattice};

pub use descriptor::{load_fusion, FusionDescriptor};
pub use local::LocalData;

#[derive(Clone, Debug)]
pub enum Origin {
    /// `F_S(G)`; the embedding records `S <= G`.
    Frobenius(EmbeddedSubgroup),
    /// Generated by `Inn(S)`-conjugation and the listed maps.
    Generated(Vec<GroupMap>),
}

/// Which subgroups a stability check restricts to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityMode {
    /// Every `P <= S`.
    AllSubgroups,
    /// `S` and the essential subgroups.
    EssentialsOnly,
}

#[derive(Debug)]
pub struct FusionSystem {
    name: String,
    lattice: Arc<SubgroupLattice>,
    prime: usize,
    origin: Origin,
    /// `isos[p][q]` = `Iso_F(P, Q)`, sorted.
    isos: Vec<BTreeMap<usize, Vec<GroupMap>>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    element_class_of: Vec<usize>,
    element_classes: Vec<Vec<usize>>,
    local: Vec<OnceLock<Arc<LocalData>>>,
    essentials: OnceLock<Vec<usize>>,
    stability_pairs: [OnceLock<Vec<(usize, usize)>>; 2],
}

impl FusionSystem {
    /// `F_S(G)` for a Sylow p-subgroup `S` of `G`, with `p` read off `|S|`.
    pub fn frobenius(g: &Arc<SubgroupLattice>, s: usize) -> Result<Self> {
        let order = g.order_of(s);
        let prime = match prime_factors(order).as_slice() {
            [p] => *p,
            _ => return Err(Error::NotSylow(s)),
        };
        Self::frobenius_at(g, s, prime)
    }

    /// `F_S(G)` for the canonical (least) Sylow p-subgroup.
    pub fn frobenius_at_prime(g: &Arc<SubgroupLattice>, prime: usize) -> Result<Self> {
        if prime_factors(prime) != [prime] {
            return Err(Error::Precondition(format!("{prime} is not a prime")));
        }
        let s = g.sylow(prime).first().copied().unwrap_or(g.trivial());
        Self::frobenius_at(g, s, prime)
    }

    fn frobenius_at(g: &Arc<SubgroupLattice>, s: usize, prime: usize) -> Result<Self> {
        let n = g.group().order();
        if g.order_of(s) != p_part(n, prime) {
            return Err(Error::NotSylow(s));
        }
        let emb = g.embed(s)?;
        let name = format!("F_{}({})", emb.lattice.group().name(), g.group().name());
        Ok(Self::frobenius_on(emb, prime, &BitSet::full(n), name))
    }

    /// `F_S(K)` for `S <= K <= G`, on the same lattice of `S` as `self`.
    pub fn frobenius_subsystem(&self, k: usize) -> Result<Self> {
        let Origin::Frobenius(emb) = &self.origin else {
            return Err(Error::Precondition("not a Frobenius fusion system".into()));
        };
        let g = &emb.parent;
        if !g.leq(emb.parent_id, k) {
            return Err(Error::NotContained(emb.parent_id, k));
        }
        let name = format!("F_{}({})", emb.lattice.group().name(), g.class_label(g.class_of(k)));
        Ok(Self::frobenius_on(emb.clone(), self.prime, g.members(k), name))
    }

    /// Morphisms are the conjugations by elements of `conjugators`.
    fn frobenius_on(emb: EmbeddedSubgroup, prime: usize, conjugators: &BitSet, name: String) -> Self {
        let g = emb.parent.clone();
        let s = emb.parent_id;
        let local = emb.lattice.clone();
        let group = g.group();
        let mut isos: Vec<BTreeMap<usize, BTreeSet<GroupMap>>> = vec![BTreeMap::new(); local.len()];
        for p in 0..local.len() {
            let parent_p = emb.to_parent[p];
            for x in conjugators.iter() {
                let image = g.conjugate(x, parent_p);
                if !g.leq(image, s) {
                    continue;
                }
                let q = emb.local_id(image).expect("image lies in S");
                let mut dense = vec![u32::MAX; local.group().order()];
                for y in local.members(p).iter() {
                    dense[y] = emb.from_parent[group.conj(x, emb.embedding[y])] as u32;
                }
                isos[p].entry(q).or_default().insert(GroupMap::from_dense(p, q, dense));
            }
        }
        Self::assemble(name, local, prime, Origin::Frobenius(emb), isos)
    }

    /// The smallest fusion system containing the `S`-conjugations and `gens`.
    pub fn generated(s: Arc<SubgroupLattice>, gens: Vec<GroupMap>, name: impl Into<String>) -> Result<Self> {
        let order = s.group().order();
        let prime = match prime_factors(order).as_slice() {
            [p] => *p,
            [] => 2,
            _ => return Err(Error::Precondition(format!("|S| = {order} is not a prime power"))),
        };
        for g in &gens {
            g.validate(&s)?;
        }
        let top = s.top();
        let mut elementary: Vec<GroupMap> =
            s.group_gens().iter().map(|&x| GroupMap::conjugation(&s, x, top, top)).collect();
        for g in &gens {
            elementary.push(g.clone().with_target(g.image(&s)));
            elementary.push(g.inverse(&s));
        }
        let mut isos: Vec<BTreeMap<usize, BTreeSet<GroupMap>>> = vec![BTreeMap::new(); s.len()];
        for p in 0..s.len() {
            let id = GroupMap::identity(&s, p);
            let mut seen: BTreeSet<GroupMap> = BTreeSet::from([id.clone()]);
            let mut queue = VecDeque::from([id]);
            while let Some(f) = queue.pop_front() {
                let q = f.target;
                for e in &elementary {
                    if !s.leq(q, e.source) {
                        continue;
                    }
                    let composed = e.compose(&f);
                    let target = composed.image(&s);
                    let composed = composed.with_target(target);
                    if seen.insert(composed.clone()) {
                        queue.push_back(composed);
                    }
                }
            }
            for f in seen {
                isos[p].entry(f.target).or_default().insert(f);
            }
        }
        Ok(Self::assemble(name.into(), s, prime, Origin::Generated(gens), isos))
    }

    /// `F_S(S)`.
    pub fn trivial(s: Arc<SubgroupLattice>) -> Result<Self> {
        let name = format!("F_{0}({0})", s.group().name());
        Self::generated(s, Vec::new(), name)
    }

    fn assemble(
        name: String,
        lattice: Arc<SubgroupLattice>,
        prime: usize,
        origin: Origin,
        isos: Vec<BTreeMap<usize, BTreeSet<GroupMap>>>,
    ) -> Self {
        let isos: Vec<BTreeMap<usize, Vec<GroupMap>>> =
            isos.into_iter().map(|m| m.into_iter().map(|(q, set)| (q, set.into_iter().collect())).collect()).collect();

        let (class_of, classes) = partition(lattice.len(), isos.iter().enumerate().flat_map(|(p, m)| m.keys().map(move |&q| (p, q))));
        let n = lattice.group().order();
        let element_pairs = (0..n).flat_map(|x| {
            let c = lattice.cyclic_of(x);
            isos[c].values().flatten().map(move |f| (x, f.apply(x))).collect::<Vec<_>>()
        });
        let (element_class_of, element_classes) = partition(n, element_pairs);
        let local = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        FusionSystem {
            name,
            lattice,
            prime,
            origin,
            isos,
            class_of,
            classes,
            element_class_of,
            element_classes,
            local,
            essentials: OnceLock::new(),
            stability_pairs: [OnceLock::new(), OnceLock::new()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// Number of F-conjugacy classes of subgroups.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// F-classes of subgroup ids, each sorted, ordered by least member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, p: usize) -> usize {
        self.class_of[p]
    }

    pub fn class_label(&self, class: usize) -> &str {
        let rep = self.classes[class][0];
        self.lattice.class_label(self.lattice.class_of(rep))
    }

    /// Element F-classes, each sorted, ordered by least member.
    pub fn element_classes(&self) -> &[Vec<usize>] {
        &self.element_classes
    }

    pub fn element_class_of(&self, x: usize) -> usize {
        self.element_class_of[x]
    }

    /// S-classes grouped by F-class: `s_classes[f]` lists the S-conjugacy
    /// classes of subgroups making up F-class `f`, ascending.
    pub fn s_classes(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|members| {
                let set: BTreeSet<usize> = members.iter().map(|&p| self.lattice.class_of(p)).collect();
                set.into_iter().collect()
            })
            .collect()
    }

    /// F-class of each S-class.
    pub fn f_class_of_s_class(&self) -> Vec<usize> {
        (0..self.lattice.class_count()).map(|k| self.class_of[self.lattice.class_rep(k)]).collect()
    }

    /// `Iso_F(P, Q)`.
    pub fn isos(&self, p: usize, q: usize) -> &[GroupMap] {
        self.isos[p].get(&q).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `(Q, Iso_F(P, Q))` for every `Q` F-conjugate to `P`.
    pub fn isos_from(&self, p: usize) -> impl Iterator<Item = (usize, &[GroupMap])> {
        self.isos[p].iter().map(|(&q, v)| (q, v.as_slice()))
    }

    /// `Hom_F(P, Q)`: isomorphisms onto subgroups of `Q`, with target `Q`.
    pub fn homs(&self, p: usize, q: usize) -> Vec<GroupMap> {
        self.isos[p]
            .iter()
            .filter(|(&r, _)| self.lattice.leq(r, q))
            .flat_map(|(_, maps)| maps.iter().map(|f| f.clone().with_target(q)))
            .collect()
    }

    /// `Aut_F(P)`.
    pub fn automorphisms(&self, p: usize) -> &[GroupMap] {
        self.isos(p, p)
    }

    pub fn is_strongly_closed(&self, p: usize) -> bool {
        let members = self.lattice.members(p);
        members.iter().all(|x| self.element_classes[self.element_class_of[x]].iter().all(|&y| members.contains(y)))
    }

    /// `C_S(Q) <= Q` for every `Q` F-conjugate to `P`.
    pub fn is_centric(&self, p: usize) -> bool {
        self.classes[self.class_of[p]].iter().all(|&q| self.lattice.leq(self.lattice.centralizer(q), q))
    }

    /// Whether all `S`-conjugations generate the system, i.e. `F = F_S(S)`.
    pub fn is_trivial(&self) -> bool {
        (0..self.lattice.len()).all(|p| {
            let aut_s = self.lattice.order_of(self.lattice.normalizer(p)) / self.lattice.order_of(self.lattice.centralizer(p));
            self.automorphisms(p).len() == aut_s && self.isos[p].keys().all(|&q| self.lattice.class_of(q) == self.lattice.class_of(p))
        })
    }

    pub fn local(&self, p: usize) -> Result<Arc<LocalData>> {
        if let Some(d) = self.local[p].get() {
            return Ok(d.clone());
        }
        let data = Arc::new(LocalData::build(self, p)?);
        Ok(self.local[p].get_or_init(|| data).clone())
    }

    /// All proper subgroups that are F-centric and whose `Out_F(P)` has a
    /// strongly p-embedded subgroup.
    pub fn essentials(&self) -> Result<Vec<usize>> {
        if let Some(e) = self.essentials.get() {
            return Ok(e.clone());
        }
        let mut found = Vec::new();
        for p in 0..self.lattice.top() {
            if !self.is_centric(p) {
                continue;
            }
            if self.local(p)?.has_strongly_embedded_subgroup(self.prime)? {
                found.push(p);
            }
        }
        Ok(self.essentials.get_or_init(|| found).clone())
    }

    /// Pairs of S-classes `(a, b)` such that an element of `B(S)` is stable
    /// in the given mode iff its marks agree on every pair: for each visited
    /// `P`, each `α` in `Aut_F(P)` and each `Q <= P`, the classes of `Q`
    /// and `α(Q)`.
    pub fn stability_pairs(&self, mode: StabilityMode) -> Result<&[(usize, usize)]> {
        let slot = match mode {
            StabilityMode::AllSubgroups => 0,
            StabilityMode::EssentialsOnly => 1,
        };
        if let Some(v) = self.stability_pairs[slot].get() {
            return Ok(v);
        }
        let visited: Vec<usize> = match mode {
            StabilityMode::AllSubgroups => (0..self.lattice.len()).collect(),
            StabilityMode::EssentialsOnly => {
                let mut v = self.essentials()?;
                v.push(self.lattice.top());
                v
            }
        };
        let l = &self.lattice;
        let mut pairs = BTreeSet::new();
        for p in visited {
            let below: Vec<usize> = l.below(p).iter().collect();
            for alpha in self.automorphisms(p) {
                for &q in &below {
                    let (a, b) = (l.class_of(q), l.class_of(alpha.apply_subgroup(l, q)));
                    if a != b {
                        pairs.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
        Ok(self.stability_pairs[slot].get_or_init(|| pairs.into_iter().collect()))
    }

    /// Pairs of S-classes that must carry equal marks in `B(F)`: each
    /// F-class's S-classes chained to its first one.
    pub fn f_class_pairs(&self) -> Vec<(usize, usize)> {
        self.s_classes().iter().flat_map(|cs| cs[1..].iter().map(move |&k| (cs[0], k))).collect()
    }

    /// Morphism-level equality with another system on the same lattice.
    pub fn same_morphisms(&self, other: &FusionSystem) -> bool {
        self.lattice.len() == other.lattice.len() && self.isos == other.isos
    }

    /// Every morphism of `self` is one of `other`.
    pub fn is_subsystem_of(&self, other: &FusionSystem) -> bool {
        self.isos.iter().zip(&other.isos).all(|(mine, theirs)| {
            mine.iter().all(|(q, maps)| theirs.get(q).is_some_and(|t| maps.iter().all(|f| t.binary_search(f).is_ok())))
        })
    }

    /// Checks the stored data against the category axioms: inclusion of the
    /// S-conjugations, closure under composition and restriction, and
    /// `Iso_F(P, Q)` having image exactly `Q`.
    pub fn check_axioms(&self) -> Result<()> {
        let l = &self.lattice;
        let n = l.group().order();
        for p in 0..l.len() {
            for g in 0..n {
                let q = l.conjugate(g, p);
                let c = GroupMap::conjugation(l, g, p, q);
                if self.isos(p, q).binary_search(&c).is_err() {
                    return Err(Error::Invariant(format!("S-conjugation by {g} on subgroup {p} missing")));
                }
            }
            for (q, maps) in self.isos_from(p) {
                for f in maps {
                    if f.image(l) != q {
                        return Err(Error::Invariant(format!("map {p} -> {q} has the wrong image")));
                    }
                    for r in l.below(p).iter() {
                        let res = f.restrict(l, r);
                        let img = res.image(l);
                        if self.isos(r, img).binary_search(&res.with_target(img)).is_err() {
                            return Err(Error::Invariant(format!("restriction of {p} -> {q} to {r} missing")));
                        }
                    }
                    for (t, next) in self.isos_from(q) {
                        for h in next {
                            if self.isos(p, t).binary_search(&h.compose(f)).is_err() {
                                return Err(Error::Invariant(format!("composite {p} -> {q} -> {t} missing")));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Union-find partition of `0..n` generated by `pairs`; classes sorted and
/// ordered by least member.
fn partition(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        if r == x {
            class_of[x] = classes.len();
            classes.push(vec![x]);
        } else {
            class_of[x] = class_of[r];
            classes[class_of[r]].push(x);
        }
    }
    (class_of, classes)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::group::catalog::{catalog_group, gl3_frobenius, gl3_order7};
    use crate::group::BitMatrix;

    fn lattice(name: &str) -> Arc<SubgroupLattice> {
        Arc::new(SubgroupLattice::build(catalog_group(name).unwrap()).unwrap())
    }

    fn frobenius(name: &str, p: usize) -> FusionSystem {
        FusionSystem::frobenius_at_prime(&lattice(name), p).unwrap()
    }

    /// Number of G-classes meeting the subgroups of `S`, read off `G`'s lattice.
    fn g_class_count(g: &SubgroupLattice, s: usize) -> usize {
        g.below(s).iter().map(|h| g.class_of(h)).collect::<BTreeSet<_>>().len()
    }

    #[test]
    fn frobenius_class_counts_match_g_conjugacy() {
        for (name, expected) in [("A4", 3), ("C2^3:C7", 4), ("S4", 7), ("C2^4:C7", 13), ("C2^4:(C7:C3)", 11)] {
            let g = lattice(name);
            let f = FusionSystem::frobenius_at_prime(&g, 2).unwrap();
            assert_eq!(f.class_count(), expected, "{name}");
            assert_eq!(g_class_count(&g, g.sylow(2)[0]), expected, "{name}");
        }
    }

    #[test]
    fn maximal_classes_in_c2_4() {
        for name in ["C2^4:C7", "C2^4:(C7:C3)"] {
            let f = frobenius(name, 2);
            let l = f.lattice();
            let classes: BTreeSet<usize> = l.maximals().iter().map(|&m| f.class_of(m)).collect();
            assert_eq!(classes.len(), 3, "{name}");
        }
    }

    #[test]
    fn element_classes_of_a4() {
        let f = frobenius("A4", 2);
        assert_eq!(f.element_classes().len(), 2);
        assert_eq!(f.element_classes()[1].len(), 3);
    }

    #[test]
    fn automizers_of_c2_3() {
        let f1 = frobenius("C2^3:C7", 2);
        let f2 = frobenius("C2^3:(C7:C3)", 2);
        let top = f1.lattice().top();
        assert_eq!(f1.local(top).unwrap().aut_order(), 7);
        assert_eq!(f2.local(top).unwrap().aut_order(), 21);
        assert!(f1.local(top).unwrap().fully_automized);
        assert!(f2.local(top).unwrap().fully_automized);
    }

    #[test]
    fn axioms_hold() {
        for f in [frobenius("A4", 2), frobenius("S4", 2), frobenius("S4", 3), frobenius("C2^3:C7", 2), frobenius("S3", 3)] {
            f.check_axioms().unwrap();
            for p in 0..f.lattice().len() {
                let d = f.local(p).unwrap();
                assert_eq!(d.out_order() * d.inner.count(), d.aut_order());
                if d.fully_automized {
                    assert_ne!((d.out_order() / d.out_s.count()) % f.prime(), 0);
                }
            }
        }
    }

    #[test]
    fn frobenius_rejects_non_sylow() {
        let g = lattice("S4");
        let c2 = (0..g.len()).find(|&h| g.order_of(h) == 2).unwrap();
        assert!(matches!(FusionSystem::frobenius(&g, c2), Err(Error::NotSylow(_))));
    }

    #[test]
    fn strong_closure() {
        let f = frobenius("A4", 2);
        let l = f.lattice();
        assert!(f.is_strongly_closed(l.top()));
        assert!(f.is_strongly_closed(l.trivial()));
        assert!(l.maximals().iter().all(|&m| !f.is_strongly_closed(m)));

        let f = frobenius("S4", 2);
        let l = f.lattice();
        let normal_v4: Vec<usize> = (0..l.len())
            .filter(|&h| l.order_of(h) == 4 && f.is_strongly_closed(h))
            .collect();
        assert_eq!(normal_v4.len(), 1);
        assert!(!l.group().is_abelian() || l.order_of(normal_v4[0]) == 4);
    }

    #[test]
    fn essentials() {
        let f = frobenius("S4", 2);
        let e = f.essentials().unwrap();
        assert_eq!(e.len(), 1);
        let l = f.lattice();
        assert_eq!(l.order_of(e[0]), 4);
        assert!(f.is_strongly_closed(e[0]));
        assert_eq!(f.local(e[0]).unwrap().out_order(), 6);
        // The other Klein four-subgroup has Out_F of order 2.
        let g = l.group();
        let other: Vec<usize> = (0..l.len())
            .filter(|&h| h != e[0] && l.order_of(h) == 4 && l.members(h).iter().all(|x| g.element_order(x) <= 2))
            .collect();
        assert_eq!(other.len(), 1);
        assert_eq!(f.local(other[0]).unwrap().out_order(), 2);
        for name in ["A4", "C2^3:C7", "C2^4:(C7:C3)"] {
            assert!(frobenius(name, 2).essentials().unwrap().is_empty(), "{name}");
        }
        assert!(FusionSystem::trivial(lattice("D8")).unwrap().essentials().unwrap().is_empty());
    }

    #[test]
    fn trivial_system() {
        let f = FusionSystem::trivial(lattice("V4")).unwrap();
        assert_eq!(f.class_count(), 5);
        assert!(f.is_trivial());
        assert!(!frobenius("A4", 2).is_trivial());
        f.check_axioms().unwrap();
    }

    /// Builds the generators of `F_S(C2^k ⋊ A)` from the matrices, reading
    /// each element's vector off the semidirect-product labels.
    fn matrix_generated(name: &str, mats: &[BitMatrix]) -> (FusionSystem, FusionSystem) {
        let g = lattice(name);
        let f = FusionSystem::frobenius_at_prime(&g, 2).unwrap();
        let Origin::Frobenius(emb) = f.origin() else { unreachable!() };
        let labels = g.group().labels().unwrap();
        let vector = |local: usize| {
            let label = &labels[emb.embedding[local]];
            let bits = label.split('|').next().unwrap();
            bits.chars().enumerate().filter(|(_, c)| *c == '1').fold(0u32, |acc, (i, _)| acc | 1 << i)
        };
        let s = emb.lattice.clone();
        let n = s.group().order();
        let by_vector: std::collections::HashMap<u32, usize> = (0..n).map(|x| (vector(x), x)).collect();
        let gens = mats
            .iter()
            .map(|m| {
                let images: Vec<usize> = (0..n).map(|x| by_vector[&m.apply(vector(x))]).collect();
                GroupMap::new(&s, s.top(), s.top(), &images).unwrap()
            })
            .collect();
        let generated = FusionSystem::generated(s, gens, "gen").unwrap();
        (f, generated)
    }

    #[test]
    fn generated_matches_frobenius_on_semidirect_products() {
        let one = BitMatrix::identity(1);
        let cases = [
            ("C2^3:C7", vec![gl3_order7()]),
            ("C2^3:(C7:C3)", vec![gl3_order7(), gl3_frobenius()]),
            ("C2^4:C7", vec![gl3_order7().direct_sum(&one)]),
            ("C2^4:(C7:C3)", vec![gl3_order7().direct_sum(&one), gl3_frobenius().direct_sum(&one)]),
        ];
        for (name, mats) in cases {
            let (f, g) = matrix_generated(name, &mats);
            assert!(f.same_morphisms(&g), "{name}");
            assert_eq!(f.element_classes(), g.element_classes());
        }
    }

    #[test]
    fn closure_is_idempotent() {
        for f in [frobenius("S4", 2), frobenius("A4", 2)] {
            let l = f.lattice().clone();
            let all: Vec<GroupMap> = (0..l.len()).flat_map(|p| f.isos_from(p).flat_map(|(_, m)| m.to_vec()).collect::<Vec<_>>()).collect();
            let again = FusionSystem::generated(l, all, "again").unwrap();
            assert!(again.same_morphisms(&f));
        }
    }

    #[test]
    fn subsystems() {
        let f1 = frobenius("C2^3:C7", 2);
        let (_, f2) = matrix_generated("C2^3:(C7:C3)", &[gl3_order7(), gl3_frobenius()]);
        let trivial = FusionSystem::trivial(f2.lattice().clone()).unwrap();
        assert!(trivial.is_subsystem_of(&f2));
        assert!(!f2.is_subsystem_of(&trivial));
        assert_eq!(f1.class_count(), 4);
    }

    #[test]
    fn descriptors() {
        let d = FusionDescriptor::parse("frobenius:A4:2").unwrap();
        assert_eq!(load_fusion(&d, 512).unwrap().class_count(), 3);
        let d = FusionDescriptor::parse(r#"{"mode":"frobenius","G":{"kind":"catalog","name":"S4"},"sylow":2}"#).unwrap();
        assert_eq!(load_fusion(&d, 512).unwrap().class_count(), 7);
        let d = FusionDescriptor::parse(r#"{"mode":"generated","S":"catalog:V4","automorphisms":[]}"#).unwrap();
        assert_eq!(load_fusion(&d, 512).unwrap().class_count(), 5);
        let d = FusionDescriptor::parse("trivial:C4").unwrap();
        assert_eq!(load_fusion(&d, 512).unwrap().class_count(), 3);
        let bad = FusionDescriptor::parse(r#"{"mode":"generated","S":"catalog:V4","automorphisms":[[0,0,0,0]]}"#).unwrap();
        assert!(matches!(load_fusion(&bad, 512), Err(Error::NotInjectiveHom(_))));
    }
}
