//! `F = F_S(G)`: the image of restriction, the star product and transfer
//! `t^G_S`, units for a normal Sylow subgroup, and realizability by G-sets.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::bitset::BitSet;
use crate::burnside::{congruence_member, ghost_biset, unit_group, BisetMapKind, BurnsideElement, MarkVector, MarksTable, UnitGroup};
use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, Origin};
use crate::group::{p_part, EmbeddedSubgroup, SubgroupLattice};
use crate::linalg::IntLattice;
use crate::stable::{StableLattice, StableRing};

#[derive(Debug)]
pub struct FrobeniusContext {
    g: Arc<SubgroupLattice>,
    g_table: MarksTable,
    embedding: EmbeddedSubgroup,
    ring: StableRing,
    normalizer: usize,
    /// Per G-class: the S-subgroup id used as "a Sylow subgroup of H inside S".
    sylow_map: Vec<usize>,
}

impl FrobeniusContext {
    pub fn new(g: Arc<SubgroupLattice>, prime: usize) -> Result<Self> {
        let fusion = FusionSystem::frobenius_at_prime(&g, prime)?;
        Self::from_fusion(fusion)
    }

    pub fn from_fusion(fusion: FusionSystem) -> Result<Self> {
        let Origin::Frobenius(embedding) = fusion.origin().clone() else {
            return Err(Error::Precondition("not a Frobenius fusion system".into()));
        };
        let g = embedding.parent.clone();
        let prime = fusion.prime();
        let s = embedding.parent_id;
        let sylow_map = g
            .classes()
            .iter()
            .map(|class| {
                class
                    .members
                    .iter()
                    .find_map(|&h| sylow_inside(&g, h, s, prime))
                    .and_then(|p| embedding.local_id(p))
                    .ok_or_else(|| Error::Invariant(format!("class {} has no Sylow subgroup inside S", class.label)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FrobeniusContext {
            g_table: MarksTable::new(g.clone()),
            normalizer: g.normalizer(s),
            g,
            embedding,
            ring: StableRing::new(Arc::new(fusion)),
            sylow_map,
        })
    }

    pub fn group_lattice(&self) -> &Arc<SubgroupLattice> {
        &self.g
    }

    pub fn group_table(&self) -> &MarksTable {
        &self.g_table
    }

    pub fn ring(&self) -> &StableRing {
        &self.ring
    }

    pub fn fusion(&self) -> &FusionSystem {
        self.ring.fusion()
    }

    pub fn s_table(&self) -> &MarksTable {
        self.ring.table()
    }

    pub fn embedding(&self) -> &EmbeddedSubgroup {
        &self.embedding
    }

    /// `N_G(S)` as a subgroup id of `G`.
    pub fn normalizer(&self) -> usize {
        self.normalizer
    }

    pub fn sylow_map(&self) -> &[usize] {
        &self.sylow_map
    }

    /// Every `(H, P)` with `H` in G-class `k` and `P` a Sylow subgroup of `H`
    /// contained in `S`, as S-subgroup ids of `P`.
    pub fn sylow_choices(&self, k: usize) -> Vec<usize> {
        let g = &self.g;
        let s = self.embedding.parent_id;
        let p = self.fusion().prime();
        let mut out = Vec::new();
        for &h in &g.classes()[k].members {
            let target = p_part(g.order_of(h), p);
            for q in g.below(h).intersect(g.below(s)).iter().filter(|&q| g.order_of(q) == target) {
                out.push(self.embedding.local_id(q).expect("inside S"));
            }
        }
        out
    }

    /// `Res^G_S` on `B(G)`.
    pub fn restrict(&self, a: &BurnsideElement) -> Result<BurnsideElement> {
        let marks = ghost_biset(BisetMapKind::Res(&self.embedding), &self.g_table.mark(a))?;
        self.s_table().from_marks(&marks)
    }

    /// The span of `Res^G_S[G/H]`, checked against `B(F)`.
    pub fn restriction_image(&self) -> Result<StableLattice> {
        let gens = (0..self.g_table.class_count())
            .map(|k| self.restrict(&self.g_table.transitive(k)).map(|b| b.coefficients))
            .collect::<Result<Vec<_>>>()?;
        let lattice = IntLattice::from_generators(self.s_table().class_count(), &gens);
        let stable = self.ring.stable_lattice()?;
        if lattice != stable.lattice {
            return Err(Error::Invariant("restriction image differs from the stable lattice".into()));
        }
        Ok(stable)
    }

    /// Marks of `a ∗ b`: `|a^H| |b^P|` with `P` from the Sylow map.
    pub fn star_marks(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<MarkVector> {
        let bm = self.s_table().mark(b);
        if !self.ring.marks_are_f_constant(&bm) {
            return Err(Error::StabilityRequired);
        }
        let am = self.g_table.mark(a);
        let s = self.fusion().lattice();
        let values =
            (0..self.g_table.class_count()).map(|k| &am.values[k] * &bm.values[s.class_of(self.sylow_map[k])]).collect();
        Ok(MarkVector { values })
    }

    pub fn star(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        let marks = self.star_marks(a, b)?;
        if !congruence_member(&self.g, &marks) {
            return Err(Error::Invariant("star product fails the congruences".into()));
        }
        self.g_table.from_marks(&marks)
    }

    /// `t^G_S(b) = 1 ∗ b`.
    pub fn transfer(&self, b: &BurnsideElement) -> Result<BurnsideElement> {
        self.star(&self.g_table.one(), b)
    }

    pub fn bouc_check(&self) -> Result<BoucReport> {
        let s = self.embedding.parent_id;
        if !self.g.is_normal(s) {
            return Err(Error::NotNormal(s));
        }
        let g_units = unit_group(&self.g_table)?;
        let fixed = self.ring.out_fixed_units_of_s()?;
        let res_signs = |signs: &BitSet| -> Result<BitSet> {
            ghost_biset(BisetMapKind::Res(&self.embedding), &MarkVector::from_signs(signs))?
                .as_signs()
                .ok_or_else(|| Error::Invariant("restricted unit is not ±1".into()))
        };
        let ten_signs = |signs: &BitSet| -> Result<BitSet> {
            ghost_biset(BisetMapKind::Ten(&self.embedding), &MarkVector::from_signs(signs))?
                .as_signs()
                .ok_or_else(|| Error::Invariant("tensor-induced unit is not ±1".into()))
        };

        let restricted = g_units.basis().iter().map(|u| res_signs(&u.signs)).collect::<Result<Vec<_>>>()?;
        let image = UnitGroup::from_signs(self.s_table(), restricted.clone())?;
        let restriction_bijective = image.same_group(&fixed) && g_units.rank() == fixed.rank();

        let mut ten_inverts = true;
        for (u, r) in g_units.basis().iter().zip(&restricted) {
            ten_inverts &= ten_signs(r)? == u.signs;
        }
        let mut transfer_matches_ten = true;
        for v in fixed.basis() {
            let t = ten_signs(&v.signs)?;
            ten_inverts &= res_signs(&t)? == v.signs;
            let transferred = self.transfer(&v.preimage)?;
            transfer_matches_ten &= self.g_table.mark(&transferred) == MarkVector::from_signs(&t);
        }
        Ok(BoucReport {
            group_unit_rank: g_units.rank(),
            fixed_unit_rank: fixed.rank(),
            restriction_bijective,
            tensor_induction_inverts: ten_inverts,
            transfer_matches_tensor_induction: transfer_matches_ten,
        })
    }

    /// For `N = N_G(S)` and `F' = F_S(N)`: whether `Res^N_S` maps `B(N)^×` onto
    /// `B(F)^×`, and whether `B(F)^× = B(F')^×`. The two always agree.
    pub fn normalizer_diagram(&self) -> Result<NormalizerReport> {
        let f = self.fusion();
        let f_prime = f.frobenius_subsystem(self.normalizer)?;
        let ring_prime = StableRing::new(Arc::new(f_prime));
        let units_f = self.ring.stable_units()?;
        let units_f_prime = ring_prime.stable_units()?;

        // Res^N_S(B(N)^×), carried to this S-lattice through G's elements.
        let n_emb = self.g.embed(self.normalizer)?;
        let n_table = MarksTable::new(n_emb.lattice.clone());
        let s_in_n = n_emb.local_id(self.embedding.parent_id).expect("S <= N");
        let sn_emb = n_emb.lattice.embed(s_in_n)?;
        let class_map = self.transport_classes(&n_emb, &sn_emb);
        let n_units = unit_group(&n_table)?;
        let mut image = Vec::new();
        for u in n_units.basis() {
            let r = ghost_biset(BisetMapKind::Res(&sn_emb), &u.marks())?
                .as_signs()
                .ok_or_else(|| Error::Invariant("restricted unit is not ±1".into()))?;
            image.push(BitSet::from_indices(class_map.len(), (0..class_map.len()).filter(|&c| r.contains(class_map[c]))));
        }
        let image = UnitGroup::from_signs(self.s_table(), image)?;
        let restriction_onto = image.same_group(&units_f);
        let units_agree = units_f.same_group(&units_f_prime);
        if restriction_onto != units_agree {
            return Err(Error::Invariant("restriction from N_G(S) and the normalizer subsystem disagree on units".into()));
        }
        let controls_fusion = f.same_morphisms(ring_prime.fusion());
        let abelian = f.lattice().group().is_abelian();
        if (abelian || controls_fusion) && !(restriction_onto && units_agree) {
            return Err(Error::Invariant("normalizer controls fusion but its units differ".into()));
        }
        Ok(NormalizerReport {
            normalizer_order: self.g.order_of(self.normalizer),
            normalizer_restriction_onto: restriction_onto,
            normalizer_units_agree: units_agree,
            controls_fusion,
            s_abelian: abelian,
            stable_unit_rank: units_f.rank(),
            normalizer_stable_unit_rank: units_f_prime.rank(),
        })
    }

    /// Class of this S-lattice -> class of `S` rebuilt inside `N`.
    fn transport_classes(&self, n_emb: &EmbeddedSubgroup, sn_emb: &EmbeddedSubgroup) -> Vec<usize> {
        let s_lat = self.fusion().lattice();
        let sn = &sn_emb.lattice;
        let m = sn.group().order();
        (0..s_lat.class_count())
            .map(|c| {
                let members = s_lat.members(s_lat.class_rep(c));
                let set = BitSet::from_indices(
                    m,
                    members.iter().map(|x| sn_emb.from_parent[n_emb.from_parent[self.embedding.embedding[x]]]),
                );
                sn.class_of(sn.id_of(&set).expect("same subgroup"))
            })
            .collect()
    }

    /// A G-set `X` with `Res^G_S X = b`, or `None` when none exists.
    pub fn genuine_witness(&self, b: &BurnsideElement) -> Result<Option<BurnsideElement>> {
        let marks = self.s_table().mark(b);
        if marks.values.iter().any(|v| v.is_negative()) {
            return Err(Error::Precondition("marks must be non-negative".into()));
        }
        if b.coefficients.iter().any(|c| c.is_negative()) {
            return Ok(None);
        }
        let budget = marks.values[0].to_i64().ok_or_else(|| Error::Precondition("budget too large".into()))?;
        let target: Vec<i64> = b.coefficients.iter().map(|c| c.to_i64().unwrap_or(i64::MAX)).collect();
        let g_order = self.g.group().order() as i64;
        let mut classes: Vec<(i64, usize, Vec<i64>)> = Vec::new();
        for k in 0..self.g_table.class_count() {
            let index = g_order / self.g.order_of(self.g.class_rep(k)) as i64;
            if index > budget {
                continue;
            }
            let r = self.restrict(&self.g_table.transitive(k))?;
            classes.push((index, k, r.coefficients.iter().map(|c| c.to_i64().expect("small")).collect()));
        }
        classes.sort_by_key(|(index, k, _)| (std::cmp::Reverse(*index), *k));
        let mut chosen = vec![0i64; classes.len()];
        let found = search(&classes, 0, target, budget, &mut chosen);
        Ok(found.then(|| {
            let mut coefficients = vec![BigInt::zero(); self.g_table.class_count()];
            for ((_, k, _), &x) in classes.iter().zip(&chosen) {
                coefficients[*k] = BigInt::from(x);
            }
            BurnsideElement { coefficients }
        }))
    }
}

/// Depth-first search for non-negative multiplicities; `remaining` counts
/// points of `b` still to cover and every restricted orbit count must stay
/// non-negative.
fn search(classes: &[(i64, usize, Vec<i64>)], i: usize, rest: Vec<i64>, remaining: i64, chosen: &mut [i64]) -> bool {
    if remaining == 0 {
        return rest.iter().all(|&x| x == 0);
    }
    if i == classes.len() {
        return false;
    }
    let (index, _, r) = &classes[i];
    let mut max = remaining / index;
    for (a, b) in rest.iter().zip(r) {
        if *b > 0 {
            max = max.min(a / b);
        }
    }
    for x in (0..=max).rev() {
        let next: Vec<i64> = rest.iter().zip(r).map(|(a, b)| a - x * b).collect();
        chosen[i] = x;
        if search(classes, i + 1, next, remaining - x * index, chosen) {
            return true;
        }
    }
    chosen[i] = 0;
    false
}

/// A Sylow p-subgroup of `h` inside `s`, least id first.
fn sylow_inside(g: &SubgroupLattice, h: usize, s: usize, p: usize) -> Option<usize> {
    let target = p_part(g.order_of(h), p);
    g.below(h).intersect(g.below(s)).iter().find(|&q| g.order_of(q) == target)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoucReport {
    pub group_unit_rank: usize,
    pub fixed_unit_rank: usize,
    pub restriction_bijective: bool,
    pub tensor_induction_inverts: bool,
    pub transfer_matches_tensor_induction: bool,
}

impl BoucReport {
    pub fn holds(&self) -> bool {
        self.restriction_bijective && self.tensor_induction_inverts && self.transfer_matches_tensor_induction
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizerReport {
    pub normalizer_order: usize,
    /// `Res^N_S(B(N)^×) = B(F)^×`.
    pub normalizer_restriction_onto: bool,
    /// `B(F)^× = B(F_S(N))^×`.
    pub normalizer_units_agree: bool,
    pub controls_fusion: bool,
    pub s_abelian: bool,
    pub stable_unit_rank: usize,
    pub normalizer_stable_unit_rank: usize,
}

#[cfg(test)]
mod tests;
