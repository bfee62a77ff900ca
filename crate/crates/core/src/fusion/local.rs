//! `Aut_F(P)`, `Inn(P)`, `Aut_S(P)` and `Out_F(P)` for one subgroup.

use std::collections::HashMap;
use std::sync::Arc;

use super::FusionSystem;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{p_part, EmbeddedSubgroup, FiniteGroup, GroupMap, SubgroupLattice};

/// Largest `|Aut_F(P)|` for which a composition table is built.
pub const LOCAL_AUT_CAP: usize = 4096;

#[derive(Debug)]
pub struct LocalData {
    pub subgroup: usize,
    /// `P` as a standalone group with its own lattice.
    pub embedded: EmbeddedSubgroup,
    /// `Aut_F(P)` as maps on `S`'s elements; index 0 is the identity.
    pub aut: Vec<GroupMap>,
    /// Element `i` is `aut[i]`; `i * j` is `aut[i] ∘ aut[j]`.
    pub aut_group: FiniteGroup,
    pub inner: BitSet,
    pub aut_s: BitSet,
    pub out_group: FiniteGroup,
    /// Index into `aut` -> element of `out_group`.
    pub out_projection: Vec<usize>,
    /// Least `aut` index in each `Inn(P)`-coset, by `out_group` element.
    pub out_reps: Vec<usize>,
    pub out_s: BitSet,
    /// `class_action[a][c]`: local class of `aut[a]` applied to a
    /// representative of local class `c` of `P`.
    pub class_action: Vec<Vec<usize>>,
    pub fully_automized: bool,
}

impl LocalData {
    pub(crate) fn build(f: &FusionSystem, p: usize) -> Result<Self> {
        let l = f.lattice();
        let mut aut: Vec<GroupMap> = f.automorphisms(p).to_vec();
        if aut.len() > LOCAL_AUT_CAP {
            return Err(Error::CapExceeded { what: "Aut_F(P) composition table", size: aut.len(), cap: LOCAL_AUT_CAP });
        }
        let id_pos = aut.iter().position(GroupMap::is_identity).expect("identity in Aut_F(P)");
        aut.swap(0, id_pos);
        let index: HashMap<&[u32], usize> = aut.iter().enumerate().map(|(i, a)| (a.dense(), i)).collect();
        let table: Vec<Vec<usize>> =
            aut.iter().map(|a| aut.iter().map(|b| index[a.compose(b).dense()]).collect()).collect();
        let aut_group = FiniteGroup::from_table(format!("Aut_F({})", label(l, p)), table, LOCAL_AUT_CAP)?;

        let conj_index = |g: usize| index[GroupMap::conjugation(l, g, p, p).dense()];
        let inner = BitSet::from_indices(aut.len(), l.members(p).iter().map(conj_index));
        let aut_s = BitSet::from_indices(aut.len(), l.members(l.normalizer(p)).iter().map(conj_index));

        let (out_group, out_projection) = aut_group.quotient(&inner, format!("Out_F({})", label(l, p)))?;
        let mut out_reps = vec![usize::MAX; out_group.order()];
        for (a, &o) in out_projection.iter().enumerate().rev() {
            out_reps[o] = a;
        }
        let out_s = BitSet::from_indices(out_group.order(), aut_s.iter().map(|a| out_projection[a]));

        let embedded = l.embed(p)?;
        let local = &embedded.lattice;
        let class_action = aut
            .iter()
            .map(|a| {
                local
                    .classes()
                    .iter()
                    .map(|c| {
                        let q = embedded.to_parent[c.representative];
                        let image = embedded.local_id(a.apply_subgroup(l, q)).expect("automorphism of P");
                        local.class_of(image)
                    })
                    .collect()
            })
            .collect();
        let fully_automized = aut_s.count() == p_part(aut.len(), f.prime());
        Ok(LocalData {
            subgroup: p,
            embedded,
            aut,
            aut_group,
            inner,
            aut_s,
            out_group,
            out_projection,
            out_reps,
            out_s,
            class_action,
            fully_automized,
        })
    }

    /// The lattice of `P` itself.
    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.embedded.lattice
    }

    pub fn aut_order(&self) -> usize {
        self.aut.len()
    }

    pub fn out_order(&self) -> usize {
        self.out_group.order()
    }

    /// Whether `Out_F(P)` has a proper subgroup `H` with `p | |H|` and
    /// `p ∤ |H ∩ gHg^{-1}|` for every `g ∉ H`.
    pub fn has_strongly_embedded_subgroup(&self, prime: usize) -> Result<bool> {
        if !self.out_group.order().is_multiple_of(prime) {
            return Ok(false);
        }
        let lat = SubgroupLattice::build(self.out_group.clone())?;
        let group = lat.group();
        let found = (0..lat.top()).filter(|&h| lat.order_of(h) % prime == 0).any(|h| {
            let members = lat.members(h);
            (0..group.order())
                .filter(|&g| !members.contains(g))
                .all(|g| members.intersect(lat.members(lat.conjugate(g, h))).count() % prime != 0)
        });
        Ok(found)
    }
}

fn label(l: &SubgroupLattice, p: usize) -> String {
    l.class_label(l.class_of(p)).to_string()
}
