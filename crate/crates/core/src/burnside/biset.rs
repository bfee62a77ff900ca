//! Elementary biset operations on ghost coordinates.
//!
//! With `S^g = g^{-1} S g`:
//!
//! | map | coordinate at `S` |
//! |-----|-------------------|
//! | `Res^G_H`  | `n_S` |
//! | `Ind^G_H`  | `sum over SgH in S\G/H with S^g <= H of n_{S^g}` |
//! | `Ten^G_H`  | `prod over SgH in S\G/H of n_{S^g ∩ H}` |
//! | `Inf^G_{G/N}` | `n_{SN/N}` |
//! | `Def^G_{G/N}` | `n_X` at `X/N` (the fixed points under `N`) |
//! | `Iso(γ)`   | `n_{γ^{-1}(S)}` |

use num_bigint::BigInt;
use num_traits::One;

use super::MarkVector;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{EmbeddedSubgroup, Quotient, SubgroupLattice};

#[derive(Clone, Copy, Debug)]
pub enum BisetMapKind<'a> {
    /// `B(G) -> B(H)`.
    Res(&'a EmbeddedSubgroup),
    /// `B(H) -> B(G)`.
    Ind(&'a EmbeddedSubgroup),
    /// Tensor induction `B(H) -> B(G)`, multiplicative.
    Ten(&'a EmbeddedSubgroup),
    /// `B(G/N) -> B(G)`.
    Inf(&'a Quotient),
    /// `B(G) -> B(G/N)`.
    Def(&'a Quotient),
    /// Transport along an isomorphism `γ: source -> target`, given on elements.
    Iso { source: &'a SubgroupLattice, target: &'a SubgroupLattice, map: &'a [usize] },
}

fn expect_len(v: &MarkVector, lattice: &SubgroupLattice) -> Result<()> {
    if v.len() != lattice.class_count() {
        return Err(Error::Dimension { expected: lattice.class_count(), got: v.len() });
    }
    Ok(())
}

pub fn ghost_biset(kind: BisetMapKind<'_>, v: &MarkVector) -> Result<MarkVector> {
    match kind {
        BisetMapKind::Res(h) => {
            expect_len(v, &h.parent)?;
            let values = h
                .lattice
                .classes()
                .iter()
                .map(|c| v.values[h.parent.class_of(h.to_parent[c.representative])].clone())
                .collect();
            Ok(MarkVector { values })
        }
        BisetMapKind::Ind(h) | BisetMapKind::Ten(h) => {
            expect_len(v, &h.lattice)?;
            let tensor = matches!(kind, BisetMapKind::Ten(_));
            let parent = &h.parent;
            let group = parent.group();
            let h_members = parent.members(h.parent_id);
            let values = parent
                .classes()
                .iter()
                .map(|c| {
                    let s = c.representative;
                    let reps = group.double_coset_reps(parent.members(s), h_members);
                    let mut acc = if tensor { BigInt::one() } else { BigInt::from(0) };
                    for g in reps {
                        let sg = parent.conjugate(group.inv(g), s);
                        if tensor {
                            let meet = parent.members(sg).intersect(h_members);
                            let id = parent.id_of(&meet).expect("intersection of subgroups");
                            acc *= &v.values[local_class(h, id)];
                        } else if parent.leq(sg, h.parent_id) {
                            acc += &v.values[local_class(h, sg)];
                        }
                    }
                    acc
                })
                .collect();
            Ok(MarkVector { values })
        }
        BisetMapKind::Inf(q) => {
            expect_len(v, &q.lattice)?;
            let values = q
                .parent
                .classes()
                .iter()
                .map(|c| v.values[q.lattice.class_of(q.image[c.representative])].clone())
                .collect();
            Ok(MarkVector { values })
        }
        BisetMapKind::Def(q) => {
            expect_len(v, &q.parent)?;
            let values = q
                .lattice
                .classes()
                .iter()
                .map(|c| v.values[q.parent.class_of(q.preimage[c.representative])].clone())
                .collect();
            Ok(MarkVector { values })
        }
        BisetMapKind::Iso { source, target, map } => {
            expect_len(v, source)?;
            check_isomorphism(source, target, map)?;
            let n = source.group().order();
            let mut inverse = vec![0; n];
            for (x, &y) in map.iter().enumerate() {
                inverse[y] = x;
            }
            let values = target
                .classes()
                .iter()
                .map(|c| {
                    let pre = BitSet::from_indices(n, target.members(c.representative).iter().map(|y| inverse[y]));
                    let id = source.id_of(&pre).expect("preimage of a subgroup");
                    v.values[source.class_of(id)].clone()
                })
                .collect();
            Ok(MarkVector { values })
        }
    }
}

fn local_class(h: &EmbeddedSubgroup, parent_subgroup: usize) -> usize {
    let local = h.local_id(parent_subgroup).expect("subgroup of H");
    h.lattice.class_of(local)
}

fn check_isomorphism(source: &SubgroupLattice, target: &SubgroupLattice, map: &[usize]) -> Result<()> {
    let (g, h) = (source.group(), target.group());
    let n = g.order();
    if map.len() != n || h.order() != n {
        return Err(Error::Precondition("isomorphism between groups of different orders".into()));
    }
    let mut seen = BitSet::new(n);
    if !map.iter().all(|&y| y < n && seen.insert(y)) {
        return Err(Error::NotInjectiveHom("transport map is not a bijection".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return Err(Error::NotInjectiveHom(format!("transport map fails at ({a},{b})")));
            }
        }
    }
    Ok(())
}
